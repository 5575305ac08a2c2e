#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "omegapoint/certificate.hpp"
#include "support.hpp"

using namespace omegapoint;

namespace {

IntegerList make_list(std::initializer_list<long long> values) {
  IntegerList out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

CertificateInput input_of(std::initializer_list<long long> a, std::initializer_list<long long> b,
                          long long lower, long long upper) {
  return make_certificate_input(make_list(a), make_list(b), BigInt(lower), BigInt(upper));
}

}  // namespace

TEST_CASE("chi on hand-expanded windows") {
  CHECK(chi(input_of({1}, {1}, 0, 1)).chi == 1);
  CHECK(chi(input_of({1}, {2}, 0, 2)).chi == 0);
  CHECK(chi(input_of({1, 2}, {2, 9}, 0, 9)).chi == 1);
}

TEST_CASE("omega on hand-expanded windows") {
  CHECK(omega(input_of({1}, {1}, 0, 1)).omega == 1);
  CHECK(omega(input_of({1}, {2}, 1, 2)).omega == 0);
  // window of width zero, single matching element
  CHECK(omega(input_of({2}, {2}, 2, 2)).omega == 1);
}

TEST_CASE("direct pair count honors duplicates") {
  CHECK(direct_intersection_count(make_list({1, 2}), make_list({2, 9})) == 1);
  CHECK(direct_intersection_count(make_list({}), make_list({1})) == 0);
  CHECK(direct_intersection_count(make_list({2, 2}), make_list({2})) == 2);
}

TEST_CASE("certify cross-checks all three routes") {
  const auto full = certify(input_of({1, 4}, {0, 1, 2, 9}, 0, 9));
  CHECK(full.nonempty);
  CHECK(full.chi == 1);
  CHECK(full.omega > 0);
  CHECK(full.per_term_chi == make_list({1, 0}));

  const auto disjoint = certify(input_of({3}, {5}, 3, 5));
  CHECK_FALSE(disjoint.nonempty);
  CHECK(disjoint.chi == 0);
  CHECK(disjoint.omega == 0);

  const auto singleton = certify(input_of({1}, {1}, 1, 1));
  CHECK(singleton.nonempty);
  CHECK(singleton.chi == 1);
  CHECK(singleton.omega == 1);
}

TEST_CASE("certificate input validation") {
  CHECK_THROWS_AS(make_certificate_input(make_list({}), make_list({1})), MalformedInput);
  CHECK_THROWS_AS(make_certificate_input(make_list({1}), make_list({})), MalformedInput);
  // bounds that fail to enclose the data
  CHECK_THROWS_AS(chi(input_of({1}, {3}, 2, 3)), InvalidBounds);
  CHECK_THROWS_AS(chi(input_of({1}, {3}, 1, 2)), InvalidBounds);
  CHECK_THROWS_AS(certify(input_of({1}, {1}, 1, 0)), InvalidBounds);
  // window wider than the guard
  CHECK_THROWS_AS(omega(input_of({0}, {600}, 0, 600)), ResourceLimit);
  CHECK(omega(input_of({0}, {600}, 0, 600), 1024).omega == 0);
}

TEST_CASE("defaults pick the tightest window") {
  const auto in = make_certificate_input(make_list({4, -1}), make_list({7, 2}));
  CHECK(in.lower == -1);
  CHECK(in.upper == 7);
}

TEST_CASE("duplicates and negatives in both sets") {
  CHECK(certify(make_certificate_input(make_list({2, 2}), make_list({2}))).chi == 2);
  CHECK(certify(make_certificate_input(make_list({-3, -1}), make_list({-3, -3}))).chi == 2);
  CHECK(certify(make_certificate_input(make_list({-4, 0, -4}), make_list({-4, 1}))).chi == 2);
}

TEST_CASE("randomized agreement between formulas and the direct oracle") {
  std::mt19937_64 rng(0xCE2701);
  for (int round = 0; round < 200; ++round) {
    const IntegerList a_set = testsupport::random_list(rng, 1, 6, -6, 10);
    const IntegerList b_set = testsupport::random_list(rng, 1, 6, -6, 10);
    const CertificateInput in = make_certificate_input(a_set, b_set);
    const CertificateReport rep = certify(in);
    const BigInt direct = direct_intersection_count(a_set, b_set);

    CHECK(rep.chi == direct);
    CHECK(rep.omega >= 0);
    CHECK((rep.omega > 0) == (rep.chi > 0));

    // factorial-weight identity, per element
    REQUIRE(rep.per_term_chi.size() == a_set.size());
    for (std::size_t k = 0; k < a_set.size(); ++k) {
      const BigInt weight = factorial(to_u64(a_set[k] - in.lower)) *
                            factorial(to_u64(in.upper - a_set[k]));
      CHECK(rep.per_term_omega[k] == weight * rep.per_term_chi[k]);
    }

    // slack windows: chi is invariant, omega keeps its sign
    const CertificateInput slack =
        make_certificate_input(a_set, b_set, in.lower - 1, in.upper + 1);
    const CertificateReport slack_rep = certify(slack);
    CHECK(slack_rep.chi == rep.chi);
    CHECK((slack_rep.omega > 0) == (rep.omega > 0));
  }
}

TEST_CASE("per-term omega sums to the aggregate route") {
  std::mt19937_64 rng(0xCE2702);
  for (int round = 0; round < 50; ++round) {
    const IntegerList a_set = testsupport::random_list(rng, 1, 5, -8, 8);
    const IntegerList b_set = testsupport::random_list(rng, 1, 5, -8, 8);
    const CertificateReport rep = omega(make_certificate_input(a_set, b_set));
    BigInt sum = 0;
    for (const BigInt& term : rep.per_term_omega) sum += term;
    CHECK(sum == rep.omega);
  }
}
