#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omegapoint/bigint.hpp"
#include "omegapoint/errors.hpp"
#include "omegapoint/symmetric.hpp"

namespace omegapoint {

// Two nonempty integer lists plus an enclosing window [lower, upper]. The
// intersection formulas require lower <= min(A u B) and upper >= max(A u B);
// their cost is driven entirely by the window width, not by the list sizes.
struct CertificateInput {
  IntegerList a_set;
  IntegerList b_set;
  BigInt lower;
  BigInt upper;
};

namespace detail {

inline std::pair<BigInt, BigInt> min_max_over(const IntegerList& a, const IntegerList& b) {
  BigInt lo = a[0];
  BigInt hi = a[0];
  for (const IntegerList* list : {&a, &b}) {
    for (const BigInt& v : *list) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return {lo, hi};
}

}  // namespace detail

inline CertificateInput make_certificate_input(IntegerList a_set, IntegerList b_set,
                                               BigInt lower, BigInt upper) {
  if (a_set.empty() || b_set.empty())
    throw MalformedInput("both sets must contain at least one element");
  return {std::move(a_set), std::move(b_set), std::move(lower), std::move(upper)};
}

// Tightest valid window: exactly [min(A u B), max(A u B)]. Smaller windows
// mean smaller sigma tables, so this is the default when the caller does not
// insist on specific bounds.
inline CertificateInput make_certificate_input(IntegerList a_set, IntegerList b_set) {
  if (a_set.empty() || b_set.empty())
    throw MalformedInput("both sets must contain at least one element");
  auto [lo, hi] = detail::min_max_over(a_set, b_set);
  return {std::move(a_set), std::move(b_set), std::move(lo), std::move(hi)};
}

struct CertificateReport {
  BigInt chi{0};
  BigInt omega{0};
  bool nonempty = false;
  IntegerList per_term_chi;    // one entry per element of A
  IntegerList per_term_omega;  // (i-M)!(N-i)! times the chi entry, by construction
  BigInt window_width{0};
  std::size_t peak_bits = 0;   // largest integer met while evaluating
};

// Pair count |{(k, h) : a[k] == b[h]}| by direct comparison. This is the
// oracle the formula results are compared against; duplicates count once
// per matching pair.
inline BigInt direct_intersection_count(const IntegerList& a_set, const IntegerList& b_set) {
  BigInt count = 0;
  for (const BigInt& i : a_set)
    for (const BigInt& j : b_set)
      if (i == j) ++count;
  return count;
}

namespace detail {

// Shared state for one certificate evaluation: the sigma table of the
// window range and the power sums of B, both up to the window width.
class CertificateEngine {
 public:
  CertificateEngine(const CertificateInput& in, std::uint64_t guard) : in_(in) {
    if (in.a_set.empty() || in.b_set.empty())
      throw MalformedInput("both sets must contain at least one element");
    const auto [lo, hi] = min_max_over(in.a_set, in.b_set);
    if (in.lower > lo)
      throw InvalidBounds("window lower bound " + in.lower.str() +
                          " does not cover the minimum element " + lo.str());
    if (in.upper < hi)
      throw InvalidBounds("window upper bound " + in.upper.str() +
                          " does not cover the maximum element " + hi.str());
    const BigInt w = in.upper - in.lower;
    if (w > guard)
      throw ResourceLimit("window width " + w.str() + " exceeds guard " + std::to_string(guard),
                          w);
    guard_ = guard;
    width_ = to_u64(w);
    sigma_ = elementary_symmetric_range(in.lower, in.upper, guard);
    t_sums_ = power_sums(in.b_set, width_);
    for (const BigInt& v : sigma_) note_bits(v);
    for (const BigInt& v : t_sums_) note_bits(v);
  }

  std::uint64_t width() const { return width_; }
  std::size_t peak_bits() const { return peak_bits_; }

  // Inner double sum of the intersection formula for one element x:
  //   sum_{l=0}^{W} ( sum_{m=0}^{l} (-1)^m sigma_m x^{l-m} ) T_{W-l}
  // evaluated with the Horner-style recurrence c_l = c_{l-1} x + (-1)^l sigma_l,
  // so the whole thing is O(W) multiplications.
  BigInt inner_sum(const BigInt& x) {
    BigInt c = 1;
    BigInt acc = t_sums_[width_];
    for (std::uint64_t l = 1; l <= width_; ++l) {
      c *= x;
      if (l % 2 == 0)
        c += sigma_[l];
      else
        c -= sigma_[l];
      acc += c * t_sums_[width_ - l];
    }
    note_bits(acc);
    return acc;
  }

  // Signed numerator (-1)^{N+i} * inner(i) of one element of A. This is the
  // per-element omega contribution; divided by (i-M)!(N-i)! it is the
  // per-element chi contribution, and that division is exact.
  BigInt signed_numerator(const BigInt& i) {
    BigInt v = inner_sum(i);
    if (parity_sign(in_.upper + i) < 0) v = -v;
    return v;
  }

  BigInt exact_chi_term(const BigInt& i, const BigInt& numer) {
    const BigInt weight =
        factorial(to_u64(i - in_.lower), guard_) * factorial(to_u64(in_.upper - i), guard_);
    BigInt q, r;
    boost::multiprecision::divide_qr(numer, weight, q, r);
    if (r != 0)
      throw InternalInconsistency("chi term for element " + i.str() +
                                  " is not an exact multiple of its factorial weight");
    return q;
  }

  // Aggregate form of the certificate:
  //   omega = (-1)^N sum_{l=0}^{W} sum_{m=0}^{l} (-1)^m sigma_m S_{l-m} T_{W-l}
  // with S the signed power sums of A. Quadratic in the width; this is the
  // expensive object of study, not a bottleneck to engineer away.
  BigInt aggregated_omega() {
    const IntegerList s_sums = signed_power_sums(in_.a_set, width_);
    BigInt total = 0;
    for (std::uint64_t l = 0; l <= width_; ++l) {
      BigInt u = 0;
      for (std::uint64_t m = 0; m <= l; ++m) {
        const BigInt term = sigma_[m] * s_sums[l - m];
        if (m % 2 == 0)
          u += term;
        else
          u -= term;
      }
      total += u * t_sums_[width_ - l];
    }
    if (parity_sign(in_.upper) < 0) total = -total;
    note_bits(total);
    return total;
  }

  void note_bits(const BigInt& v) { peak_bits_ = std::max(peak_bits_, bit_length(v)); }

 private:
  const CertificateInput& in_;
  std::uint64_t guard_ = kDefaultMaxWindowWidth;
  std::uint64_t width_ = 0;
  IntegerList sigma_;
  IntegerList t_sums_;
  std::size_t peak_bits_ = 0;
};

}  // namespace detail

// chi(A, B): the exact number of index pairs (k, h) with a[k] == b[h],
// computed through the symmetric-function formula (never by comparing
// elements). per_term_chi holds the contribution of each element of A.
inline CertificateReport chi(const CertificateInput& in,
                             std::uint64_t guard = kDefaultMaxWindowWidth) {
  detail::CertificateEngine engine(in, guard);
  CertificateReport rep;
  rep.window_width = in.upper - in.lower;
  rep.per_term_chi.reserve(in.a_set.size());
  for (const BigInt& i : in.a_set) {
    const BigInt numer = engine.signed_numerator(i);
    BigInt term = engine.exact_chi_term(i, numer);
    rep.chi += term;
    rep.per_term_chi.push_back(std::move(term));
  }
  rep.nonempty = rep.chi > 0;
  rep.peak_bits = engine.peak_bits();
  return rep;
}

// omega(A, B): the factorial-weighted companion of chi with the same sign.
// The total is computed in the aggregate form (signed power sums of A
// against power sums of B); the per-element split redistributes S over the
// elements and must sum back to the aggregate exactly.
inline CertificateReport omega(const CertificateInput& in,
                               std::uint64_t guard = kDefaultMaxWindowWidth) {
  detail::CertificateEngine engine(in, guard);
  CertificateReport rep;
  rep.window_width = in.upper - in.lower;
  rep.omega = engine.aggregated_omega();
  BigInt per_sum = 0;
  rep.per_term_omega.reserve(in.a_set.size());
  for (const BigInt& i : in.a_set) {
    BigInt numer = engine.signed_numerator(i);
    per_sum += numer;
    rep.per_term_omega.push_back(std::move(numer));
  }
  if (per_sum != rep.omega)
    throw InternalInconsistency("per-element omega split does not sum to the aggregate");
  rep.nonempty = rep.omega > 0;
  rep.peak_bits = engine.peak_bits();
  return rep;
}

// Full certificate: chi, omega, their per-element splits, and the direct
// pair count. The sign equivalence chi > 0 <=> omega > 0 <=> intersection
// nonempty is enforced at runtime; a disagreement is a transcription bug,
// never a property of the input.
inline CertificateReport certify(const CertificateInput& in,
                                 std::uint64_t guard = kDefaultMaxWindowWidth) {
  detail::CertificateEngine engine(in, guard);
  CertificateReport rep;
  rep.window_width = in.upper - in.lower;
  rep.per_term_chi.reserve(in.a_set.size());
  rep.per_term_omega.reserve(in.a_set.size());
  BigInt per_sum = 0;
  for (const BigInt& i : in.a_set) {
    BigInt numer = engine.signed_numerator(i);
    BigInt term = engine.exact_chi_term(i, numer);
    rep.chi += term;
    per_sum += numer;
    rep.per_term_chi.push_back(std::move(term));
    rep.per_term_omega.push_back(std::move(numer));
  }
  rep.omega = engine.aggregated_omega();
  if (per_sum != rep.omega)
    throw InternalInconsistency("per-element omega split does not sum to the aggregate");
  const BigInt direct = direct_intersection_count(in.a_set, in.b_set);
  rep.nonempty = direct > 0;
  const bool chi_pos = rep.chi > 0;
  const bool omega_pos = rep.omega > 0;
  if (rep.chi < 0 || rep.omega < 0 || chi_pos != rep.nonempty || omega_pos != rep.nonempty)
    throw InternalInconsistency(
        "sign disagreement between chi, omega and the direct count: chi = " + rep.chi.str() +
        ", omega = " + rep.omega.str() + ", direct = " + direct.str());
  rep.peak_bits = engine.peak_bits();
  return rep;
}

}  // namespace omegapoint
