#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegapoint/bigint.hpp"
#include "omegapoint/certificate.hpp"
#include "omegapoint/cubic.hpp"
#include "omegapoint/errors.hpp"

namespace omegapoint {

// The materialized search sets of one branch window, ready to certify.
struct BranchSets {
  int branch = 0;
  IntegerList a_set;        // {n i^2 : i = 1..I}, strictly increasing
  IntegerList b_set;        // f_n sampled along the branch
  BigInt lower, upper;      // exact min/max over A u B
  BigInt start;             // first sampled x
  std::uint64_t count = 0;  // |B|
};

// {n i^2 : i = 1..I}: the candidate values n y^2 a window is matched against.
// Never contains 0, so y = 0 solutions are invisible to the certificates and
// are handled separately (lattice conditions and the x-axis supplement).
inline IntegerList build_A(const BigInt& n, std::uint64_t y_limit) {
  if (n < 1 || y_limit < 1) throw MalformedInput("build_A requires n >= 1 and I >= 1");
  IntegerList a;
  a.reserve(y_limit);
  for (std::uint64_t i = 1; i <= y_limit; ++i) {
    const BigInt iv = i;
    a.push_back(n * iv * iv);
  }
  return a;
}

// Branch indices that exist for each shape class. Tails sampled from a root
// floor (0..3) take J+1 samples; the bounded branches (4..6) are pinned
// between floors and ignore J.
inline std::vector<int> admissible_branches(Region r) {
  switch (r) {
    case Region::SingleRoot: return {0};
    case Region::TouchBelow: return {1};
    case Region::ThreeRoots: return {2, 4, 5};
    case Region::TouchAbove: return {1, 4, 5};
    case Region::SingleRootPosB: return {3, 4, 6};
    case Region::Degenerate:
    case Region::AxisRoot: return {};  // decided by lattice zeros, not windows
  }
  return {};
}

namespace detail {

// First sampled x and sample count of one branch window. Caller has already
// checked admissibility, so the floors used here exist.
inline std::pair<BigInt, BigInt> branch_window(const CubicAnalysis& c, std::uint64_t window_len,
                                               int branch) {
  const BigInt j_plus_1 = BigInt(window_len) + 1;
  switch (branch) {
    case 0: return {c.root_floors[0], j_plus_1};
    case 1: return {c.root_floors[1], j_plus_1};
    case 2: return {c.root_floors[2], j_plus_1};
    case 3: return {*c.crit_floor_plus, j_plus_1};
    case 4: return {c.root_floors[0], *c.crit_floor_minus - c.root_floors[0] + 1};
    case 5: return {*c.crit_floor_minus, c.root_floors[1] - *c.crit_floor_minus + 1};
    case 6: return {*c.crit_floor_minus, *c.crit_floor_plus - *c.crit_floor_minus + 1};
    default: throw BranchNotAdmissible("branch index must be in 0..6");
  }
}

inline void require_admissible(Region region, int branch) {
  for (int k : admissible_branches(region))
    if (k == branch) return;
  throw BranchNotAdmissible("branch " + std::to_string(branch) + " is not admissible in region " +
                            region_tag(region));
}

}  // namespace detail

// Materializes one branch window: A, the sampled B, and the exact enclosing
// bounds. Throws ResourceLimit when the window width would exceed the guard;
// for all but small inputs it will, which is the practical wall of the whole
// method and is surfaced rather than hidden.
inline BranchSets build_branch(const BigInt& a, const BigInt& b, const BigInt& n,
                               std::uint64_t y_limit, std::uint64_t window_len, int branch,
                               std::uint64_t guard = kDefaultMaxWindowWidth) {
  if (n < 1 || y_limit < 1 || window_len < 1)
    throw MalformedInput("n, I and J must all be positive");
  const Region region = classify(a, b);
  if (region == Region::Degenerate)
    throw MalformedInput("a = b = 0 is the degenerate family; no branch windows exist");
  detail::require_admissible(region, branch);

  const CubicAnalysis analysis = root_floors(a, b, n);
  const auto [start, count_big] = detail::branch_window(analysis, window_len, branch);

  // Width shortcuts before any allocation. A alone spans n (I^2 - 1), and a
  // monotone integer run of c samples spans at least c - 2, so either bound
  // exceeding the guard forces the true width past it too.
  const BigInt a_span = n * (BigInt(y_limit) * y_limit - 1);
  if (a_span > guard)
    throw ResourceLimit("window width is at least " + a_span.str() + " which exceeds guard " +
                            std::to_string(guard),
                        a_span);
  if (count_big - 2 > guard)
    throw ResourceLimit("window width is at least " + BigInt(count_big - 2).str() +
                            " which exceeds guard " + std::to_string(guard),
                        BigInt(count_big - 2));

  BranchSets out;
  out.branch = branch;
  out.start = start;
  out.count = to_u64(count_big);
  out.a_set = build_A(n, y_limit);
  out.b_set.reserve(out.count);
  for (std::uint64_t j = 0; j < out.count; ++j)
    out.b_set.push_back(f_n_eval(a, b, n, start + j));

  auto [lo, hi] = detail::min_max_over(out.a_set, out.b_set);
  const BigInt width = hi - lo;
  if (width > guard)
    throw ResourceLimit("window width " + width.str() + " exceeds guard " + std::to_string(guard),
                        width);
  out.lower = std::move(lo);
  out.upper = std::move(hi);
  return out;
}

// Scans the very same window a branch certificate covers and returns the
// first (X, Y) with f_n(X) = n Y^2 and 1 <= Y <= I, if any. This is the
// independent route the certificate signs are checked against; it has no
// sigma table, so it takes any window the builder takes and larger.
inline std::optional<std::pair<BigInt, BigInt>> window_scan_oracle(
    const BigInt& a, const BigInt& b, const BigInt& n, std::uint64_t y_limit,
    std::uint64_t window_len, int branch) {
  if (n < 1 || y_limit < 1 || window_len < 1)
    throw MalformedInput("n, I and J must all be positive");
  const Region region = classify(a, b);
  if (region == Region::Degenerate)
    throw MalformedInput("a = b = 0 is the degenerate family; no branch windows exist");
  detail::require_admissible(region, branch);

  const CubicAnalysis analysis = root_floors(a, b, n);
  const auto [start, count] = detail::branch_window(analysis, window_len, branch);
  const BigInt y_cap = y_limit;
  for (BigInt j = 0; j < count; ++j) {
    const BigInt x = start + j;
    const BigInt v = f_n_eval(a, b, n, x);
    if (v <= 0) continue;
    if (v % n != 0) continue;
    BigInt y;
    if (!is_perfect_square(v / n, &y)) continue;
    if (y > y_cap) continue;
    return std::make_pair(x, y);
  }
  return std::nullopt;
}

// One branch certificate inside an existence-condition report.
struct BranchEvaluation {
  int branch = 0;
  bool guarded = false;  // window exceeded the guard; omega not computed
  BigInt omega{0};
  BigInt chi{0};
  BigInt lower{0}, upper{0};
  BigInt width{0};  // exact width, or the bound that tripped the guard
  std::size_t peak_bits = 0;
};

// Outcome of one (n, I, J) evaluation of the seven-way existence condition.
struct ExistenceReport {
  Region region = Region::Degenerate;
  int condition = 0;  // 1..7
  bool satisfied = false;
  std::optional<std::pair<BigInt, BigInt>> lattice_solution;  // (X, 0)
  std::vector<BranchEvaluation> per_branch;                   // ascending branch index
  BigInt n{1};
  std::uint64_t y_limit = 1;
  std::uint64_t window_len = 1;
};

// Evaluates the applicable existence condition for (a, b) at one (n, I, J):
// picks the condition from the shape class, certifies each listed branch
// window, and reports per-branch omegas. Conditions 2 and 7 are decided by
// lattice zeros and need no window at all.
//
// A branch whose window exceeds the guard is marked guarded rather than
// evaluated. If that leaves no branch computed (and no lattice answer), the
// evaluation carries no information and ResourceLimit propagates, unless
// the caller opts into receiving the fully guarded report.
inline ExistenceReport evaluate_existence(const BigInt& a, const BigInt& b, const BigInt& n,
                                        std::uint64_t y_limit, std::uint64_t window_len,
                                        std::uint64_t guard = kDefaultMaxWindowWidth,
                                        bool allow_fully_guarded = false) {
  if (n < 1 || y_limit < 1 || window_len < 1)
    throw MalformedInput("n, I and J must all be positive");
  const Region region = classify(a, b);
  if (region == Region::Degenerate)
    throw MalformedInput(
        "a = b = 0 is the degenerate family: its rational points are exactly (r^2, r^3)");

  ExistenceReport rep;
  rep.region = region;
  rep.condition = condition_index(region);
  rep.n = n;
  rep.y_limit = y_limit;
  rep.window_len = window_len;

  if (region == Region::AxisRoot) {
    rep.satisfied = true;
    rep.lattice_solution = std::make_pair(BigInt(0), BigInt(0));
    return rep;
  }
  if (region == Region::TouchBelow) {
    const CubicAnalysis analysis = root_floors(a, b, n);
    const BigInt& scaled_root_floor = analysis.root_floors[0];
    if (f_n_eval(a, b, n, scaled_root_floor) == 0) {
      rep.satisfied = true;
      rep.lattice_solution = std::make_pair(scaled_root_floor, BigInt(0));
      return rep;
    }
    rep.condition = 3;  // scaled smallest root off the lattice
  }

  bool any_computed = false;
  BigInt worst_width = 0;
  for (int k : admissible_branches(region)) {
    BranchEvaluation ev;
    ev.branch = k;
    try {
      const BranchSets sets = build_branch(a, b, n, y_limit, window_len, k, guard);
      const CertificateInput in =
          make_certificate_input(sets.a_set, sets.b_set, sets.lower, sets.upper);
      const CertificateReport cert = certify(in, guard);
      ev.omega = cert.omega;
      ev.chi = cert.chi;
      ev.lower = sets.lower;
      ev.upper = sets.upper;
      ev.width = sets.upper - sets.lower;
      ev.peak_bits = cert.peak_bits;
      if (ev.omega > 0) rep.satisfied = true;
      any_computed = true;
    } catch (const ResourceLimit& limit) {
      ev.guarded = true;
      ev.width = limit.width.value_or(BigInt(0));
      if (ev.width > worst_width) worst_width = ev.width;
    }
    rep.per_branch.push_back(std::move(ev));
  }

  if (!any_computed && !rep.per_branch.empty() && !allow_fully_guarded)
    throw ResourceLimit("every branch window exceeds guard " + std::to_string(guard),
                        worst_width);
  return rep;
}

}  // namespace omegapoint
