#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegapoint/bigint.hpp"
#include "omegapoint/errors.hpp"

namespace omegapoint {

// Shape classes of f(x) = x^3 + ax + b over integer (a, b). Mutually
// exclusive and exhaustive; membership is decided purely by the signs of a,
// b and 4a^3 + 27b^2. (The classical threshold +-(2a/3)sqrt(-a/3) squares to
// -4a^3/27, so comparing 27b^2 against -4a^3 is exact and radical-free.)
enum class Region {
  Degenerate,      // a = 0, b = 0: y^2 = x^3
  SingleRoot,      // a >= 0 with b != 0, or a < 0, b < 0 with 27b^2 > -4a^3
  TouchBelow,      // a < 0, b < 0, 27b^2 = -4a^3: double root at the local max
  ThreeRoots,      // a < 0, b != 0, 27b^2 < -4a^3
  TouchAbove,      // a < 0, b > 0, 27b^2 = -4a^3: double root at the local min
  SingleRootPosB,  // a < 0, b > 0, 27b^2 > -4a^3
  AxisRoot,        // b = 0, a != 0: x = 0 is always a root
};

inline const char* region_tag(Region r) {
  switch (r) {
    case Region::Degenerate: return "R0_degenerate";
    case Region::SingleRoot: return "R1";
    case Region::TouchBelow: return "R2_touch_below";
    case Region::ThreeRoots: return "R4_three_roots";
    case Region::TouchAbove: return "R5_touch_above";
    case Region::SingleRootPosB: return "R6_one_root_pos_b";
    case Region::AxisRoot: return "R7_b_zero";
  }
  return "?";
}

// Base index of the existence condition the region falls under (1..7).
// TouchBelow splits into condition 2 (scaled root on the lattice) and 3
// (off the lattice); this returns 2 and the evaluator disambiguates.
inline int condition_index(Region r) {
  switch (r) {
    case Region::Degenerate: return 0;
    case Region::SingleRoot: return 1;
    case Region::TouchBelow: return 2;
    case Region::ThreeRoots: return 4;
    case Region::TouchAbove: return 5;
    case Region::SingleRootPosB: return 6;
    case Region::AxisRoot: return 7;
  }
  return 0;
}

inline Region classify(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) return Region::Degenerate;
  if (b == 0) return Region::AxisRoot;
  if (a >= 0) return Region::SingleRoot;
  const BigInt disc = 4 * a * a * a + 27 * b * b;
  if (disc > 0) return b < 0 ? Region::SingleRoot : Region::SingleRootPosB;
  if (disc == 0) return b < 0 ? Region::TouchBelow : Region::TouchAbove;
  return Region::ThreeRoots;
}

// The scaled cubic f_n(x) = x^3 + a n^2 x + b n^3. Its integer zeros at
// height y (f_n(X) = n y^2) are exactly the rational curve points with
// denominator dividing n suitably; everything downstream samples it.
inline BigInt f_n_eval(const BigInt& a, const BigInt& b, const BigInt& n, const BigInt& x) {
  return x * x * x + a * n * n * x + b * n * n * n;
}

// 1 + max(|a| n^2, |b| n^3). Every real root of f_n lies strictly inside
// [-bound, bound], and f_n has the sign of x beyond it.
inline BigInt cauchy_root_bound(const BigInt& a, const BigInt& b, const BigInt& n) {
  using boost::multiprecision::abs;
  const BigInt lhs = abs(a) * n * n;
  const BigInt rhs = abs(b) * n * n * n;
  return 1 + (lhs > rhs ? lhs : rhs);
}

// floor(n sqrt(-a/3)) for plus, floor(-n sqrt(-a/3)) for minus: the integer
// floors of the scaled critical points of the cubic. Exact: t is the largest
// integer with 3 t^2 <= -a n^2, and the negative side is -t - 1 unless the
// square root is exact.
inline BigInt critical_floor(const BigInt& a, const BigInt& n, bool plus) {
  if (a >= 0) throw MalformedInput("critical points require a < 0");
  if (n < 1) throw MalformedInput("scale n must be positive");
  const BigInt q = -a * n * n;
  const BigInt t = isqrt_floor(q / 3);
  if (plus) return t;
  return 3 * t * t == q ? BigInt(-t) : BigInt(-t - 1);
}

// Interval of integers on which the scaled cubic is nonnegative and
// strictly monotone. hi absent means the branch is an unbounded tail.
struct BranchDescriptor {
  BigInt lo;
  std::optional<BigInt> hi;
  bool increasing = true;
};

struct CubicAnalysis {
  Region region = Region::Degenerate;
  BigInt a, b, n;
  std::vector<BigInt> root_floors;         // floor(n x_k), ascending roots
  std::optional<BigInt> crit_floor_minus;  // floor(n x_-), a < 0 only
  std::optional<BigInt> crit_floor_plus;   // floor(n x_+), a < 0 only
  std::optional<BigInt> lattice_root;      // integer X with f_n(X) = 0
};

namespace detail {

// Largest t in [lo, hi] with pred(t), for a predicate that is true on a
// prefix of the range. Requires pred(lo). ~2 log2(hi - lo) evaluations.
template <class Pred>
BigInt bisect_last_true(BigInt lo, BigInt hi, Pred pred) {
  while (lo < hi) {
    BigInt mid = lo + (hi - lo + 1) / 2;
    if (pred(mid))
      lo = std::move(mid);
    else
      hi = mid - 1;
  }
  return lo;
}

// For the two tangent classes 27b^2 = -4a^3 the coefficients factor exactly
// as a = -3s^2, |b| = 2s^3 with s a positive integer, giving f =
// (x -+ s)^2 (x +- 2s). Derived from the factorization rather than from any
// closed form in radicals.
inline BigInt exact_touch_scale(const BigInt& a, const BigInt& b) {
  const BigInt q = -a;
  if (q % 3 != 0) throw InternalInconsistency("tangent class with a not divisible by 3");
  const BigInt s = isqrt_floor(q / 3);
  using boost::multiprecision::abs;
  if (3 * s * s != q || 2 * s * s * s != abs(b))
    throw InternalInconsistency("tangent class coefficients do not factor as (-3s^2, +-2s^3)");
  return s;
}

}  // namespace detail

// Exact integer floors of the real roots of f_n (and of its critical points
// when they exist), with no floating point anywhere. Root isolation is by
// sign-bracketed binary search inside the Cauchy bound, restricted to
// stretches where the sign pattern is monotone; the tangent classes use the
// exact factorization instead.
inline CubicAnalysis root_floors(const BigInt& a, const BigInt& b, const BigInt& n) {
  if (n < 1) throw MalformedInput("scale n must be positive");
  if (a == 0 && b == 0)
    throw MalformedInput("a = b = 0 is the degenerate family; it has no root analysis");

  CubicAnalysis out;
  out.region = classify(a, b);
  out.a = a;
  out.b = b;
  out.n = n;

  const auto f = [&](const BigInt& x) { return f_n_eval(a, b, n, x); };
  const auto nonpos = [&](const BigInt& x) { return f(x) <= 0; };
  const auto nonneg = [&](const BigInt& x) { return f(x) >= 0; };
  const BigInt bound = cauchy_root_bound(a, b, n);

  switch (out.region) {
    case Region::Degenerate:
      break;  // unreachable
    case Region::SingleRoot: {
      // Below the unique root the cubic is negative everywhere (for a < 0
      // the local max is itself negative), so the sign pattern is monotone
      // over the whole integer line.
      out.root_floors = {detail::bisect_last_true(-bound, bound, nonpos)};
      if (a < 0) {
        out.crit_floor_minus = critical_floor(a, n, false);
        out.crit_floor_plus = critical_floor(a, n, true);
      }
      break;
    }
    case Region::TouchBelow: {
      const BigInt s = detail::exact_touch_scale(a, b);
      out.root_floors = {-n * s, 2 * n * s};  // double root, then simple root
      out.crit_floor_minus = -n * s;
      out.crit_floor_plus = n * s;
      break;
    }
    case Region::TouchAbove: {
      const BigInt s = detail::exact_touch_scale(a, b);
      out.root_floors = {-2 * n * s, n * s};  // simple root, then double root
      out.crit_floor_minus = -n * s;
      out.crit_floor_plus = n * s;
      break;
    }
    case Region::ThreeRoots: {
      const BigInt j4 = critical_floor(a, n, false);
      const BigInt j3 = critical_floor(a, n, true);
      // Smallest root: f is increasing up to n x_-, so integers <= j4 have a
      // monotone sign pattern.
      const BigInt j0 = detail::bisect_last_true(-bound, j4, nonpos);
      // Middle root lives in (n x_-, n x_+]: f >= 0 there iff left of it.
      BigInt j1 = j4;
      if (f(j4 + 1) >= 0) j1 = detail::bisect_last_true(j4 + 1, j3, nonneg);
      // Largest root: f <= 0 on (n x_1, n x_2], then positive for good.
      BigInt j2 = j1;
      if (f(j1 + 1) <= 0) j2 = detail::bisect_last_true(j1 + 1, bound, nonpos);
      out.root_floors = {j0, j1, j2};
      out.crit_floor_minus = j4;
      out.crit_floor_plus = j3;
      break;
    }
    case Region::SingleRootPosB: {
      const BigInt j4 = critical_floor(a, n, false);
      const BigInt j3 = critical_floor(a, n, true);
      // The root sits left of the local max; the dip between the critical
      // points never reaches zero in this class.
      out.root_floors = {detail::bisect_last_true(-bound, j4, nonpos)};
      out.crit_floor_minus = j4;
      out.crit_floor_plus = j3;
      break;
    }
    case Region::AxisRoot: {
      if (a > 0) {
        out.root_floors = {BigInt(0)};
      } else {
        // f_n = x (x^2 + a n^2): roots at 0 and -+ n sqrt(-a).
        const BigInt q = -a * n * n;
        const BigInt u = isqrt_floor(q);
        const BigInt j0 = (u * u == q) ? BigInt(-u) : BigInt(-u - 1);
        out.root_floors = {j0, BigInt(0), u};
        out.crit_floor_minus = critical_floor(a, n, false);
        out.crit_floor_plus = critical_floor(a, n, true);
      }
      break;
    }
  }

  // The reported lattice zero. Several floors can be exact zeros at once; we
  // report the smallest, except that b = 0 always reports x = 0 (the zero
  // every such curve shares).
  if (out.region == Region::AxisRoot) {
    out.lattice_root = BigInt(0);
  } else {
    for (const BigInt& floor_val : out.root_floors) {
      if (f(floor_val) == 0) {
        out.lattice_root = floor_val;
        break;
      }
    }
  }
  return out;
}

// The intervals on which f_n is nonnegative and strictly monotone, per
// shape class. These are the only stretches worth sampling when hunting for
// integer points, and they drive which branch windows the existence
// conditions consult.
inline std::vector<BranchDescriptor> monotone_branches(const CubicAnalysis& c) {
  const auto& fl = c.root_floors;
  switch (c.region) {
    case Region::Degenerate:
      return {};
    case Region::SingleRoot:
      return {{fl[0], std::nullopt, true}};
    case Region::TouchBelow:
      // The double root is an isolated zero; the usable stretch starts at
      // the simple root.
      return {{fl[1], std::nullopt, true}};
    case Region::ThreeRoots:
      return {{fl[0], *c.crit_floor_minus, true},
              {*c.crit_floor_minus, fl[1], false},
              {fl[2], std::nullopt, true}};
    case Region::TouchAbove:
      return {{fl[0], *c.crit_floor_minus, true},
              {*c.crit_floor_minus, fl[1], false},
              {fl[1], std::nullopt, true}};
    case Region::SingleRootPosB:
      return {{fl[0], *c.crit_floor_minus, true},
              {*c.crit_floor_minus, *c.crit_floor_plus, false},
              {*c.crit_floor_plus, std::nullopt, true}};
    case Region::AxisRoot:
      if (c.a > 0) return {{fl[0], std::nullopt, true}};
      return {{fl[0], *c.crit_floor_minus, true},
              {*c.crit_floor_minus, fl[1], false},
              {fl[2], std::nullopt, true}};
  }
  return {};
}

}  // namespace omegapoint
