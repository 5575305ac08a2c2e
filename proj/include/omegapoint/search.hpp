#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegapoint/bigint.hpp"
#include "omegapoint/cubic.hpp"
#include "omegapoint/errors.hpp"
#include "omegapoint/sets.hpp"

namespace omegapoint {

// A rational point (x_num/x_den, y_num/y_den) on y^2 = x^3 + ax + b, in
// lowest terms with positive denominators, together with the integer witness
// (X, Y, n) satisfying n Y^2 = X^3 + a n^2 X + b n^3 that produced it.
struct RationalPoint {
  BigInt x_num{0}, x_den{1};
  BigInt y_num{0}, y_den{1};
  BigInt witness_x{0}, witness_y{0}, witness_n{1};
};

// Three-way compare of a/b vs c/d for positive denominators.
inline int compare_rational(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  const BigInt lhs = a * d;
  const BigInt rhs = c * b;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline bool same_coordinates(const RationalPoint& p, const RationalPoint& q) {
  return p.x_num == q.x_num && p.x_den == q.x_den && p.y_num == q.y_num && p.y_den == q.y_den;
}

inline bool point_less(const RationalPoint& p, const RationalPoint& q) {
  const int cx = compare_rational(p.x_num, p.x_den, q.x_num, q.x_den);
  if (cx != 0) return cx < 0;
  return compare_rational(p.y_num, p.y_den, q.y_num, q.y_den) < 0;
}

// Reduces a witness triple to the rational point (X/n, Y/n) and re-verifies
// the curve equation on the reduced coordinates by cross multiplication.
inline RationalPoint to_rational_point(const BigInt& x, const BigInt& y, const BigInt& n,
                                       const BigInt& a, const BigInt& b) {
  if (n < 1) throw MalformedInput("witness scale n must be positive");
  if (y < 0)
    throw MalformedInput("witness y must be nonnegative; the curve is symmetric in the x-axis");
  if (n * y * y != f_n_eval(a, b, n, x))
    throw MalformedInput("witness does not satisfy n Y^2 = X^3 + a n^2 X + b n^3");
  using boost::multiprecision::gcd;
  RationalPoint p;
  p.witness_x = x;
  p.witness_y = y;
  p.witness_n = n;
  const BigInt gx = gcd(x, n);
  p.x_num = x / gx;
  p.x_den = n / gx;
  const BigInt gy = gcd(y, n);
  p.y_num = y / gy;
  p.y_den = n / gy;
  const BigInt lhs = p.y_num * p.y_num * p.x_den * p.x_den * p.x_den;
  const BigInt rhs = (p.x_num * p.x_num * p.x_num + a * p.x_num * p.x_den * p.x_den +
                      b * p.x_den * p.x_den * p.x_den) *
                     p.y_den * p.y_den;
  if (lhs != rhs)
    throw InternalInconsistency("reduced coordinates fail the cross-multiplied curve equation");
  return p;
}

// True iff (x_num/x_den, y_num/y_den) lies on the curve, checked exactly in
// the witness form n Y^2 = f_n(X) over the common denominator n.
inline bool verify_point_fractions(const BigInt& a, const BigInt& b, const BigInt& x_num,
                                   const BigInt& x_den, const BigInt& y_num,
                                   const BigInt& y_den) {
  if (x_den <= 0 || y_den <= 0) throw MalformedInput("denominators must be positive");
  const BigInt n = boost::multiprecision::lcm(x_den, y_den);
  const BigInt x = x_num * (n / x_den);
  const BigInt y = y_num * (n / y_den);
  return n * y * y == f_n_eval(a, b, n, x);
}

inline bool verify_point(const BigInt& a, const BigInt& b, const RationalPoint& p) {
  return verify_point_fractions(a, b, p.x_num, p.x_den, p.y_num, p.y_den);
}

// All rational zeros of x^3 + ax + b as points (r, 0). A monic integer cubic
// has only integer rational roots, and each one is a root floor whose value
// is exactly zero, so no divisor enumeration of b is ever needed.
inline std::vector<RationalPoint> x_axis_points(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0)
    throw MalformedInput("a = b = 0 is the degenerate family; its x-axis point is (0, 0)");
  const CubicAnalysis analysis = root_floors(a, b, 1);
  std::vector<RationalPoint> points;
  const BigInt* prev = nullptr;
  for (const BigInt& floor_val : analysis.root_floors) {
    if (prev != nullptr && *prev == floor_val) continue;  // clustered floors
    prev = &floor_val;
    if (f_n_eval(a, b, 1, floor_val) == 0)
      points.push_back(to_rational_point(floor_val, 0, 1, a, b));
  }
  return points;
}

// Height-bounded exhaustive point hunt, fully independent of the
// certificate machinery. Enumerates witness scales n = 1..height and tests
// f_n(X)/n for perfect squareness over a range wide enough for every root
// crossing plus numerator headroom; a point is found iff its minimal
// witness scale is at most `height` (x = p/e^2, y = r/e^3 in lowest terms
// needs n divisible by e^3). Results are sorted by (x, y), y >= 0, deduped.
inline std::vector<RationalPoint> brute_force_height_search(const BigInt& a, const BigInt& b,
                                                            std::uint64_t height) {
  if (height < 1) throw MalformedInput("height must be positive");
  using boost::multiprecision::abs;
  const BigInt coeff_bound = 1 + (abs(a) > abs(b) ? abs(a) : abs(b));
  std::vector<RationalPoint> out;
  for (std::uint64_t n = 1; n <= height; ++n) {
    const BigInt big_n = n;
    const BigInt lo = -(coeff_bound + 1) * big_n;
    const BigInt hi = (coeff_bound + 1) * big_n * height;
    for (BigInt x = lo; x <= hi; ++x) {
      const BigInt v = f_n_eval(a, b, big_n, x);
      if (v < 0) continue;
      if (v % big_n != 0) continue;
      BigInt y;
      if (!is_perfect_square(v / big_n, &y)) continue;
      out.push_back(to_rational_point(x, y, big_n, a, b));
    }
  }
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RationalPoint& p, const RationalPoint& q) {
                          return same_coordinates(p, q);
                        }),
            out.end());
  return out;
}

// Finds the witness a positive branch certificate promises. The scan covers
// exactly the certified window, so coming back empty would falsify the sign
// equivalence for this input.
inline std::pair<BigInt, BigInt> recover_witness(const BigInt& a, const BigInt& b,
                                                 const BigInt& n, int branch,
                                                 std::uint64_t y_limit,
                                                 std::uint64_t window_len) {
  auto hit = window_scan_oracle(a, b, n, y_limit, window_len, branch);
  if (!hit)
    throw InternalInconsistency("certificate was positive but its window holds no witness");
  return *hit;
}

struct SearchLimits {
  std::uint64_t max_n = 6;
  std::uint64_t max_i = 12;
  std::uint64_t max_j = 12;
  std::optional<std::chrono::milliseconds> deadline;
  std::uint64_t window_guard = kDefaultMaxWindowWidth;
};

enum class CellStatus { OmegaZero, OmegaPositive, Guarded, Lattice };

struct TraceEntry {
  std::uint64_t n = 1;
  std::uint64_t y_limit = 1;
  std::uint64_t window_len = 1;
  int branch = 0;  // -1 for lattice decisions
  CellStatus status = CellStatus::OmegaZero;
  BigInt width{0};
  std::size_t peak_bits = 0;
};

enum class SearchStatus { Found, Inconclusive, DegenerateFamily };

struct SearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<RationalPoint> point;
  int condition = 0;  // existence condition that fired, when found
  std::vector<TraceEntry> trace;
  std::uint64_t windows_evaluated = 0;
  std::uint64_t windows_guarded = 0;
  bool deadline_hit = false;
};

namespace detail {

struct CellFound {
  BigInt x, y;
  int condition = 0;
};

struct CellOutcome {
  std::vector<TraceEntry> rows;
  std::optional<CellFound> found;
};

inline CellOutcome evaluate_cell(const BigInt& a, const BigInt& b, std::uint64_t n,
                                 std::uint64_t y_limit, std::uint64_t window_len,
                                 std::uint64_t guard) {
  CellOutcome out;
  const BigInt big_n = n;
  const ExistenceReport rep =
      evaluate_existence(a, b, big_n, y_limit, window_len, guard, /*allow_fully_guarded=*/true);
  if (rep.lattice_solution) {
    out.rows.push_back({n, y_limit, window_len, -1, CellStatus::Lattice, BigInt(0), 0});
    out.found = CellFound{rep.lattice_solution->first, BigInt(0), rep.condition};
    return out;
  }
  for (const BranchEvaluation& ev : rep.per_branch) {
    const CellStatus status = ev.guarded ? CellStatus::Guarded
                              : ev.omega > 0 ? CellStatus::OmegaPositive
                                             : CellStatus::OmegaZero;
    out.rows.push_back({n, y_limit, window_len, ev.branch, status, ev.width, ev.peak_bits});
  }
  if (rep.satisfied) {
    for (const BranchEvaluation& ev : rep.per_branch) {
      if (ev.guarded || ev.omega <= 0) continue;
      auto [x, y] = recover_witness(a, b, big_n, ev.branch, y_limit, window_len);
      out.found = CellFound{std::move(x), std::move(y), rep.condition};
      break;
    }
  }
  return out;
}

}  // namespace detail

// Deterministic sweep of the certificate windows: for H = 1, 2, ... evaluate
// (n, I, J) = (n, min(H, max_i), min(H, max_j)) for every n up to
// min(H, max_n), skipping triples already covered once the caps bind. Every
// reachable triple is eventually visited, so the sweep is complete in the
// limit; at finite limits the only honest negative answer is "inconclusive".
// Guarded-out windows are recorded in the trace as skips, never treated as
// failures. Cells of one sweep step may be evaluated concurrently; results
// merge in schedule order, so the reported point does not depend on thread
// interleaving.
inline SearchResult search(const BigInt& a, const BigInt& b, const SearchLimits& limits,
                           unsigned threads = 1) {
  if (limits.max_n < 1 || limits.max_i < 1 || limits.max_j < 1)
    throw MalformedInput("search limits must all be positive");
  SearchResult res;
  if (a == 0 && b == 0) {
    res.status = SearchStatus::DegenerateFamily;
    return res;
  }

  const auto start_time = std::chrono::steady_clock::now();
  const auto out_of_time = [&] {
    return limits.deadline &&
           std::chrono::steady_clock::now() - start_time >= *limits.deadline;
  };

  const std::uint64_t h_cap = std::max(limits.max_i, limits.max_j);
  std::uint64_t prev_i = 0;
  std::uint64_t prev_j = 0;
  for (std::uint64_t h = 1; h <= h_cap; ++h) {
    const std::uint64_t y_limit = std::min(h, limits.max_i);
    const std::uint64_t window_len = std::min(h, limits.max_j);
    std::uint64_t n_first = 1;
    if (h > 1 && y_limit == prev_i && window_len == prev_j)
      n_first = std::min(h - 1, limits.max_n) + 1;  // only new scales are unseen
    const std::uint64_t n_last = std::min(h, limits.max_n);
    prev_i = y_limit;
    prev_j = window_len;
    if (n_first > n_last) continue;

    std::vector<std::optional<detail::CellOutcome>> outcomes(n_last - n_first + 1);
    if (threads <= 1) {
      for (std::uint64_t n = n_first; n <= n_last; ++n) {
        if (out_of_time()) {
          res.deadline_hit = true;
          break;
        }
        outcomes[n - n_first] =
            detail::evaluate_cell(a, b, n, y_limit, window_len, limits.window_guard);
      }
    } else {
      std::uint64_t n = n_first;
      while (n <= n_last && !res.deadline_hit) {
        if (out_of_time()) {
          res.deadline_hit = true;
          break;
        }
        std::vector<std::future<detail::CellOutcome>> batch;
        const std::uint64_t batch_last = std::min<std::uint64_t>(n + threads - 1, n_last);
        for (std::uint64_t m = n; m <= batch_last; ++m) {
          batch.push_back(std::async(std::launch::async, [&, m] {
            return detail::evaluate_cell(a, b, m, y_limit, window_len, limits.window_guard);
          }));
        }
        for (std::uint64_t m = n; m <= batch_last; ++m)
          outcomes[m - n_first] = batch[m - n].get();
        n = batch_last + 1;
      }
    }

    // Merge in schedule order; rows after the first hit are dropped so the
    // trace is identical no matter how many threads ran.
    for (auto& slot : outcomes) {
      if (!slot) break;
      detail::CellOutcome& cell = *slot;
      for (TraceEntry& row : cell.rows) {
        if (row.status == CellStatus::Guarded)
          ++res.windows_guarded;
        else if (row.status != CellStatus::Lattice)
          ++res.windows_evaluated;
        res.trace.push_back(std::move(row));
      }
      if (cell.found) {
        const TraceEntry& hit_row = res.trace.back();
        res.point = to_rational_point(cell.found->x, cell.found->y, BigInt(hit_row.n), a, b);
        res.status = SearchStatus::Found;
        res.condition = cell.found->condition;
        return res;
      }
    }
    if (res.deadline_hit) break;
  }
  return res;
}

}  // namespace omegapoint
