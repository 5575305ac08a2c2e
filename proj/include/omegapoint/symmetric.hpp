#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omegapoint/bigint.hpp"
#include "omegapoint/errors.hpp"

namespace omegapoint {

// Ordered finite list of exact integers. Duplicates are meaningful (the
// intersection formulas count pairs) and order is preserved.
using IntegerList = std::vector<BigInt>;

// k!, exact. Every factorial in this library is a window offset (i - M or
// N - i), so the window guard doubles as the factorial guard.
inline BigInt factorial(std::uint64_t k, std::uint64_t guard = kDefaultMaxWindowWidth) {
  if (k > guard)
    throw ResourceLimit("factorial argument " + std::to_string(k) + " exceeds guard " +
                            std::to_string(guard),
                        BigInt(k));
  BigInt acc = 1;
  for (std::uint64_t i = 2; i <= k; ++i) acc *= i;
  return acc;
}

namespace detail {

// Multiplies one factor (t + v) into the generating polynomial whose
// coefficients are the running elementary symmetric values.
inline void esp_mix_in(IntegerList& e, const BigInt& v) {
  e.emplace_back(0);
  for (std::size_t m = e.size() - 1; m >= 1; --m) e[m] += v * e[m - 1];
}

}  // namespace detail

// Elementary symmetric polynomials [e_0, ..., e_K] of a multiset, K its
// size, via incremental expansion of prod(t + v). e_0 = 1 (empty product).
// Cost is quadratic in K, never exponential.
inline IntegerList elementary_symmetric(const IntegerList& values,
                                        std::uint64_t guard = kDefaultMaxWindowWidth) {
  if (values.size() > guard)
    throw ResourceLimit("multiset of " + std::to_string(values.size()) +
                            " values exceeds guard " + std::to_string(guard),
                        BigInt(values.size()));
  IntegerList e{BigInt(1)};
  e.reserve(values.size() + 1);
  for (const BigInt& v : values) detail::esp_mix_in(e, v);
  return e;
}

// Elementary symmetric polynomials of the integer range {M, M+1, ..., N}.
// Equal in value to elementary_symmetric over that list; guarded by the
// range width N - M rather than the element count, so a window of width
// exactly `guard` is still admissible.
inline IntegerList elementary_symmetric_range(const BigInt& lower, const BigInt& upper,
                                              std::uint64_t guard = kDefaultMaxWindowWidth) {
  if (lower > upper)
    throw InvalidBounds("range requires M <= N, got M = " + lower.str() +
                        ", N = " + upper.str());
  const BigInt width = upper - lower;
  if (width > guard)
    throw ResourceLimit("range width " + width.str() + " exceeds guard " + std::to_string(guard),
                        width);
  IntegerList e{BigInt(1)};
  e.reserve(to_u64(width) + 2);
  for (BigInt t = lower; t <= upper; ++t) detail::esp_mix_in(e, t);
  return e;
}

// Power sums [T_0, ..., T_max_k] with T_k = sum v^k. T_0 = |values|, i.e.
// 0^0 counts as 1 elementwise.
inline IntegerList power_sums(const IntegerList& values, std::uint64_t max_k) {
  IntegerList t(max_k + 1, BigInt(0));
  t[0] = values.size();
  for (const BigInt& v : values) {
    BigInt pw = 1;
    for (std::uint64_t k = 1; k <= max_k; ++k) {
      pw *= v;
      t[k] += pw;
    }
  }
  return t;
}

// Signed power sums [S_0, ..., S_max_k] with S_j = sum (-1)^v v^j. The sign
// of each term comes from the parity of the element itself.
inline IntegerList signed_power_sums(const IntegerList& values, std::uint64_t max_k) {
  IntegerList s(max_k + 1, BigInt(0));
  for (const BigInt& v : values) {
    const int sign = parity_sign(v);
    s[0] += sign;
    BigInt pw = 1;
    for (std::uint64_t k = 1; k <= max_k; ++k) {
      pw *= v;
      if (sign > 0)
        s[k] += pw;
      else
        s[k] -= pw;
    }
  }
  return s;
}

// Newton's identities: recovers [p_0, ..., p_max_k] from an elementary
// symmetric table. Independent of power_sums above; the two routes must
// agree exactly on every multiset, which the test suite leans on.
//
//   p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k,  p_0 = count,
//
// with e_m = 0 for m > count.
inline IntegerList power_sums_via_newton(const IntegerList& esp, std::uint64_t count,
                                         std::uint64_t max_k) {
  if (esp.empty() || esp[0] != 1)
    throw MalformedInput("not an elementary symmetric table: esp[0] must be 1");
  if (esp.size() != count + 1)
    throw MalformedInput("elementary symmetric table must have count + 1 entries");
  IntegerList p(max_k + 1, BigInt(0));
  p[0] = count;
  for (std::uint64_t k = 1; k <= max_k; ++k) {
    BigInt acc = 0;
    const std::uint64_t top = std::min<std::uint64_t>(k - 1, count);
    for (std::uint64_t i = 1; i <= top; ++i) {
      const BigInt term = esp[i] * p[k - i];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    if (k <= count) {
      const BigInt tail = esp[k] * k;
      if (k % 2 == 1)
        acc += tail;
      else
        acc -= tail;
    }
    p[k] = std::move(acc);
  }
  return p;
}

// One multiset with its elementary symmetric table and power sums. Bundled
// so cross-checks can be stated against a single object.
struct SymmetricTable {
  IntegerList values;
  IntegerList esp;          // e_0 .. e_{|values|}
  std::uint64_t max_power = 0;
  IntegerList power_sums;   // T_0 .. T_max_power

  static SymmetricTable build(IntegerList vals, std::uint64_t max_power,
                              std::uint64_t guard = kDefaultMaxWindowWidth) {
    SymmetricTable table;
    table.esp = elementary_symmetric(vals, guard);
    table.power_sums = omegapoint::power_sums(vals, max_power);
    table.max_power = max_power;
    table.values = std::move(vals);
    return table;
  }
};

}  // namespace omegapoint
