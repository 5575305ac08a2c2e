#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>

namespace omegapoint {

// Every quantity in this library is an exact integer (or an exact ratio of
// two of them). mpz_int is a GMP-backed value type: deep copies, no hidden
// rounding, no overflow.
using BigInt = boost::multiprecision::mpz_int;

// Cap on the window width N - M of any sigma-table computation. The tables
// behind the intersection formulas grow factorially with the width, so an
// oversized request fails fast with ResourceLimit instead of stalling for
// minutes. The CLI can override this via --max-width or the environment
// variable OMEGA_POINT_MAX_WIDTH.
inline constexpr std::uint64_t kDefaultMaxWindowWidth = 512;

inline bool is_even(const BigInt& v) { return v % 2 == 0; }

// (-1)^v. The parity of a negative integer is the parity of |v|,
// so (-1)^(-3) == -1.
inline int parity_sign(const BigInt& v) { return is_even(v) ? 1 : -1; }

// Largest t >= 0 with t*t <= v. Requires v >= 0.
inline BigInt isqrt_floor(const BigInt& v) { return boost::multiprecision::sqrt(v); }

inline bool is_perfect_square(const BigInt& v, BigInt* root = nullptr) {
  if (v < 0) return false;
  BigInt r = isqrt_floor(v);
  if (r * r != v) return false;
  if (root != nullptr) *root = r;
  return true;
}

// Number of bits of |v|; zero for v == 0.
inline std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.backend().data(), 2);
}

// Narrowing helper for values the caller has already range-checked.
inline std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

}  // namespace omegapoint
