#pragma once

// Test-only helpers shared by the unit suites and the acceptance runner:
// process capture for the CLI, seeded random lists, and an int64
// sign-bracketing oracle for cubic root locations that shares no code with
// the exact analysis it checks.

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegapoint/symmetric.hpp"

namespace testsupport {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

inline CommandResult run_command(const std::string& command) {
  const std::string full = command + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  CommandResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int rc = pclose(pipe);
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

inline std::string cli_path_from_env() {
  const char* path = std::getenv("OMEGA_POINT_CLI");
  if (path == nullptr)
    throw std::runtime_error("OMEGA_POINT_CLI must point at the omega-point binary");
  return path;
}

inline omegapoint::IntegerList random_list(std::mt19937_64& rng, int min_size, int max_size,
                                           long long lo, long long hi) {
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  std::uniform_int_distribution<long long> value_dist(lo, hi);
  omegapoint::IntegerList out(static_cast<std::size_t>(size_dist(rng)));
  for (auto& v : out) v = value_dist(rng);
  return out;
}

inline long long floor_div(long long v, long long d) {  // d > 0
  long long q = v / d;
  if (v % d != 0 && v < 0) --q;
  return q;
}

// x^3 + a m^2 x + b m^3 in plain int64. Safe for the small grids the tests
// use (|a|, |b| <= 12, m <= 2600 keeps everything below ~4e13).
inline long long scaled_cubic(long long a, long long b, long long m, long long x) {
  return x * x * x + a * m * m * x + b * m * m * m;
}

// floor(m x_k) for every real root x_k of x^3 + ax + b, by exhaustive
// bracketing over the Cauchy range. An exact zero is one root; a strict sign
// change across consecutive integers is one root in between. At scale
// m >= 512 the roots of any integer cubic on these grids sit more than one
// unit apart, so nothing merges.
inline std::vector<long long> bracketed_scaled_floors(long long a, long long b, long long m) {
  const long long cf = 1 + std::max(std::llabs(a), std::llabs(b));
  const long long lo = -m * cf;
  const long long hi = m * cf;
  std::vector<long long> out;
  long long prev = scaled_cubic(a, b, m, lo);
  if (prev == 0) out.push_back(lo);
  for (long long t = lo + 1; t <= hi; ++t) {
    const long long v = scaled_cubic(a, b, m, t);
    if (v == 0)
      out.push_back(t);
    else if ((prev < 0 && v > 0) || (prev > 0 && v < 0))
      out.push_back(t - 1);
    prev = v;
  }
  return out;
}

// floor(n x_k) via floor(floor(S n x_k) / S) with S = 512.
inline std::vector<long long> oracle_root_floors(long long a, long long b, long long n) {
  constexpr long long kScale = 512;
  std::vector<long long> scaled = bracketed_scaled_floors(a, b, kScale * n);
  for (auto& v : scaled) v = floor_div(v, kScale);
  return scaled;
}

inline int oracle_root_count(long long a, long long b) {
  return static_cast<int>(bracketed_scaled_floors(a, b, 512).size());
}

}  // namespace testsupport
