#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "omegapoint/bigint.hpp"

namespace omegapoint {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The request would blow past the configured window guard (sigma tables are
// factorial in the window width). Carries the offending width when known;
// for pre-allocation shortcuts this may be a lower bound on the true width.
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& what) : Error(what) {}
  ResourceLimit(const std::string& what, BigInt seen)
      : Error(what), width(std::move(seen)) {}
  std::optional<BigInt> width;
};

// A window bound that does not enclose the data (M > min or N < max), or
// M > N outright.
struct InvalidBounds : Error {
  using Error::Error;
};

// Input that violates a precondition: empty set where one element is
// required, zero denominator, witness triple off the curve, and so on.
struct MalformedInput : Error {
  using Error::Error;
};

// Branch index that does not exist for the curve's shape class.
struct BranchNotAdmissible : Error {
  using Error::Error;
};

// A violated internal identity. This is never a property of the input; it
// means a formula was transcribed wrong and must surface loudly.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace omegapoint
