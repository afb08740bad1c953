#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordertop {

enum class ErrorCode {
  // structure validation
  MissingEmpty,
  MissingFull,
  NotUnionClosed,
  NotIntersectionClosed,
  Duplicate,
  NotSubset,
  BadCarrier,
  NotReflexive,
  NotTransitive,
  NotAntisymmetric,
  NoMeet,
  NoJoin,
  NotIdempotent,
  EmptyPointPreimage,
  NotDirected,
  NotDownClosed,
  NotReflexiveEntourage,
  // operation contracts
  KindMismatch,
  SizeCapExceeded,
  NotCoreSpace,
  NotASemilattice,
  ContextMismatch,
  NotIsotone,
  InvalidSource,
  InvalidRepresentation,
  BoundTooLarge,
  UnknownPredicateTag,
  UnknownSuite,
  // codec
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

/// Raised by validators and by operations whose contract is violated.
/// `witness` carries the points, sets (as membership words) or positions
/// that identify the violation, in the order the error name lists them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::vector<std::uint64_t> witness, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::uint64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::uint64_t> witness_;
};

}  // namespace ordertop
