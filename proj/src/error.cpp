#include "ordertop/error.hpp"

namespace ordertop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEmpty: return "MissingEmpty";
    case ErrorCode::MissingFull: return "MissingFull";
    case ErrorCode::NotUnionClosed: return "NotUnionClosed";
    case ErrorCode::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::BadCarrier: return "BadCarrier";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::EmptyPointPreimage: return "EmptyPointPreimage";
    case ErrorCode::NotDirected: return "NotDirected";
    case ErrorCode::NotDownClosed: return "NotDownClosed";
    case ErrorCode::NotReflexiveEntourage: return "NotReflexiveEntourage";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotCoreSpace: return "NotCoreSpace";
    case ErrorCode::NotASemilattice: return "NotASemilattice";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotIsotone: return "NotIsotone";
    case ErrorCode::InvalidSource: return "InvalidSource";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::UnknownPredicateTag: return "UnknownPredicateTag";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorCode code, const std::vector<std::uint64_t>& witness, const std::string& detail) {
  std::string out(to_string(code));
  out += '(';
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(witness[i]);
  }
  out += ')';
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::vector<std::uint64_t> witness, const std::string& detail)
    : std::runtime_error(describe(code, witness, detail)), code_(code), witness_(std::move(witness)) {}

}  // namespace ordertop
