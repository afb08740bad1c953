#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordertop/codec.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/latid.hpp"

namespace ordertop {

inline constexpr std::string_view kToolVersion = "0.3.0";

// ---------------------------------------------------------------------------
// predicate registry

enum class PredicateDomain { ordered_space, topology, qoset, lattice };

std::string_view to_string(PredicateDomain d);

struct PredicateInfo {
  std::string tag;
  PredicateDomain domain = PredicateDomain::ordered_space;
  std::string summary;
};

/// Sorted by tag.
const std::vector<PredicateInfo>& predicate_registry();
/// Throws UnknownPredicateTag.
const PredicateInfo& predicate_info(std::string_view tag);

/// Topologies are read as ordered spaces under their specialization order and
/// ordered spaces as topologies by forgetting the order; a qoset is read off
/// an ordered space or a topology the same way. Lattices only answer lattice tags.
/// Throws UnknownPredicateTag, or KindMismatch when the record cannot be read in the tag's domain.
bool evaluate_predicate(std::string_view tag, const Object& obj);

// ---------------------------------------------------------------------------
// suites

struct SuiteSpec {
  std::string suite;
  std::size_t n = 3;
  /// Sampling seed; when set, `samples` indices are drawn from the stream instead of sweeping it.
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;
  std::size_t workers = 1;
  bool verbose = false;
  /// Permits the exhaustive sweeps above the default caps.
  bool allow_large = false;
  /// Name of a deliberately broken predicate variant, empty for none.
  std::string fault;
};

enum class Status { pass, fail, vacuous };
std::string_view to_string(Status s);

struct Outcome {
  Status status = Status::pass;
  json detail;
};

/// {"object": record, "param": suite-specific parameters}.
struct InstanceRecord {
  std::size_t index = 0;
  json instance;
  json detail;
};

struct Report {
  std::string suite;
  std::size_t n = 0;
  std::string fault;
  std::optional<std::uint64_t> seed;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;
  /// Lowest stream indices first, at most kMaxCounterexamples.
  std::vector<InstanceRecord> counterexamples;
  /// Verbose mode only: {"index", "status", "detail"} per instance in stream order.
  std::vector<json> verdicts;
  json extra;
  std::vector<std::string> notes;
  double wall_ms = 0;
  std::string version;
  /// Order-independent digest of every (index, status, detail) triple.
  std::string determinism_hash;

  bool ok() const { return failed == 0; }
  std::optional<std::size_t> first_counterexample() const;
  /// Aggregate record; wall_ms is the only timing field.
  json summary(bool with_time = true) const;
  /// Line-delimited records: header, verdicts (verbose), counterexamples, summary.
  std::string to_lines(bool with_time = true) const;
};

inline constexpr std::size_t kMaxCounterexamples = 10;

std::vector<std::string> suite_ids();
/// Names of the broken variants accepted by the suite.
std::vector<std::string> suite_faults(std::string_view suite);
/// Largest n swept exhaustively by default.
std::size_t suite_cap(std::string_view suite, bool allow_large = false);
/// Number of instances the spec would evaluate; throws as run_suite.
std::size_t suite_instance_count(const SuiteSpec& spec);

/// Throws UnknownSuite, SchemaError for an unknown fault, BoundTooLarge above the cap.
Report run_suite(const SuiteSpec& spec);

/// Re-validates an instance record and evaluates it on its own.
Outcome evaluate_instance(std::string_view suite, const json& instance, std::string_view fault = {});

// ---------------------------------------------------------------------------
// hunting

struct HypothesisSpec {
  std::vector<std::string> assume;
  std::string refute;
  EnumKind kind = EnumKind::ordered_space;
  /// Sizes 1..n are searched in order.
  std::size_t n = 3;
  bool allow_large = false;
};

struct HuntResult {
  bool found = false;
  std::optional<Object> instance;
  std::size_t size = 0;   // carrier size of the instance
  std::size_t index = 0;  // position in the stream of that size
  std::size_t searched = 0;
  json to_json(const HypothesisSpec& h) const;
};

/// Throws UnknownPredicateTag before searching, BoundTooLarge above the enumeration cap.
HuntResult hunt(const HypothesisSpec& h);

// ---------------------------------------------------------------------------
// record-level commands

/// Ops: scott, lawson, patch:<z> (z in upsilon, sigma, alpha or the Greek letters), upper,
/// lower, cocompact, interior-relation, completion, quasi-uniformity.
/// Throws SchemaError for unknown ops and KindMismatch for unsuitable input.
json derive(std::string_view op, const Object& obj);

/// {"holds": bool, "witness": {...}} with the witness only on failure.
json law_to_json(const LawResult& r);

/// Every profile that applies to the record, keyed by profile name.
json invariants(const Object& obj);

// ---------------------------------------------------------------------------
// fixtures

inline constexpr std::string_view kTruncationBanner =
    "finite truncation of an infinite example: properties claimed for the infinite instance are not asserted here";

struct Fixture {
  std::string name;
  Object object;
  std::string note;
  bool truncated = false;
  json to_json() const;
};

const std::vector<Fixture>& fixtures();
/// Throws SchemaError for an unknown name.
const Fixture& fixture(std::string_view name);

/// Frozen hunt outcomes kept next to the fixtures.
struct FrozenHunt {
  std::string name;
  HypothesisSpec spec;
  json expected;
};
const std::vector<FrozenHunt>& frozen_hunts();

}  // namespace ordertop
