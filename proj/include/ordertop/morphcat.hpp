#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordertop/codec.hpp"
#include "ordertop/cord.hpp"

namespace ordertop {

/// Flags that do not apply to the given context kind stay empty.
struct MapProfile {
  std::optional<bool> continuous, isotone, lower_semicontinuous;
  std::optional<bool> alpha_proper, sigma_proper, upsilon_proper;
  std::optional<bool> core_continuous, quasiopen, residuated, residual, interpolating;
  std::vector<std::pair<std::string, std::optional<bool>>> flags() const;
};

/// src and dst must be records of the same kind sized like the map; a relation
/// context must carry the role "c-quasi-order". Throws ContextMismatch otherwise.
MapProfile map_profile(const SpaceMap& f, const Object& src, const Object& dst);

/// g with g(y) <= x iff y <= f(x), least label chosen among equivalent values.
/// Throws NotIsotone(x, y) for the first pair x <= y with f(x) not below f(y).
std::optional<SpaceMap> lower_adjoint(const SpaceMap& f, const Qoset& src, const Qoset& dst);

// ---------------------------------------------------------------------------
// the six representations

enum class RepKind {
  c_ordered_set,
  t0_core_space,
  fan_ordered_space,
  based_domain,
  core_based_sober_space,
  based_supercontinuous_lattice,
};

inline constexpr RepKind kAllRepKinds[] = {RepKind::c_ordered_set,     RepKind::t0_core_space,
                                           RepKind::fan_ordered_space, RepKind::based_domain,
                                           RepKind::core_based_sober_space,
                                           RepKind::based_supercontinuous_lattice};

std::string_view to_string(RepKind k);
/// Throws SchemaError for unknown names.
RepKind rep_kind_from_string(std::string_view s);
bool has_basis(RepKind k);

/// Payload per kind: relation (role c-quasi-order), topology, ordered space,
/// qoset, topology, lattice. The basis is used by the last three kinds only.
struct Representation {
  RepKind kind = RepKind::c_ordered_set;
  Object payload;
  PointSet basis;
};

struct RepVerdict {
  bool valid = false;
  std::string reason;
  std::vector<std::uint64_t> witness;
};

RepVerdict validate_representation(const Representation& r);

/// Throws InvalidSource with the validation reason when r is not valid.
Representation convert(const Representation& r, RepKind target);

/// Same kind, isomorphic payloads, bases matched by the isomorphism.
bool representations_isomorphic(const Representation& a, const Representation& b);

json to_json(const Representation& r);
/// Record shape {"kind": <rep kind>, "object": {...}, "basis": [...]}.
Representation representation_from_json(const json& j);
bool is_representation_record(const json& j);

}  // namespace ordertop
