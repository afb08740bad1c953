#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordertop/finstruct.hpp"

namespace ordertop {

using json = nlohmann::ordered_json;

/// A relation record may carry a role tag such as "c-quasi-order".
struct TaggedRelation {
  BinaryRelation relation;
  std::string role;
  bool operator==(const TaggedRelation&) const = default;
};

using Object = std::variant<Qoset, Topology, OrderedSpace, Lattice, TaggedRelation, SpaceMap>;

/// "qoset", "topology", "ordered_space", "lattice", "relation" or "map".
std::string_view kind_of(const Object& obj);

json to_json(const Qoset& q);
json to_json(const Topology& t);
json to_json(const OrderedSpace& s);
json to_json(const Lattice& l);
json to_json(const BinaryRelation& r, std::string_view role = {});
json to_json(const SpaceMap& f);
json to_json(const Object& obj);

json set_to_json(PointSet s);
json matrix_to_json(const BoolMatrix& m);

/// Throws SchemaError naming the offending field, or the validation error of the payload.
Object from_json(const json& j);
/// Throws ParseError carrying the byte position, then as from_json.
Object decode(std::string_view text);
/// One record per nonempty line.
std::vector<Object> decode_stream(std::string_view text);
/// Compact single-line record; deterministic.
std::string encode(const Object& obj);

json parse_json(std::string_view text);

// field readers shared with other record kinds
std::size_t read_size(const json& j, const char* field);
PointSet read_set(const json& j, const char* field, std::size_t n);
std::vector<PointSet> read_family(const json& j, const char* field, std::size_t n);
BoolMatrix read_matrix(const json& j, const char* field, std::size_t n);
const json& require_field(const json& j, const char* field);

template <class T>
T decode_as(const json& j) {
  auto obj = from_json(j);
  if (auto* p = std::get_if<T>(&obj)) return *p;
  throw Error(ErrorCode::KindMismatch, {}, "unexpected record kind '" + std::string(kind_of(obj)) + "'");
}

}  // namespace ordertop
