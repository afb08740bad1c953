#include "ordertop/codec.hpp"

#include <sstream>

namespace ordertop {

std::string_view kind_of(const Object& obj) {
  struct {
    std::string_view operator()(const Qoset&) const { return "qoset"; }
    std::string_view operator()(const Topology&) const { return "topology"; }
    std::string_view operator()(const OrderedSpace&) const { return "ordered_space"; }
    std::string_view operator()(const Lattice&) const { return "lattice"; }
    std::string_view operator()(const TaggedRelation&) const { return "relation"; }
    std::string_view operator()(const SpaceMap&) const { return "map"; }
  } visitor;
  return std::visit(visitor, obj);
}

json set_to_json(PointSet s) {
  json out = json::array();
  s.for_each([&](std::size_t x) { out.push_back(x); });
  return out;
}

json matrix_to_json(const BoolMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

json family_to_json(const std::vector<PointSet>& family) {
  json out = json::array();
  for (auto s : family) out.push_back(set_to_json(s));
  return out;
}

}  // namespace

json to_json(const Qoset& q) {
  return json{{"kind", "qoset"}, {"n", q.size()}, {"leq", matrix_to_json(q.relation().matrix())}};
}

json to_json(const Topology& t) {
  return json{{"kind", "topology"}, {"n", t.size()}, {"opens", family_to_json(t.opens())}};
}

json to_json(const OrderedSpace& s) {
  return json{{"kind", "ordered_space"},
              {"n", s.size()},
              {"leq", matrix_to_json(s.order.relation().matrix())},
              {"opens", family_to_json(s.topology.opens())}};
}

json to_json(const Lattice& l) {
  return json{{"kind", "lattice"}, {"n", l.size()}, {"leq", matrix_to_json(l.matrix())}};
}

json to_json(const BinaryRelation& r, std::string_view role) {
  json out{{"kind", "relation"}, {"n", r.size()}, {"rel", matrix_to_json(r.matrix())}};
  if (!role.empty()) out["role"] = role;
  return out;
}

json to_json(const SpaceMap& f) {
  return json{{"kind", "map"}, {"n_src", f.source_size}, {"n_dst", f.target_size}, {"value", f.value}};
}

json to_json(const Object& obj) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TaggedRelation>)
          return to_json(v.relation, v.role);
        else
          return to_json(v);
      },
      obj);
}

const json& require_field(const json& j, const char* field) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, {}, "record is not an object");
  auto it = j.find(field);
  if (it == j.end()) throw Error(ErrorCode::SchemaError, {}, std::string("missing field '") + field + "'");
  return *it;
}

std::size_t read_size(const json& j, const char* field) {
  const auto& v = require_field(j, field);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw Error(ErrorCode::SchemaError, {}, std::string("field '") + field + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

namespace {

PointSet set_from(const json& v, const char* field, std::size_t n) {
  if (!v.is_array()) throw Error(ErrorCode::SchemaError, {}, std::string("field '") + field + "' must hold arrays");
  PointSet s;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      throw Error(ErrorCode::SchemaError, {}, std::string("field '") + field + "' must hold point indices");
    const auto x = e.get<std::size_t>();
    if (x >= n) throw Error(ErrorCode::NotSubset, {x}, std::string("point outside carrier in '") + field + "'");
    s = s.with(x);
  }
  return s;
}

}  // namespace

PointSet read_set(const json& j, const char* field, std::size_t n) { return set_from(require_field(j, field), field, n); }

std::vector<PointSet> read_family(const json& j, const char* field, std::size_t n) {
  const auto& v = require_field(j, field);
  if (!v.is_array()) throw Error(ErrorCode::SchemaError, {}, std::string("field '") + field + "' must be an array");
  std::vector<PointSet> out;
  for (const auto& e : v) out.push_back(set_from(e, field, n));
  return out;
}

BoolMatrix read_matrix(const json& j, const char* field, std::size_t n) {
  const auto& v = require_field(j, field);
  auto bad = [&] {
    return Error(ErrorCode::SchemaError, {}, std::string("field '") + field + "' must be an n x n 0/1 matrix");
  };
  if (!v.is_array() || v.size() != n) throw bad();
  BoolMatrix m(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (!v[x].is_array() || v[x].size() != n) throw bad();
    for (std::size_t y = 0; y < n; ++y) {
      const auto& e = v[x][y];
      if (e.is_boolean())
        m[x][y] = e.get<bool>();
      else if (e.is_number_integer() && (e.get<long long>() == 0 || e.get<long long>() == 1))
        m[x][y] = e.get<long long>() == 1;
      else
        throw bad();
    }
  }
  return m;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, {e.byte}, e.what());
  }
}

Object from_json(const json& j) {
  const auto& kind_field = require_field(j, "kind");
  if (!kind_field.is_string()) throw Error(ErrorCode::SchemaError, {}, "field 'kind' must be a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "map") {
    const auto n_src = read_size(j, "n_src");
    const auto n_dst = read_size(j, "n_dst");
    const auto& v = require_field(j, "value");
    if (!v.is_array()) throw Error(ErrorCode::SchemaError, {}, "field 'value' must be an array");
    std::vector<std::size_t> values;
    for (const auto& e : v) {
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw Error(ErrorCode::SchemaError, {}, "field 'value' must hold point indices");
      values.push_back(e.get<std::size_t>());
    }
    return SpaceMap(n_src, n_dst, std::move(values));
  }
  const auto n = read_size(j, "n");
  if (kind == "qoset") return Qoset::validate(read_matrix(j, "leq", n));
  if (kind == "topology") {
    if (n == 0 || n > kMaxPoints) throw Error(ErrorCode::BadCarrier, {n});
    return Topology::validate(n, read_family(j, "opens", n));
  }
  if (kind == "ordered_space") {
    auto q = Qoset::validate(read_matrix(j, "leq", n));
    return OrderedSpace(q, Topology::validate(n, read_family(j, "opens", n)));
  }
  if (kind == "lattice") return Lattice::validate(read_matrix(j, "leq", n));
  if (kind == "relation") {
    std::string role;
    if (auto it = j.find("role"); it != j.end()) {
      if (!it->is_string()) throw Error(ErrorCode::SchemaError, {}, "field 'role' must be a string");
      role = it->get<std::string>();
    }
    return TaggedRelation{BinaryRelation::from_matrix(read_matrix(j, "rel", n)), role};
  }
  throw Error(ErrorCode::SchemaError, {}, "unknown kind '" + kind + "' in field 'kind'");
}

Object decode(std::string_view text) { return from_json(parse_json(text)); }

std::vector<Object> decode_stream(std::string_view text) {
  std::vector<Object> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back(decode(line));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, {start + (e.witness().empty() ? 0 : e.witness()[0])}, e.what());
      }
    }
    start = end + 1;
  }
  return out;
}

std::string encode(const Object& obj) { return to_json(obj).dump(); }

}  // namespace ordertop
