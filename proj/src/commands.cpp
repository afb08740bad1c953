#include <string>

#include "ordertop/cord.hpp"
#include "ordertop/labcli.hpp"
#include "ordertop/latid.hpp"
#include "ordertop/ospace.hpp"
#include "ordertop/topoderive.hpp"

namespace ordertop {

namespace {

Qoset order_of(const Object& obj) {
  if (auto* q = std::get_if<Qoset>(&obj)) return *q;
  if (auto* s = std::get_if<OrderedSpace>(&obj)) return s->order;
  if (auto* t = std::get_if<Topology>(&obj)) return specialization(*t);
  throw Error(ErrorCode::KindMismatch, {}, "a quasi-order is required, got " + std::string(kind_of(obj)));
}

const Topology& topology_of_record(const Object& obj) {
  if (auto* t = std::get_if<Topology>(&obj)) return *t;
  if (auto* s = std::get_if<OrderedSpace>(&obj)) return s->topology;
  throw Error(ErrorCode::KindMismatch, {}, "a topology is required, got " + std::string(kind_of(obj)));
}

const OrderedSpace& space_of_record(const Object& obj) {
  if (auto* s = std::get_if<OrderedSpace>(&obj)) return *s;
  throw Error(ErrorCode::KindMismatch, {}, "an ordered space is required, got " + std::string(kind_of(obj)));
}

CQuasiOrder c_order_of(const Object& obj) {
  if (auto* r = std::get_if<TaggedRelation>(&obj)) return CQuasiOrder::validate(r->relation);
  if (auto* t = std::get_if<Topology>(&obj)) return CQuasiOrder::validate(interior_relation(*t));
  throw Error(ErrorCode::KindMismatch, {}, "a relation or topology is required, got " + std::string(kind_of(obj)));
}

json flags_to_json(const FlagList& flags) {
  json j = json::object();
  for (const auto& [name, v] : flags) j[name] = v;
  return j;
}

json bundle_to_json(const BundleResult& r) {
  json verdicts = json::object();
  for (std::size_t i = 0; i < r.labels.size(); ++i) verdicts[r.labels[i]] = static_cast<bool>(r.verdicts[i]);
  return {{"hypothesis", r.hypothesis}, {"agree", r.agree}, {"conditions", verdicts}};
}

bool meet_semilattice(const Qoset& q) {
  try {
    meet_table(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

json space_invariants(const OrderedSpace& t) {
  json j;
  j["separation"] = flags_to_json(separation_profile(t).flags());
  j["convexity"] = flags_to_json(convexity_profile(t).flags());
  j["stability"] = flags_to_json(stability_profile(t).flags());
  j["webs"] = flags_to_json(web_profile(t).flags());
  json bundles = json::object();
  for (auto b : {Bundle::thm_4_6, Bundle::thm_5_3, Bundle::thm_6_2})
    bundles[std::string(to_string(b))] = bundle_to_json(theorem_bundle(t, b));
  if (meet_semilattice(t.order)) {
    j["semilattice"] = flags_to_json(semilattice_profile(t).flags());
    for (auto b : {Bundle::thm_7_2, Bundle::prop_7_4})
      bundles[std::string(to_string(b))] = bundle_to_json(theorem_bundle(t, b));
  }
  j["bundles"] = bundles;
  return j;
}

json order_invariants(const Qoset& q) {
  return {{"partial-order", q.antisymmetric()},
          {"classes", q.class_count()},
          {"meet-semilattice", meet_semilattice(q)},
          {"dcpo", is_dcpo(q)},
          {"continuous-domain", is_continuous_domain(q)},
          {"meet-continuous-domain", is_meet_continuous_domain(q)}};
}

json topology_invariants(const Topology& s) {
  json j;
  j["t0"] = is_t0(s);
  j["sober"] = is_sober(s);
  j["d-space"] = is_dspace(s);
  j["hausdorff"] = is_hausdorff(s);
  j["specialization-classes"] = specialization(s).class_count();
  try {
    const auto p = core_space_profile(s);
    json core = json::object();
    for (std::size_t i = 0; i < p.flags.size(); ++i) core[std::string(CoreProfile::names[i])] = p.flags[i];
    j["core-space"] = core;
  } catch (const Error& e) {
    j["core-space"] = {{"skipped", e.what()}};
  }
  if (s.size() <= kInvariantCap) {
    const auto inv = cardinal_invariants(s);
    j["cardinals"] = {{"cofinality", inv.c.value},
                      {"weight", inv.w_open.value},
                      {"closed-weight", inv.w_closed.value},
                      {"patch-weight", inv.w_patch.value},
                      {"patch-density", inv.d_patch.value},
                      {"minimal-core-basis", set_to_json(minimal_core_basis(s))}};
  }
  return j;
}

json lattice_invariants(const Lattice& l) {
  json laws = json::object();
  for (auto law : kAllLatticeLaws) laws[std::string(to_string(law))] = law_to_json(check_law(l, law));
  json j;
  j["laws"] = laws;
  j["coprimes"] = set_to_json(coprimes(l));
  j["join-irreducibles"] = set_to_json(join_irreducibles(l));
  j["weight"] = min_join_dense(l).weight;
  j["dual-weight"] = min_join_dense(l.dual()).weight;
  return j;
}

}  // namespace

json law_to_json(const LawResult& r) {
  json j = {{"holds", r.holds}};
  if (r.witness) {
    json w = {{"x", r.witness->x}, {"y", set_to_json(r.witness->y)}};
    if (!r.witness->collection.empty()) {
      json c = json::array();
      for (auto s : r.witness->collection) c.push_back(set_to_json(s));
      w["collection"] = c;
    }
    j["witness"] = w;
  }
  return j;
}

json derive(std::string_view op, const Object& obj) {
  if (op == "scott") return to_json(upset_topology(order_of(obj), UpsetKind::sigma));
  if (op == "lawson") {
    const auto q = order_of(obj);
    return to_json(OrderedSpace(q, upset_topology(q, UpsetKind::lawson)));
  }
  if (op.starts_with("patch:"))
    return to_json(patch(topology_of_record(obj), coselection_from_string(op.substr(6))));
  if (op == "upper") return to_json(upper_space(space_of_record(obj)));
  if (op == "lower") return to_json(lower_space(space_of_record(obj)));
  if (op == "cocompact") return to_json(cocompact(topology_of_record(obj)));
  if (op == "interior-relation") return to_json(interior_relation(topology_of_record(obj)), "c-quasi-order");
  if (op == "completion") {
    const auto c = rounded_ideal_completion(c_order_of(obj));
    json ideals = json::array();
    for (auto s : c.ideals) ideals.push_back(set_to_json(s));
    return {{"kind", "completion"},
            {"domain", to_json(c.domain)},
            {"ideals", ideals},
            {"basis", c.basis},
            {"way_below_matches", c.way_below_matches}};
  }
  if (op == "quasi-uniformity") {
    const auto e = quasi_uniformity(topology_of_record(obj));
    json base = json::array();
    for (const auto& u : e.base) base.push_back(to_json(u, "entourage"));
    return {{"kind", "entourage-base"}, {"n", e.n}, {"base", base}};
  }
  throw Error(ErrorCode::SchemaError, {}, "unknown derive op '" + std::string(op) + "'");
}

json invariants(const Object& obj) {
  json j;
  j["kind"] = kind_of(obj);
  if (auto* t = std::get_if<Topology>(&obj)) {
    j["topology"] = topology_invariants(*t);
    j["order"] = order_invariants(specialization(*t));
    j["ordered-space"] = space_invariants(OrderedSpace(specialization(*t), *t));
  } else if (auto* s = std::get_if<OrderedSpace>(&obj)) {
    j["ordered-space"] = space_invariants(*s);
    j["order"] = order_invariants(s->order);
    j["topology"] = topology_invariants(s->topology);
  } else if (auto* q = std::get_if<Qoset>(&obj)) {
    j["order"] = order_invariants(*q);
  } else if (auto* l = std::get_if<Lattice>(&obj)) {
    j["lattice"] = lattice_invariants(*l);
  } else if (auto* r = std::get_if<TaggedRelation>(&obj)) {
    const auto c = CQuasiOrder::validate(r->relation);
    const auto comp = rounded_ideal_completion(c);
    j["c-order"] = {{"lower-classes", c.lower().class_count()},
                    {"rounded-sets", rounded_sets(c).size()},
                    {"completion-size", comp.ideals.size()},
                    {"way-below-matches", comp.way_below_matches}};
  } else {
    throw Error(ErrorCode::KindMismatch, {}, "no invariants for map records");
  }
  return j;
}

}  // namespace ordertop
