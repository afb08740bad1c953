#include "ordertop/labcli.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ordertop/cord.hpp"
#include "ordertop/latid.hpp"
#include "ordertop/ospace.hpp"
#include "ordertop/topoderive.hpp"

namespace ordertop {

namespace {

OrderedSpace as_ordered_space(const Object& obj) {
  if (auto* s = std::get_if<OrderedSpace>(&obj)) return *s;
  if (auto* t = std::get_if<Topology>(&obj)) return OrderedSpace(specialization(*t), *t);
  throw Error(ErrorCode::KindMismatch, {}, "an ordered space or topology is required, got " + std::string(kind_of(obj)));
}

Topology as_topology(const Object& obj) {
  if (auto* t = std::get_if<Topology>(&obj)) return *t;
  if (auto* s = std::get_if<OrderedSpace>(&obj)) return s->topology;
  throw Error(ErrorCode::KindMismatch, {}, "a topology or ordered space is required, got " + std::string(kind_of(obj)));
}

Qoset as_qoset(const Object& obj) {
  if (auto* q = std::get_if<Qoset>(&obj)) return *q;
  if (auto* s = std::get_if<OrderedSpace>(&obj)) return s->order;
  if (auto* t = std::get_if<Topology>(&obj)) return specialization(*t);
  if (auto* r = std::get_if<TaggedRelation>(&obj)) return Qoset::validate(r->relation);
  throw Error(ErrorCode::KindMismatch, {}, "a quasi-order is required, got " + std::string(kind_of(obj)));
}

const Lattice& as_lattice(const Object& obj) {
  if (auto* l = std::get_if<Lattice>(&obj)) return *l;
  throw Error(ErrorCode::KindMismatch, {}, "a lattice is required, got " + std::string(kind_of(obj)));
}

bool is_meet_semilattice(const Qoset& q) {
  try {
    meet_table(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_t1(const Topology& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!t.is_closed(PointSet::singleton(x))) return false;
  return true;
}

struct Entry {
  PredicateInfo info;
  std::function<bool(const Object&)> fn;
};

template <class F>
Entry on_space(std::string tag, std::string summary, F f) {
  return {{std::move(tag), PredicateDomain::ordered_space, std::move(summary)},
          [f](const Object& o) { return f(as_ordered_space(o)); }};
}

template <class F>
Entry on_topology(std::string tag, std::string summary, F f) {
  return {{std::move(tag), PredicateDomain::topology, std::move(summary)},
          [f](const Object& o) { return f(as_topology(o)); }};
}

template <class F>
Entry on_qoset(std::string tag, std::string summary, F f) {
  return {{std::move(tag), PredicateDomain::qoset, std::move(summary)}, [f](const Object& o) { return f(as_qoset(o)); }};
}

// semilattice flags read false on orders without meets
template <class F>
Entry on_semilattice(std::string tag, std::string summary, F f) {
  return on_space(std::move(tag), std::move(summary), [f](const OrderedSpace& t) {
    return is_meet_semilattice(t.order) && f(semilattice_profile(t));
  });
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  // separation
  r.push_back(on_space("lower-semi-qospace", "principal ideals closed", is_lower_semi_qospace));
  r.push_back(on_space("upper-semi-qospace", "principal filters closed", is_upper_semi_qospace));
  r.push_back(on_space("semi-qospace", "principal ideals and filters closed", is_semi_qospace));
  r.push_back(on_space("qospace", "order closed in the square", is_qospace));
  r.push_back(on_space("pospace", "qospace with antisymmetric order",
                       [](const OrderedSpace& t) { return is_qospace(t) && t.order.antisymmetric(); }));
  r.push_back(on_space("T1-ordered", "semi-qospace with antisymmetric order",
                       [](const OrderedSpace& t) { return is_semi_qospace(t) && t.order.antisymmetric(); }));
  r.push_back(on_space("T2-ordered", "incomparable points separated by an open upper and an open lower set",
                       is_t2_ordered));
  r.push_back(on_space("upper-regular", "open upper sets regular against closed lower sets", is_upper_regular));
  r.push_back(on_space("lower-regular", "open lower sets regular against closed upper sets", is_lower_regular));
  r.push_back(on_space("upper-T3-ordered", "upper regular and T1-ordered", [](const OrderedSpace& t) {
    return is_upper_regular(t) && is_semi_qospace(t) && t.order.antisymmetric();
  }));
  // convexity
  r.push_back(on_space("locally-convex", "convex opens form a base", is_locally_convex));
  r.push_back(on_space("strongly-convex", "generated by open upper and open lower sets", is_strongly_convex));
  r.push_back(on_space("hyperconvex", "upsilon-convex",
                       [](const OrderedSpace& t) { return is_zeta_convex(t, Coselection::upsilon); }));
  r.push_back(on_space("sigma-convex", "sigma-convex",
                       [](const OrderedSpace& t) { return is_zeta_convex(t, Coselection::sigma); }));
  r.push_back(on_space("alpha-convex", "alpha-convex",
                       [](const OrderedSpace& t) { return is_zeta_convex(t, Coselection::alpha); }));
  // stability
  r.push_back(on_space("up-stable", "up-closures of opens are open", is_up_stable));
  r.push_back(on_space("d-stable", "filtered-set interior condition", is_d_stable));
  r.push_back(on_space("core-stable", "up-closures of opens are unions of interiors of cores", is_core_stable));
  r.push_back(on_space("veeF-stable", "stable for the vee family",
                       [](const OrderedSpace& t) { return is_family_stable(t, UpsetFamily::vee); }));
  r.push_back(on_space("wedgeF-stable", "stable for the wedge family",
                       [](const OrderedSpace& t) { return is_family_stable(t, UpsetFamily::wedge); }));
  r.push_back(on_space("diamond-stable", "stable for the diamond family",
                       [](const OrderedSpace& t) { return is_family_stable(t, UpsetFamily::diamond); }));
  // webs, sectors, fans
  r.push_back(on_space("web-ordered", "neighbourhood bases of webs", is_web_ordered));
  r.push_back(on_space("locally-filtered", "neighbourhood bases of filtered sets", is_locally_filtered));
  r.push_back(on_space("sector-space", "up-stable semi-qospace with a base of sectors", is_sector_space));
  r.push_back(on_space("upsilon-sector-space", "sectors cut by upsilon-open lower sets",
                       [](const OrderedSpace& t) { return is_zeta_sector_space(t, Coselection::upsilon); }));
  r.push_back(on_space("fan-space", "up-stable semi-qospace with neighbourhood bases of fans", is_fan_space));
  r.push_back(on_space("mc-ordered", "directed tails enter the opens around their joins", is_mc_ordered));
  r.push_back(on_space("upper-m-determined", "upper space determined by its meet-stable subbase", is_upper_m_determined));
  r.push_back(on_space("lawson-space", "partial order with its Lawson topology", is_lawson_space));
  // semilattice-ordered spaces
  r.push_back(on_semilattice("compatible", "topology between the weak and Alexandroff upper topologies",
                             [](const SemilatticeProfile& p) { return p.compatible; }));
  r.push_back(on_semilattice("semitopological", "translations continuous",
                             [](const SemilatticeProfile& p) { return p.semitopological; }));
  r.push_back(on_semilattice("topological", "meet continuous", [](const SemilatticeProfile& p) { return p.topological; }));
  r.push_back(on_semilattice("small-semilattices", "neighbourhood bases of subsemilattices",
                             [](const SemilatticeProfile& p) { return p.small_semilattices; }));
  r.push_back(on_semilattice("small-convex-semilattices", "neighbourhood bases of convex subsemilattices",
                             [](const SemilatticeProfile& p) { return p.small_convex_semilattices; }));
  // topologies
  r.push_back(on_topology("t0", "distinct points have distinct neighbourhoods", is_t0));
  r.push_back(on_topology("t1", "points closed", is_t1));
  r.push_back(on_topology("hausdorff", "points separated by disjoint opens", is_hausdorff));
  r.push_back(on_topology("sober", "irreducible closed sets are point closures", is_sober));
  r.push_back(on_topology("d-space", "directed closures are point closures", is_dspace));
  r.push_back(on_topology("compact", "every open cover has a finite subcover", [](const Topology& t) {
    return compactness(t, t.carrier(), Compactness::compact);
  }));
  r.push_back(on_topology("core-space", "neighbourhood bases of cores", has_core_neighborhood_bases));
  r.push_back(on_topology("web-space", "neighbourhood bases of webs", is_web_space));
  r.push_back(on_topology("wide-web-space", "neighbourhood bases of filtered sets", is_wide_web_space));
  r.push_back(on_topology("locally-compact", "neighbourhood bases of compact sets", is_locally_compact));
  // orders
  r.push_back(on_qoset("partial-order", "antisymmetric", [](const Qoset& q) { return q.antisymmetric(); }));
  r.push_back(on_qoset("meet-semilattice", "all binary meets exist", is_meet_semilattice));
  r.push_back(on_qoset("dcpo", "directed sets have joins", is_dcpo));
  r.push_back(on_qoset("continuous-domain", "continuous dcpo", is_continuous_domain));
  r.push_back(on_qoset("meet-continuous-domain", "meet-continuous dcpo", is_meet_continuous_domain));
  // lattices
  for (auto law : kAllLatticeLaws)
    r.push_back({{std::string(to_string(law)), PredicateDomain::lattice, "lattice law"},
                 [law](const Object& o) { return check_law(as_lattice(o), law).holds; }});
  std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.info.tag < b.info.tag; });
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = build_registry();
  return r;
}

const Entry& entry(std::string_view tag) {
  const auto& r = registry();
  auto it = std::lower_bound(r.begin(), r.end(), tag, [](const Entry& e, std::string_view t) { return e.info.tag < t; });
  if (it == r.end() || it->info.tag != tag)
    throw Error(ErrorCode::UnknownPredicateTag, {}, "unknown predicate tag '" + std::string(tag) + "'");
  return *it;
}

}  // namespace

std::string_view to_string(PredicateDomain d) {
  switch (d) {
    case PredicateDomain::ordered_space: return "ordered-space";
    case PredicateDomain::topology: return "topology";
    case PredicateDomain::qoset: return "qoset";
    case PredicateDomain::lattice: return "lattice";
  }
  return "?";
}

const std::vector<PredicateInfo>& predicate_registry() {
  static const std::vector<PredicateInfo> infos = [] {
    std::vector<PredicateInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const PredicateInfo& predicate_info(std::string_view tag) { return entry(tag).info; }

bool evaluate_predicate(std::string_view tag, const Object& obj) { return entry(tag).fn(obj); }

// ---------------------------------------------------------------------------
// hunting

json HuntResult::to_json(const HypothesisSpec& h) const {
  json j;
  j["status"] = found ? "counterexample" : "exhausted";
  j["kind"] = to_string(h.kind);
  j["assume"] = h.assume;
  j["refute"] = h.refute;
  if (found) {
    j["size"] = size;
    j["index"] = index;
    j["searched"] = searched;
    j["instance"] = ordertop::to_json(*instance);
  } else {
    j["sizes"] = json::array({1, h.n});
    j["searched"] = searched;
  }
  return j;
}

HuntResult hunt(const HypothesisSpec& h) {
  std::vector<const Entry*> assume;
  for (const auto& tag : h.assume) assume.push_back(&entry(tag));
  const Entry& refute = entry(h.refute);
  if (h.n == 0) throw Error(ErrorCode::BadCarrier, {0}, "hunt needs at least one point");
  const auto cap = enumeration_cap(h.kind, h.allow_large);
  if (h.n > cap) throw Error(ErrorCode::BoundTooLarge, {h.n, cap}, std::string(to_string(h.kind)));

  HuntResult res;
  auto test = [&](const Object& obj, std::size_t m, std::size_t index) {
    ++res.searched;
    for (const auto* e : assume)
      if (!e->fn(obj)) return false;
    if (refute.fn(obj)) return false;
    res.found = true;
    res.instance = obj;
    res.size = m;
    res.index = index;
    return true;
  };

  for (std::size_t m = 1; m <= h.n; ++m) {
    if (h.kind == EnumKind::ordered_space || h.kind == EnumKind::semilattice_ordered_space) {
      const auto orders =
          h.kind == EnumKind::ordered_space ? enumerate_partial_orders(m) : enumerate_semilattice_orders(m);
      const auto tops = enumerate_topologies(m);
      std::size_t index = 0;
      for (const auto& q : orders)
        for (const auto& t : tops)
          if (test(Object(OrderedSpace(q, t)), m, index++)) return res;
    } else {
      std::size_t index = 0;
      for (const auto& obj : enumerate(h.kind, m, h.allow_large))
        if (test(obj, m, index++)) return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// fixtures

json Fixture::to_json() const {
  json j;
  j["name"] = name;
  j["note"] = note;
  if (truncated) j["banner"] = kTruncationBanner;
  j["object"] = ordertop::to_json(object);
  return j;
}

namespace {

Lattice lattice_from_up(std::size_t m, std::vector<std::vector<std::size_t>> strictly_above) {
  std::vector<PointSet> rows(m);
  for (std::size_t a = 0; a < m; ++a) {
    rows[a] = PointSet::singleton(a);
    for (auto b : strictly_above[a]) rows[a] = rows[a].with(b);
  }
  return Lattice::validate(m, rows);
}

// b_0 = 0, b_1..b_{k-1} = 1..k-1, a = k, top = k+1
Lattice ex33_truncation(std::size_t k) {
  const std::size_t m = k + 2;
  const std::size_t top = k + 1;
  std::vector<PointSet> rows(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const bool b_chain = x < k && y < k && x < y;
      if (x == y || x == 0 || y == top || b_chain) rows[x] = rows[x].with(y);
    }
  return Lattice::validate(m, rows);
}

// a_0..a_{k-1} = 0..k-1, b_{k-1}..b_0 = k..2k-1, c_{k-1}..c_0 = 2k..3k-1,
// ordered as points of the plane
Lattice plane_truncation(std::size_t k) {
  const std::size_t m = 3 * k;
  struct Pt {
    double x, y;
  };
  std::vector<Pt> pts(m);
  for (std::size_t i = 0; i < k; ++i) {
    const double e = 1.0 / static_cast<double>(std::size_t{1} << i);
    pts[i] = {0.0, -e};
    pts[2 * k - 1 - i] = {e, 0.0};
    pts[3 * k - 1 - i] = {e, e};
  }
  std::vector<PointSet> rows(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (pts[p].x <= pts[q].x && pts[p].y <= pts[q].y) rows[p] = rows[p].with(q);
  return Lattice::validate(m, rows);
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> f;
  f.push_back({"sierpinski", Topology::validate(2, {PointSet(0), PointSet::of({1}), PointSet::full(2)}),
               "two points, {1} open", false});
  f.push_back({"chain2", Qoset::chain(2), "0 < 1", false});
  f.push_back({"chain3", Qoset::chain(3), "0 < 1 < 2", false});
  f.push_back({"chain3-up-unstable",
               OrderedSpace(Qoset::chain(3), Topology::validate(3, {PointSet(0), PointSet::of({1}), PointSet::full(3)})),
               "3-chain with the opens {}, {1}, X; the up-closure of {1} is not open", false});
  f.push_back({"two-squared", lattice_from_up(4, {{1, 2, 3}, {3}, {3}, {}}), "Boolean lattice of a 2-set", false});
  f.push_back({"m3", lattice_from_up(5, {{1, 2, 3, 4}, {4}, {4}, {4}, {}}), "diamond: three atoms", false});
  f.push_back({"n5", lattice_from_up(5, {{1, 2, 3, 4}, {2, 4}, {4}, {4}, {}}), "pentagon: 0 < 1 < 2 < 4, 0 < 3 < 4", false});
  for (std::size_t k = 1; k <= 4; ++k)
    f.push_back({"ex33-trunc-" + std::to_string(k), ex33_truncation(k),
                 "b_i = i for i < " + std::to_string(k) + ", a = " + std::to_string(k) + ", top = " +
                     std::to_string(k + 1) +
                     "; x <= y iff x = y, x = b_0, y = top, or x = b_i, y = b_j with i < j",
                 true});
  for (std::size_t k = 1; k <= 3; ++k)
    f.push_back({"plane-trunc-" + std::to_string(k), plane_truncation(k),
                 "a_i = (0, -2^-i), b_i = (2^-i, 0), c_i = (2^-i, 2^-i) for i < " + std::to_string(k) +
                     ", ordered coordinatewise; a ascending, then b and c by descending index",
                 true});
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f = build_fixtures();
  return f;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw Error(ErrorCode::SchemaError, {}, "unknown fixture '" + std::string(name) + "'");
}

const std::vector<FrozenHunt>& frozen_hunts() {
  // searched = ordered spaces with at most n points: sum over m of posets(m) * topologies(m)
  static const std::vector<FrozenHunt> h = [] {
    std::vector<FrozenHunt> out;
    auto exhausted = [](const HypothesisSpec& s, std::size_t searched) {
      json j;
      j["status"] = "exhausted";
      j["kind"] = to_string(s.kind);
      j["assume"] = s.assume;
      j["refute"] = s.refute;
      j["sizes"] = json::array({1, s.n});
      j["searched"] = searched;
      return j;
    };
    HypothesisSpec a{{"hyperconvex", "semi-qospace", "up-stable", "locally-filtered"}, "core-stable",
                     EnumKind::ordered_space, 4, false};
    out.push_back({"hyperconvex-filtered-refute-core-stable", a, exhausted(a, 1 + 3 * 4 + 19 * 29 + 219 * 355)});
    HypothesisSpec b{{"semi-qospace"}, "up-stable", EnumKind::ordered_space, 3, false};
    out.push_back({"semi-qospace-refute-up-stable", b, exhausted(b, 1 + 3 * 4 + 19 * 29)});
    HypothesisSpec c{{}, "compact", EnumKind::topology, 4, false};
    out.push_back({"refute-compact", c, exhausted(c, 1 + 4 + 29 + 355)});
    return out;
  }();
  return h;
}

}  // namespace ordertop
