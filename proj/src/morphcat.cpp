#include "ordertop/morphcat.hpp"

#include <algorithm>

#include "ordertop/iso.hpp"
#include "ordertop/latid.hpp"
#include "ordertop/ospace.hpp"
#include "ordertop/topoderive.hpp"

namespace ordertop {

namespace {

std::size_t object_size(const Object& o) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TaggedRelation>)
          return v.relation.size();
        else if constexpr (std::is_same_v<T, SpaceMap>)
          return v.source_size;
        else
          return v.size();
      },
      o);
}

Qoset lattice_order(const Lattice& l) {
  std::vector<PointSet> rows(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) rows[a] = l.up(a);
  return Qoset::validate(BinaryRelation(l.size(), std::move(rows)));
}

CQuasiOrder c_order_of(const TaggedRelation& r) {
  if (r.role != "c-quasi-order")
    throw Error(ErrorCode::ContextMismatch, {}, "relation context needs role 'c-quasi-order'");
  return CQuasiOrder::validate(r.relation);
}

struct Context {
  Qoset order;
  std::optional<Topology> topology;
  std::optional<BinaryRelation> interior;  // the C-quasi-order
  bool ordered_space = false;
};

Context context_of(const Object& o) {
  Context c;
  if (auto* q = std::get_if<Qoset>(&o)) {
    c.order = *q;
  } else if (auto* t = std::get_if<Topology>(&o)) {
    c.order = specialization(*t);
    c.topology = *t;
    c.interior = interior_relation(*t);
  } else if (auto* s = std::get_if<OrderedSpace>(&o)) {
    c.order = s->order;
    c.topology = s->topology;
    c.ordered_space = true;
  } else if (auto* l = std::get_if<Lattice>(&o)) {
    c.order = lattice_order(*l);
  } else if (auto* r = std::get_if<TaggedRelation>(&o)) {
    const auto cq = c_order_of(*r);
    c.order = cq.lower();
    c.topology = topology_of(cq);
    c.interior = cq.relation();
  } else {
    throw Error(ErrorCode::ContextMismatch, {}, "a map is not a context");
  }
  return c;
}

bool preimages_in(const SpaceMap& f, const std::vector<PointSet>& sets, bool want_closed, const Topology& judge) {
  for (auto s : sets) {
    const auto pre = f.preimage(s);
    if (want_closed ? !judge.is_closed(pre) : !judge.is_open(pre)) return false;
  }
  return true;
}

bool continuous(const SpaceMap& f, const Topology& src, const Topology& dst) {
  return preimages_in(f, dst.opens(), false, src);
}

bool zeta_proper(const SpaceMap& f, const Topology& src, const Topology& dst, Coselection z) {
  if (!continuous(f, src, dst)) return false;
  const auto co = coselection(specialization(dst).dual(), z);
  const auto patched = patch(src, z).topology;
  std::vector<PointSet> closed;
  for (auto o : co.opens()) closed.push_back(o.complement(dst.size()));
  return preimages_in(f, closed, true, patched);
}

// Every preimage of a principal set (row of `dst_rows`) is a principal set of `src_rows`.
bool principal_preimages(const SpaceMap& f, const std::vector<PointSet>& src_rows,
                         const std::vector<PointSet>& dst_rows) {
  for (auto target : dst_rows) {
    const auto pre = f.preimage(target);
    if (std::find(src_rows.begin(), src_rows.end(), pre) == src_rows.end()) return false;
  }
  return true;
}

std::vector<PointSet> down_rows(const Qoset& q) {
  std::vector<PointSet> out(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) out[x] = q.down(x);
  return out;
}

}  // namespace

MapProfile map_profile(const SpaceMap& f, const Object& src, const Object& dst) {
  if (src.index() != dst.index())
    throw Error(ErrorCode::ContextMismatch, {}, std::string(kind_of(src)) + " vs " + std::string(kind_of(dst)));
  if (object_size(src) != f.source_size || object_size(dst) != f.target_size)
    throw Error(ErrorCode::ContextMismatch, {f.source_size, f.target_size}, "map size differs from its contexts");
  const auto a = context_of(src);
  const auto b = context_of(dst);
  MapProfile p;

  bool iso = true;
  for (std::size_t x = 0; x < f.source_size && iso; ++x)
    for (std::size_t y = 0; y < f.source_size; ++y)
      if (a.order.leq(x, y) && !b.order.leq(f(x), f(y))) { iso = false; break; }
  p.isotone = iso;
  p.residual = principal_preimages(f, a.order.relation().rows(), b.order.relation().rows());
  p.residuated = principal_preimages(f, down_rows(a.order), down_rows(b.order));

  if (a.topology && b.topology) {
    const auto& s = *a.topology;
    const auto& d = *b.topology;
    p.continuous = continuous(f, s, d);
    if (a.ordered_space) {
      std::vector<PointSet> closed_lower;
      for (auto c : d.closed_sets())
        if (b.order.is_lower(c)) closed_lower.push_back(c);
      p.lower_semicontinuous = preimages_in(f, closed_lower, true, s);
    } else {
      p.alpha_proper = zeta_proper(f, s, d, Coselection::alpha);
      p.sigma_proper = zeta_proper(f, s, d, Coselection::sigma);
      p.upsilon_proper = zeta_proper(f, s, d, Coselection::upsilon);
      std::vector<PointSet> src_cores, dst_cores;
      for (std::size_t x = 0; x < s.size(); ++x) src_cores.push_back(saturation(s, PointSet::singleton(x)));
      for (std::size_t y = 0; y < d.size(); ++y) dst_cores.push_back(saturation(d, PointSet::singleton(y)));
      p.core_continuous = *p.continuous && principal_preimages(f, src_cores, dst_cores);
      bool qo = true;
      for (auto o : s.opens())
        if (!d.is_open(saturation(d, f.image(o)))) { qo = false; break; }
      p.quasiopen = qo;
    }
  }

  if (a.interior && b.interior) {
    const auto& r = *a.interior;
    const auto& r2 = *b.interior;
    bool interp = true;
    for (std::size_t y = 0; y < f.source_size && interp; ++y)
      for (std::size_t x2 = 0; x2 < f.target_size && interp; ++x2) {
        if (!r2.holds(x2, f(y))) continue;
        bool found = false;
        for (std::size_t x = 0; x < f.source_size; ++x)
          if (r2.holds(x2, f(x)) && r.holds(x, y)) { found = true; break; }
        interp = found;
      }
    p.interpolating = interp;
  }
  return p;
}

std::vector<std::pair<std::string, std::optional<bool>>> MapProfile::flags() const {
  return {{"continuous", continuous},
          {"isotone", isotone},
          {"lower-semicontinuous", lower_semicontinuous},
          {"alpha-proper", alpha_proper},
          {"sigma-proper", sigma_proper},
          {"upsilon-proper", upsilon_proper},
          {"core-continuous", core_continuous},
          {"quasiopen", quasiopen},
          {"residuated", residuated},
          {"residual", residual},
          {"interpolating", interpolating}};
}

std::optional<SpaceMap> lower_adjoint(const SpaceMap& f, const Qoset& src, const Qoset& dst) {
  if (src.size() != f.source_size || dst.size() != f.target_size)
    throw Error(ErrorCode::ContextMismatch, {f.source_size, f.target_size}, "map size differs from its orders");
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < src.size(); ++y)
      if (src.leq(x, y) && !dst.leq(f(x), f(y))) throw Error(ErrorCode::NotIsotone, {x, y});
  std::vector<std::size_t> g(dst.size());
  for (std::size_t y = 0; y < dst.size(); ++y) {
    bool found = false;
    for (std::size_t gx = 0; gx < src.size() && !found; ++gx) {
      bool ok = true;
      for (std::size_t x = 0; x < src.size(); ++x)
        if (src.leq(gx, x) != dst.leq(y, f(x))) { ok = false; break; }
      if (ok) { g[y] = gx; found = true; }
    }
    if (!found) return std::nullopt;
  }
  return SpaceMap(dst.size(), src.size(), std::move(g));
}

// ---------------------------------------------------------------------------
// representations

std::string_view to_string(RepKind k) {
  switch (k) {
    case RepKind::c_ordered_set: return "c-ordered-set";
    case RepKind::t0_core_space: return "t0-core-space";
    case RepKind::fan_ordered_space: return "fan-ordered-space";
    case RepKind::based_domain: return "based-domain";
    case RepKind::core_based_sober_space: return "core-based-sober-space";
    case RepKind::based_supercontinuous_lattice: return "based-supercontinuous-lattice";
  }
  return "?";
}

RepKind rep_kind_from_string(std::string_view s) {
  for (auto k : kAllRepKinds)
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::SchemaError, {}, "unknown representation kind '" + std::string(s) + "'");
}

bool has_basis(RepKind k) {
  return k == RepKind::based_domain || k == RepKind::core_based_sober_space ||
         k == RepKind::based_supercontinuous_lattice;
}

namespace {

RepVerdict invalid(std::string reason, std::vector<std::uint64_t> witness = {}) {
  return RepVerdict{false, std::move(reason), std::move(witness)};
}

template <class T>
const T* payload_as(const Representation& r) {
  return std::get_if<T>(&r.payload);
}

}  // namespace

RepVerdict validate_representation(const Representation& r) {
  const auto n = object_size(r.payload);
  if (has_basis(r.kind) && !r.basis.subset_of(PointSet::full(n)))
    return invalid("basis outside the carrier", {r.basis.bits()});
  switch (r.kind) {
    case RepKind::c_ordered_set: {
      const auto* rel = payload_as<TaggedRelation>(r);
      if (rel == nullptr) return invalid("payload must be a relation");
      try {
        const auto c = CQuasiOrder::validate(rel->relation);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = x + 1; y < n; ++y)
            if (c.lower().leq(x, y) && c.lower().leq(y, x)) return invalid("lower quasi-order not antisymmetric", {x, y});
      } catch (const Error& e) {
        return invalid(e.what(), e.witness());
      }
      return {true, {}, {}};
    }
    case RepKind::t0_core_space: {
      const auto* t = payload_as<Topology>(r);
      if (t == nullptr) return invalid("payload must be a topology");
      if (!is_t0(*t)) return invalid("not T0");
      if (!has_core_neighborhood_bases(*t)) return invalid("not a core space");
      return {true, {}, {}};
    }
    case RepKind::fan_ordered_space: {
      const auto* s = payload_as<OrderedSpace>(r);
      if (s == nullptr) return invalid("payload must be an ordered space");
      if (!s->order.antisymmetric()) return invalid("order not antisymmetric");
      if (!is_fan_space(*s)) return invalid("not a fan space");
      return {true, {}, {}};
    }
    case RepKind::based_domain: {
      const auto* q = payload_as<Qoset>(r);
      if (q == nullptr) return invalid("payload must be a qoset");
      if (!is_dcpo(*q)) return invalid("not a domain");
      const auto wb = way_below(*q);
      for (std::size_t y = 0; y < n; ++y) {
        const auto approx = wb.before(y) & r.basis;
        if (!is_directed(*q, approx)) return invalid("basis approximants not directed", {y});
        if (!least_upper_bounds(*q, approx).contains(y)) return invalid("basis approximants miss the join", {y});
      }
      return {true, {}, {}};
    }
    case RepKind::core_based_sober_space: {
      const auto* t = payload_as<Topology>(r);
      if (t == nullptr) return invalid("payload must be a topology");
      if (!is_sober(*t)) return invalid("not sober");
      if (!core_basis_check(*t, r.basis)) return invalid("not a core basis", {r.basis.bits()});
      return {true, {}, {}};
    }
    case RepKind::based_supercontinuous_lattice: {
      const auto* l = payload_as<Lattice>(r);
      if (l == nullptr) return invalid("payload must be a lattice");
      const auto cd = check_law(*l, LatticeLaw::completely_distributive);
      if (!cd.holds) return invalid("not completely distributive");
      const auto stray = r.basis - coprimes(*l);
      if (!stray.empty()) return invalid("basis element not coprime", {stray.lowest()});
      if (!is_join_dense(*l, r.basis)) return invalid("basis not join-dense", {r.basis.bits()});
      return {true, {}, {}};
    }
  }
  return invalid("unknown kind");
}

namespace {

// The C-ordered set underlying a valid representation.
CQuasiOrder to_c_order(const Representation& r) {
  switch (r.kind) {
    case RepKind::c_ordered_set:
      return CQuasiOrder::validate(std::get<TaggedRelation>(r.payload).relation);
    case RepKind::t0_core_space:
      return CQuasiOrder::validate(interior_relation(std::get<Topology>(r.payload)));
    case RepKind::fan_ordered_space:
      return CQuasiOrder::validate(interior_relation(upper_space(std::get<OrderedSpace>(r.payload))));
    case RepKind::based_domain:
      return CQuasiOrder::validate(way_below(std::get<Qoset>(r.payload)).restrict_to(r.basis));
    case RepKind::core_based_sober_space:
      return CQuasiOrder::validate(interior_relation(std::get<Topology>(r.payload)).restrict_to(r.basis));
    case RepKind::based_supercontinuous_lattice: {
      // points are the basis elements; the lattice element l is the open set {b : b <= l}
      const auto& l = std::get<Lattice>(r.payload);
      const auto basis = r.basis.elements();
      std::vector<PointSet> opens;
      for (std::size_t e = 0; e < l.size(); ++e) {
        PointSet o;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (l.leq(basis[i], e)) o = o.with(i);
        opens.push_back(o);
      }
      std::sort(opens.begin(), opens.end());
      opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
      return CQuasiOrder::validate(interior_relation(Topology::validate(basis.size(), std::move(opens))));
    }
  }
  throw Error(ErrorCode::InvalidRepresentation, {}, "unknown kind");
}

Representation from_c_order(const CQuasiOrder& c, RepKind target) {
  Representation out;
  out.kind = target;
  switch (target) {
    case RepKind::c_ordered_set:
      out.payload = TaggedRelation{c.relation(), "c-quasi-order"};
      break;
    case RepKind::t0_core_space:
      out.payload = topology_of(c);
      break;
    case RepKind::fan_ordered_space:
      out.payload = patch(topology_of(c), Coselection::upsilon);
      break;
    case RepKind::based_domain:
    case RepKind::core_based_sober_space: {
      const auto comp = rounded_ideal_completion(c);
      for (auto i : comp.basis) out.basis = out.basis.with(i);
      if (target == RepKind::based_domain)
        out.payload = comp.domain;
      else
        out.payload = upset_topology(comp.domain, UpsetKind::sigma);
      break;
    }
    case RepKind::based_supercontinuous_lattice: {
      const auto sl = open_lattice(topology_of(c));
      for (std::size_t x = 0; x < c.size(); ++x) {
        const auto it = std::find(sl.sets.begin(), sl.sets.end(), c.relation().after(x));
        out.basis = out.basis.with(static_cast<std::size_t>(it - sl.sets.begin()));
      }
      out.payload = sl.lattice;
      break;
    }
  }
  return out;
}

}  // namespace

Representation convert(const Representation& r, RepKind target) {
  const auto verdict = validate_representation(r);
  if (!verdict.valid) throw Error(ErrorCode::InvalidSource, verdict.witness, verdict.reason);
  if (r.kind == target) return r;
  return from_c_order(to_c_order(r), target);
}

bool representations_isomorphic(const Representation& a, const Representation& b) {
  if (a.kind != b.kind || a.payload.index() != b.payload.index()) return false;
  const auto ma = has_basis(a.kind) ? a.basis : PointSet{};
  const auto mb = has_basis(b.kind) ? b.basis : PointSet{};
  return are_isomorphic_marked(a.payload, ma, b.payload, mb).isomorphic;
}

json to_json(const Representation& r) {
  json j;
  j["kind"] = std::string(to_string(r.kind));
  j["object"] = to_json(r.payload);
  j["basis"] = set_to_json(has_basis(r.kind) ? r.basis : PointSet{});
  return j;
}

bool is_representation_record(const json& j) {
  if (!j.is_object()) return false;
  auto it = j.find("kind");
  if (it == j.end() || !it->is_string()) return false;
  const auto k = it->get<std::string>();
  for (auto rk : kAllRepKinds)
    if (to_string(rk) == k) return true;
  return false;
}

Representation representation_from_json(const json& j) {
  const auto& kind = require_field(j, "kind");
  if (!kind.is_string()) throw Error(ErrorCode::SchemaError, {}, "field 'kind' must be a string");
  Representation r;
  r.kind = rep_kind_from_string(kind.get<std::string>());
  r.payload = from_json(require_field(j, "object"));
  if (j.contains("basis")) r.basis = read_set(j, "basis", object_size(r.payload));
  return r;
}

}  // namespace ordertop
