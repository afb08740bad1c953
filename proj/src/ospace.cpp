#include "ordertop/ospace.hpp"

#include <algorithm>
#include <unordered_set>

#include "ordertop/cord.hpp"

namespace ordertop {

namespace {

std::vector<PointSet> closed_complements(const Topology& t) {
  std::vector<PointSet> out;
  out.reserve(t.opens().size());
  for (auto o : t.opens()) out.push_back(o.complement(t.size()));
  return out;
}

bool same_opens(const Topology& a, const Topology& b) { return a.opens() == b.opens(); }

Topology join_of(std::size_t n, const std::vector<PointSet>& a, const std::vector<PointSet>& b) {
  std::vector<PointSet> sub(a);
  sub.insert(sub.end(), b.begin(), b.end());
  return Topology::generate(n, sub);
}

// x has a neighbourhood base of sets with property `pred`. A neighbourhood of x
// inside the minimal open set M(x) must contain M(x), so only subsets of M(x) are tried.
template <class Pred>
bool has_local_base(const Topology& t, std::size_t x, Pred&& pred) {
  const auto m = t.minimal_neighborhood(x);
  bool found = false;
  for_each_subset(m.without(x), [&](PointSet s) {
    if (found) return;
    const auto w = s.with(x);
    if (t.interior(w).contains(x) && pred(w)) found = true;
  });
  return found;
}

template <class Pred>
bool all_points_have_local_base(const Topology& t, Pred&& pred) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!has_local_base(t, x, pred)) return false;
  return true;
}

// Some candidate c is a neighbourhood of x inside M(x).
bool candidates_form_base(const Topology& t, const std::vector<PointSet>& candidates) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto m = t.minimal_neighborhood(x);
    bool ok = false;
    for (auto c : candidates)
      if (c.subset_of(m) && t.interior(c).contains(x)) { ok = true; break; }
    if (!ok) return false;
  }
  return true;
}

// Every open set is the union of the members of `family` it contains.
bool is_base_of(const Topology& t, const std::vector<PointSet>& family) {
  for (auto o : t.opens()) {
    PointSet u;
    for (auto b : family)
      if (b.subset_of(o)) u |= b;
    if (u != o) return false;
  }
  return true;
}

std::vector<PointSet> close_family(std::vector<PointSet> seed, bool unions, bool intersections) {
  std::unordered_set<PointSet> seen(seed.begin(), seed.end());
  std::vector<PointSet> out(seen.begin(), seen.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto a = out[i], b = out[j];
      if (unions && seen.insert(a | b).second) out.push_back(a | b);
      if (intersections && seen.insert(a & b).second) out.push_back(a & b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_convex_set(const Qoset& q, PointSet s) { return (q.up_closure(s) & q.down_closure(s)) == s; }

}  // namespace

// ---------------------------------------------------------------------------
// separation

bool is_lower_semi_qospace(const OrderedSpace& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!t.topology.is_closed(t.order.down(x))) return false;
  return true;
}

bool is_upper_semi_qospace(const OrderedSpace& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!t.topology.is_closed(t.order.up(x))) return false;
  return true;
}

bool is_semi_qospace(const OrderedSpace& t) { return is_lower_semi_qospace(t) && is_upper_semi_qospace(t); }

bool is_qospace(const OrderedSpace& t) {
  const auto& opens = t.topology.opens();
  std::vector<PointSet> ups, downs;
  for (auto o : opens) {
    ups.push_back(t.order.up_closure(o));
    downs.push_back(t.order.down_closure(o));
  }
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t.order.leq(x, y)) continue;
      bool sep = false;
      for (std::size_t i = 0; i < opens.size() && !sep; ++i) {
        if (!opens[i].contains(x)) continue;
        for (std::size_t j = 0; j < opens.size(); ++j)
          if (opens[j].contains(y) && !ups[i].meets(downs[j])) { sep = true; break; }
      }
      if (!sep) return false;
    }
  return true;
}

bool is_t2_ordered(const OrderedSpace& t) {
  const auto up = upper_space(t), lo = lower_space(t);
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t.order.leq(x, y)) continue;
      bool sep = false;
      for (auto u : up.opens()) {
        if (!u.contains(x)) continue;
        for (auto v : lo.opens())
          if (v.contains(y) && !u.meets(v)) { sep = true; break; }
        if (sep) break;
      }
      if (!sep) return false;
    }
  return true;
}

namespace {

// For each o in `outer` and x in o: some u in `outer` and closed b with x in u, u <= b <= o.
bool regular_between(const std::vector<PointSet>& outer, const std::vector<PointSet>& closed) {
  for (auto o : outer)
    for (auto x : o.elements()) {
      bool ok = false;
      for (auto u : outer) {
        if (!u.contains(x) || !u.subset_of(o)) continue;
        for (auto b : closed)
          if (u.subset_of(b) && b.subset_of(o)) { ok = true; break; }
        if (ok) break;
      }
      if (!ok) return false;
    }
  return true;
}

}  // namespace

bool is_upper_regular(const OrderedSpace& t) {
  return regular_between(upper_space(t).opens(), closed_complements(lower_space(t)));
}

bool is_lower_regular(const OrderedSpace& t) {
  return regular_between(lower_space(t).opens(), closed_complements(upper_space(t)));
}

bool is_hausdorff(const Topology& t) {
  // disjoint neighbourhoods exist iff the minimal ones are disjoint
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = x + 1; y < t.size(); ++y)
      if (t.minimal_neighborhood(x).meets(t.minimal_neighborhood(y))) return false;
  return true;
}

SeparationProfile separation_profile(const OrderedSpace& t) {
  SeparationProfile p;
  p.lower_semi_qospace = is_lower_semi_qospace(t);
  p.upper_semi_qospace = is_upper_semi_qospace(t);
  p.semi_qospace = p.lower_semi_qospace && p.upper_semi_qospace;
  p.qospace = is_qospace(t);
  const bool ordered = t.order.antisymmetric();
  p.pospace = p.qospace && ordered;
  p.t1_ordered = p.semi_qospace && ordered;
  p.t2_ordered = is_t2_ordered(t);
  p.upper_regular = is_upper_regular(t);
  p.lower_regular = is_lower_regular(t);
  p.upper_t3_ordered = p.upper_regular && p.t1_ordered;
  return p;
}

// ---------------------------------------------------------------------------
// convexity

bool is_locally_convex(const OrderedSpace& t) {
  std::vector<PointSet> convex;
  for (auto o : t.topology.opens())
    if (is_convex_set(t.order, o)) convex.push_back(o);
  return is_base_of(t.topology, convex);
}

bool is_strongly_convex(const OrderedSpace& t) {
  return same_opens(join_of(t.size(), upper_space(t).opens(), lower_space(t).opens()), t.topology);
}

bool is_zeta_convex(const OrderedSpace& t, Coselection z) {
  const auto s = upper_space(t);
  const auto co = coselection(specialization(s).dual(), z);
  return same_opens(join_of(t.size(), s.opens(), co.opens()), t.topology);
}

bool is_hyperconvex_by_base(const OrderedSpace& t) {
  const auto s = upper_space(t);
  const auto spec = specialization(s);
  std::unordered_set<PointSet> sets;
  for_each_subset(t.topology.carrier(), [&](PointSet f) {
    const auto excl = spec.up_closure(f);
    for (auto u : s.opens()) sets.insert(u - excl);
  });
  std::vector<PointSet> base(sets.begin(), sets.end());
  for (auto b : base)
    if (!t.topology.is_open(b)) return false;
  return is_base_of(t.topology, base);
}

ConvexityProfile convexity_profile(const OrderedSpace& t) {
  ConvexityProfile p;
  p.locally_convex = is_locally_convex(t);
  p.strongly_convex = is_strongly_convex(t);
  p.hyperconvex = is_zeta_convex(t, Coselection::upsilon);
  p.sigma_convex = is_zeta_convex(t, Coselection::sigma);
  p.alpha_convex = is_zeta_convex(t, Coselection::alpha);
  return p;
}

// ---------------------------------------------------------------------------
// stability

bool is_up_stable(const OrderedSpace& t) {
  for (auto o : t.topology.opens())
    if (!t.topology.is_open(t.order.up_closure(o))) return false;
  return true;
}

bool is_core_stable(const OrderedSpace& t) {
  std::vector<PointSet> core_int(t.size());
  for (std::size_t u = 0; u < t.size(); ++u) core_int[u] = t.topology.interior(t.order.up(u));
  for (auto o : t.topology.opens()) {
    PointSet rhs;
    o.for_each([&](std::size_t u) { rhs |= core_int[u]; });
    if (rhs != t.order.up_closure(o)) return false;
  }
  return true;
}

bool is_d_stable(const OrderedSpace& t) {
  const auto lo = lower_space(t);
  std::vector<PointSet> core_int(t.size());
  for (std::size_t u = 0; u < t.size(); ++u) core_int[u] = t.topology.interior(t.order.up(u));
  for (auto d : filtered_subsets(t.order)) {
    PointSet rhs;
    lo.closure(d).for_each([&](std::size_t u) { rhs |= core_int[u]; });
    if (!t.topology.interior(d).subset_of(rhs)) return false;
  }
  return true;
}

std::vector<PointSet> upset_family(const Qoset& q, UpsetFamily f) {
  std::vector<PointSet> filters;
  for (std::size_t x = 0; x < q.size(); ++x) filters.push_back(q.up(x));
  switch (f) {
    case UpsetFamily::vee:
      filters.push_back(PointSet{});
      return close_family(filters, true, false);
    case UpsetFamily::wedge:
      filters.push_back(q.carrier());
      return close_family(filters, false, true);
    case UpsetFamily::diamond:
      filters.push_back(PointSet{});
      filters.push_back(q.carrier());
      return close_family(filters, true, true);
    case UpsetFamily::alpha:
      break;
  }
  return alexandroff(q).opens();
}

bool is_family_stable(const OrderedSpace& t, UpsetFamily f) {
  const auto s = upper_space(t);
  std::vector<PointSet> core_int(t.size());
  for (std::size_t y = 0; y < t.size(); ++y) core_int[y] = s.interior(t.order.up(y));
  for (auto y : upset_family(t.order, f)) {
    PointSet rhs;
    y.for_each([&](std::size_t p) { rhs |= core_int[p]; });
    if (s.interior(y) != rhs) return false;
  }
  return true;
}

StabilityProfile stability_profile(const OrderedSpace& t) {
  StabilityProfile p;
  p.up_stable = is_up_stable(t);
  p.d_stable = is_d_stable(t);
  p.core_stable = is_core_stable(t);
  p.vee_stable = is_family_stable(t, UpsetFamily::vee);
  p.wedge_stable = is_family_stable(t, UpsetFamily::wedge);
  p.diamond_stable = is_family_stable(t, UpsetFamily::diamond);
  return p;
}

// ---------------------------------------------------------------------------
// webs, sectors, fans

bool is_web(const Qoset& q, PointSet w, std::size_t x) {
  if (!w.contains(x)) return false;
  const auto below_x = q.down(x) & w;
  bool ok = true;
  w.for_each([&](std::size_t y) {
    if (!(below_x & q.down(y)).meets(w)) ok = false;
  });
  return ok;
}

bool is_web_ordered(const OrderedSpace& t) {
  if (!is_up_stable(t)) return false;
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!has_local_base(t.topology, x, [&](PointSet w) { return is_web(t.order, w, x); })) return false;
  return true;
}

bool is_locally_filtered(const OrderedSpace& t) {
  return all_points_have_local_base(t.topology, [&](PointSet w) { return is_filtered(t.order, w); });
}

namespace {

bool sector_base(const OrderedSpace& t, const std::vector<PointSet>& lowers) {
  std::unordered_set<PointSet> seen;
  std::vector<PointSet> sectors;
  for (std::size_t u = 0; u < t.size(); ++u)
    for (auto v : lowers) {
      const auto s = t.order.up(u) & v;
      if (!s.empty() && seen.insert(s).second) sectors.push_back(s);
    }
  return candidates_form_base(t.topology, sectors);
}

}  // namespace

bool is_sector_space(const OrderedSpace& t) {
  if (!is_up_stable(t) || !is_semi_qospace(t)) return false;
  return sector_base(t, lower_space(t).opens());
}

bool is_zeta_sector_space(const OrderedSpace& t, Coselection z) {
  if (!is_up_stable(t) || !is_semi_qospace(t)) return false;
  const auto co = coselection(specialization(upper_space(t)).dual(), z);
  std::vector<PointSet> lowers;
  const auto lo = lower_space(t);
  for (auto v : lo.opens())
    if (co.is_open(v)) lowers.push_back(v);
  return sector_base(t, lowers);
}

bool is_fan_space(const OrderedSpace& t) {
  if (!is_up_stable(t) || !is_semi_qospace(t)) return false;
  std::unordered_set<PointSet> seen;
  std::vector<PointSet> fans;
  for_each_subset(t.topology.carrier(), [&](PointSet f) {
    const auto excl = t.order.up_closure(f);
    for (std::size_t u = 0; u < t.size(); ++u) {
      const auto s = t.order.up(u) - excl;
      if (!s.empty() && seen.insert(s).second) fans.push_back(s);
    }
  });
  return candidates_form_base(t.topology, fans);
}

bool is_mc_ordered(const OrderedSpace& t) {
  for (auto d : directed_subsets(t.order)) {
    const auto sups = least_upper_bounds(t.order, d);
    if (sups.empty()) return false;
    for (auto s : sups.elements())
      for (auto o : t.topology.opens()) {
        if (!o.contains(s)) continue;
        bool tail = false;
        for (auto d0 : d.elements())
          if ((d & t.order.up(d0)).subset_of(o)) { tail = true; break; }
        if (!tail) return false;
      }
  }
  return true;
}

bool is_upper_m_determined(const OrderedSpace& t) {
  const auto directed = directed_subsets(t.order);
  const auto uppers = alexandroff(t.order);
  for (auto u : uppers.opens()) {
    if (t.topology.is_open(u)) continue;
    bool meets_all = true;
    for (auto d : directed)
      if (t.topology.closure(d).meets(u) && !d.meets(u)) { meets_all = false; break; }
    if (meets_all) return false;
  }
  return true;
}

WebProfile web_profile(const OrderedSpace& t) {
  WebProfile p;
  p.web_ordered = is_web_ordered(t);
  p.locally_filtered = is_locally_filtered(t);
  p.sector_space = is_sector_space(t);
  p.upsilon_sector_space = is_zeta_sector_space(t, Coselection::upsilon);
  p.fan_space = is_fan_space(t);
  p.mc_ordered = is_mc_ordered(t);
  p.upper_m_determined = is_upper_m_determined(t);
  return p;
}

// ---------------------------------------------------------------------------
// semilattice-ordered spaces

std::vector<std::size_t> meet_table(const Qoset& q) {
  const auto n = q.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      const auto glb = greatest_lower_bounds(q, PointSet::of({x, y}));
      if (glb.size() != 1) throw Error(ErrorCode::NotASemilattice, {x, y});
      table[x * n + y] = table[y * n + x] = glb.lowest();
    }
  return table;
}

bool is_compatible(const OrderedSpace& t) {
  const auto weak = upset_topology(t.order, UpsetKind::upsilon);
  for (auto o : weak.opens())
    if (!t.topology.is_open(o)) return false;
  for (auto o : t.topology.opens())
    if (!t.order.is_upper(o)) return false;
  return true;
}

SemilatticeProfile semilattice_profile(const OrderedSpace& t) {
  const auto meet = meet_table(t.order);
  const auto n = t.size();
  const auto& top = t.topology;
  SemilatticeProfile p;
  p.compatible = is_compatible(t);

  p.semitopological = true;
  for (std::size_t a = 0; a < n && p.semitopological; ++a)
    for (auto o : top.opens()) {
      PointSet pre;
      for (std::size_t y = 0; y < n; ++y)
        if (o.contains(meet[a * n + y])) pre = pre.with(y);
      if (!top.is_open(pre)) { p.semitopological = false; break; }
    }

  // product opens: W is open iff M(a) x M(b) lies in W for each (a, b) in W
  p.topological = true;
  for (auto o : top.opens()) {
    for (std::size_t a = 0; a < n && p.topological; ++a)
      for (std::size_t b = 0; b < n && p.topological; ++b) {
        if (!o.contains(meet[a * n + b])) continue;
        top.minimal_neighborhood(a).for_each([&](std::size_t a2) {
          top.minimal_neighborhood(b).for_each([&](std::size_t b2) {
            if (!o.contains(meet[a2 * n + b2])) p.topological = false;
          });
        });
      }
    if (!p.topological) break;
  }

  auto subsemilattice = [&](PointSet w) {
    bool ok = true;
    w.for_each([&](std::size_t a) {
      w.for_each([&](std::size_t b) {
        if (!w.contains(meet[a * n + b])) ok = false;
      });
    });
    return ok;
  };
  p.small_semilattices = all_points_have_local_base(top, subsemilattice);
  p.small_convex_semilattices = all_points_have_local_base(
      top, [&](PointSet w) { return subsemilattice(w) && is_convex_set(t.order, w); });
  return p;
}

// ---------------------------------------------------------------------------
// domains

bool is_dcpo(const Qoset& q) {
  if (!q.antisymmetric()) return false;
  for (auto d : directed_subsets(q))
    if (least_upper_bounds(q, d).empty()) return false;
  return true;
}

bool is_continuous_domain(const Qoset& q) {
  if (!is_dcpo(q)) return false;
  const auto wb = way_below(q);
  for (std::size_t y = 0; y < q.size(); ++y) {
    const auto approx = wb.before(y);
    if (!is_directed(q, approx)) return false;
    if (!least_upper_bounds(q, approx).contains(y)) return false;
  }
  return true;
}

bool is_meet_continuous_domain(const Qoset& q) {
  if (!is_dcpo(q)) return false;
  const auto scott = upset_topology(q, UpsetKind::sigma);
  for (auto d : directed_subsets(q)) {
    const auto s = least_upper_bounds(q, d).lowest();
    const auto below_d = q.down_closure(d);
    for (auto x : q.down(s).elements())
      if (!scott.closure(q.down(x) & below_d).contains(x)) return false;
  }
  return true;
}

bool is_lawson_space(const OrderedSpace& t) {
  return t.order.antisymmetric() && same_opens(t.topology, upset_topology(t.order, UpsetKind::lawson));
}

// ---------------------------------------------------------------------------
// theorem bundles

std::string_view to_string(Bundle b) {
  switch (b) {
    case Bundle::thm_4_6: return "thm-4.6";
    case Bundle::thm_5_3: return "thm-5.3";
    case Bundle::thm_6_2: return "thm-6.2";
    case Bundle::thm_7_2: return "thm-7.2";
    case Bundle::prop_7_4: return "prop-7.4";
  }
  return "?";
}

Bundle bundle_from_string(std::string_view s) {
  for (auto b : {Bundle::thm_4_6, Bundle::thm_5_3, Bundle::thm_6_2, Bundle::thm_7_2, Bundle::prop_7_4})
    if (to_string(b) == s) return b;
  throw Error(ErrorCode::UnknownSuite, {}, std::string(s));
}

namespace {

void finish(BundleResult& r) {
  r.agree = true;
  if (!r.hypothesis) return;
  for (const auto& g : r.groups)
    for (auto i : g)
      if (r.verdicts[i] != r.verdicts[g.front()]) r.agree = false;
}

void add(BundleResult& r, std::string label, bool v) {
  r.labels.push_back(std::move(label));
  r.verdicts.push_back(v);
}

}  // namespace

BundleResult theorem_bundle(const OrderedSpace& t, Bundle which) {
  BundleResult r;
  r.which = which;
  const auto n = t.size();
  const auto up = upper_space(t);
  switch (which) {
    case Bundle::thm_4_6: {
      const auto lo = lower_space(t);
      const bool strongly = is_strongly_convex(t);
      add(r, "sector-space", is_sector_space(t));
      add(r, "patch-of-core-space",
          specialization(up) == t.order && specialization(lo) == t.order.dual() &&
              same_opens(join_of(n, up.opens(), lo.opens()), t.topology) && has_core_neighborhood_bases(up));
      add(r, "strongly-convex-core-stable-semi-qospace", strongly && is_core_stable(t) && is_semi_qospace(t));
      add(r, "strongly-convex-c1-c4-qospace",
          strongly && is_upper_regular(t) && is_locally_filtered(t) && is_up_stable(t) && is_d_stable(t) &&
              is_qospace(t));
      r.groups = {{0, 1, 2, 3}};
      break;
    }
    case Bundle::thm_5_3: {
      const bool hyper = is_zeta_convex(t, Coselection::upsilon);
      add(r, "fan-space", is_fan_space(t));
      add(r, "weak-patch-of-core-space", patch(up, Coselection::upsilon) == t && has_core_neighborhood_bases(up));
      add(r, "hyperconvex-core-stable-semi-qospace", hyper && is_core_stable(t) && is_semi_qospace(t));
      add(r, "hyperconvex-c1-c4-qospace",
          hyper && is_upper_regular(t) && is_locally_filtered(t) && is_up_stable(t) && is_d_stable(t) &&
              is_qospace(t));
      r.groups = {{0, 1, 2, 3}};
      break;
    }
    case Bundle::thm_6_2: {
      r.hypothesis = t.order.antisymmetric();
      const bool hyper = is_zeta_convex(t, Coselection::upsilon);
      const bool mc = is_mc_ordered(t);
      const bool lawson = is_lawson_space(t);
      const bool t2 = is_hausdorff(t.topology);
      add(r, "lawson-continuous-domain", lawson && is_continuous_domain(t.order));
      add(r, "fan-space-sober-upper", is_fan_space(t) && is_sober(up));
      add(r, "lawson-meet-continuous-wedge-stable-t2",
          lawson && is_meet_continuous_domain(t.order) && is_family_stable(t, UpsetFamily::wedge) && t2);
      add(r, "hyperconvex-mc-core-stable-semi-pospace",
          hyper && mc && is_core_stable(t) && is_semi_qospace(t) && t.order.antisymmetric());
      add(r, "hyperconvex-mc-up-stable-diamond-stable-t2",
          hyper && mc && is_up_stable(t) && is_family_stable(t, UpsetFamily::diamond) && t2);
      r.groups = {{0, 1, 2, 3, 4}};
      break;
    }
    case Bundle::thm_7_2: {
      meet_table(t.order);
      r.hypothesis = is_zeta_convex(t, Coselection::upsilon) && is_semi_qospace(t);
      const auto sl = semilattice_profile(t);
      const bool weak_patch = patch(up, Coselection::upsilon) == t;
      const bool s_top = sl.topological && sl.small_semilattices;
      add(r, "w11", weak_patch && is_web_space(up));
      add(r, "w12", is_web_ordered(t));
      add(r, "w13", sl.semitopological);
      add(r, "w21", weak_patch && is_wide_web_space(up));
      add(r, "w22", is_locally_filtered(t) && is_up_stable(t));
      add(r, "w23", s_top);
      add(r, "w31", weak_patch && has_core_neighborhood_bases(up));
      add(r, "w32", is_core_stable(t) && is_qospace(t) && t.order.antisymmetric());
      add(r, "w33", s_top && is_locally_compact(up));
      r.groups = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
      break;
    }
    case Bundle::prop_7_4: {
      meet_table(t.order);
      const bool compact = compactness(t.topology, t.topology.carrier(), Compactness::compact);
      add(r, "compact-lawson-continuous-domain", compact && is_lawson_space(t) && is_continuous_domain(t.order));
      add(r, "locally-filtered-up-stable-compact-pospace",
          is_locally_filtered(t) && is_up_stable(t) && compact && is_qospace(t) && t.order.antisymmetric());
      r.groups = {{0, 1}};
      break;
    }
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// flag lists

FlagList SeparationProfile::flags() const {
  return {{"lower-semi-qospace", lower_semi_qospace}, {"upper-semi-qospace", upper_semi_qospace},
          {"semi-qospace", semi_qospace},             {"qospace", qospace},
          {"pospace", pospace},                       {"T1-ordered", t1_ordered},
          {"T2-ordered", t2_ordered},                 {"upper-regular", upper_regular},
          {"lower-regular", lower_regular},           {"upper-T3-ordered", upper_t3_ordered}};
}

FlagList ConvexityProfile::flags() const {
  return {{"locally-convex", locally_convex},
          {"strongly-convex", strongly_convex},
          {"hyperconvex", hyperconvex},
          {"sigma-convex", sigma_convex},
          {"alpha-convex", alpha_convex}};
}

FlagList StabilityProfile::flags() const {
  return {{"up-stable", up_stable},         {"d-stable", d_stable},         {"core-stable", core_stable},
          {"veeF-stable", vee_stable},      {"wedgeF-stable", wedge_stable}, {"diamond-stable", diamond_stable}};
}

FlagList WebProfile::flags() const {
  return {{"web-ordered", web_ordered},
          {"locally-filtered", locally_filtered},
          {"sector-space", sector_space},
          {"upsilon-sector-space", upsilon_sector_space},
          {"fan-space", fan_space},
          {"mc-ordered", mc_ordered},
          {"upper-m-determined", upper_m_determined}};
}

FlagList SemilatticeProfile::flags() const {
  return {{"compatible", compatible},
          {"semitopological", semitopological},
          {"topological", topological},
          {"small-semilattices", small_semilattices},
          {"small-convex-semilattices", small_convex_semilattices}};
}

}  // namespace ordertop
