#include "ordertop/topoderive.hpp"

#include <algorithm>
#include <set>

namespace ordertop {

std::string_view to_string(Coselection z) {
  switch (z) {
    case Coselection::upsilon: return "upsilon";
    case Coselection::sigma: return "sigma";
    case Coselection::alpha: return "alpha";
  }
  return "?";
}

Coselection coselection_from_string(std::string_view s) {
  if (s == "upsilon" || s == "υ" || s == "u") return Coselection::upsilon;
  if (s == "sigma" || s == "σ" || s == "s") return Coselection::sigma;
  if (s == "alpha" || s == "α" || s == "a") return Coselection::alpha;
  throw Error(ErrorCode::SchemaError, {}, "unknown coselection '" + std::string(s) + "'");
}

bool is_directed(const Qoset& q, PointSet d) {
  if (d.empty()) return false;
  bool ok = true;
  d.for_each([&](std::size_t a) {
    d.for_each([&](std::size_t b) {
      if (ok && b > a && !(q.up(a) & q.up(b)).meets(d)) ok = false;
    });
  });
  return ok;
}

bool is_filtered(const Qoset& q, PointSet d) { return is_directed(q.dual(), d); }

PointSet upper_bounds(const Qoset& q, PointSet d) {
  PointSet out = q.carrier();
  d.for_each([&](std::size_t x) { out &= q.up(x); });
  return out;
}

PointSet lower_bounds(const Qoset& q, PointSet d) {
  PointSet out = q.carrier();
  d.for_each([&](std::size_t x) { out &= q.down(x); });
  return out;
}

PointSet least_upper_bounds(const Qoset& q, PointSet d) {
  const auto ub = upper_bounds(q, d);
  PointSet out;
  ub.for_each([&](std::size_t y) {
    if (ub.subset_of(q.up(y))) out = out.with(y);
  });
  return out;
}

PointSet greatest_lower_bounds(const Qoset& q, PointSet d) {
  const auto lb = lower_bounds(q, d);
  PointSet out;
  lb.for_each([&](std::size_t y) {
    if (lb.subset_of(q.down(y))) out = out.with(y);
  });
  return out;
}

std::vector<PointSet> directed_subsets(const Qoset& q) {
  std::vector<PointSet> out;
  for_each_subset(q.carrier(), [&](PointSet d) {
    if (is_directed(q, d)) out.push_back(d);
  });
  return out;
}

std::vector<PointSet> filtered_subsets(const Qoset& q) { return directed_subsets(q.dual()); }

Qoset specialization(const Topology& t) {
  const auto n = t.size();
  std::vector<PointSet> rows(n, t.carrier());
  // x <= y iff every open containing x contains y
  for (auto u : t.opens())
    u.for_each([&](std::size_t x) { rows[x] &= u; });
  return Qoset::validate(BinaryRelation(n, std::move(rows)));
}

bool is_t0(const Topology& t) { return specialization(t).antisymmetric(); }

Topology alexandroff(const Qoset& q) {
  std::vector<PointSet> opens;
  for_each_subset(q.carrier(), [&](PointSet s) {
    if (q.is_upper(s)) opens.push_back(s);
  });
  return Topology::validate(q.size(), std::move(opens));
}

namespace {

Topology weak_upper(const Qoset& q) {
  std::vector<PointSet> sub;
  for (std::size_t x = 0; x < q.size(); ++x) sub.push_back(q.down(x).complement(q.size()));
  return Topology::generate(q.size(), sub);
}

Topology scott(const Qoset& q) {
  struct Probe {
    PointSet d, lubs;
  };
  std::vector<Probe> probes;
  for (auto d : directed_subsets(q)) probes.push_back({d, least_upper_bounds(q, d)});
  std::vector<PointSet> opens;
  for_each_subset(q.carrier(), [&](PointSet u) {
    if (!q.is_upper(u)) return;
    for (const auto& p : probes)
      if (p.lubs.meets(u) && !p.d.meets(u)) return;
    opens.push_back(u);
  });
  return Topology::validate(q.size(), std::move(opens));
}

std::vector<PointSet> joined(const Topology& a, const Topology& b) {
  std::vector<PointSet> out = a.opens();
  out.insert(out.end(), b.opens().begin(), b.opens().end());
  return out;
}

}  // namespace

Topology upset_topology(const Qoset& q, UpsetKind which) {
  switch (which) {
    case UpsetKind::alpha: return alexandroff(q);
    case UpsetKind::upsilon: return weak_upper(q);
    case UpsetKind::sigma: return scott(q);
    case UpsetKind::lawson: return Topology::generate(q.size(), joined(scott(q), weak_upper(q.dual())));
    case UpsetKind::alpha_dual: return alexandroff(q.dual());
    case UpsetKind::upsilon_dual: return weak_upper(q.dual());
  }
  return alexandroff(q);
}

Topology coselection(const Qoset& q, Coselection z) {
  switch (z) {
    case Coselection::upsilon: return weak_upper(q);
    case Coselection::sigma: return scott(q);
    case Coselection::alpha: return alexandroff(q);
  }
  return alexandroff(q);
}

PointSet saturation(const Topology& t, PointSet s) {
  PointSet out = t.carrier();
  for (auto u : t.opens())
    if (s.subset_of(u)) out &= u;
  return out;
}

OrderedSpace patch(const Topology& s, Coselection z) {
  auto q = specialization(s);
  auto co = coselection(q.dual(), z);
  return OrderedSpace(q, Topology::generate(s.size(), joined(s, co)));
}

Topology upper_space(const OrderedSpace& t) {
  std::vector<PointSet> opens;
  for (auto u : t.topology.opens())
    if (t.order.is_upper(u)) opens.push_back(u);
  return Topology::validate(t.size(), std::move(opens));
}

Topology lower_space(const OrderedSpace& t) {
  std::vector<PointSet> opens;
  for (auto u : t.topology.opens())
    if (t.order.is_lower(u)) opens.push_back(u);
  return Topology::validate(t.size(), std::move(opens));
}

namespace {

// Every directed open cover of c has a member containing c.
bool compact_by_covers(const Topology& t, PointSet c) {
  std::vector<PointSet> meeting;
  for (auto u : t.opens())
    if (!c.subset_of(u)) meeting.push_back(u);  // covers with a member containing c are harmless
  const auto k = meeting.size();
  // bounds[i][j]: members containing both i and j
  std::vector<std::vector<std::uint32_t>> bounds(k, std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if ((meeting[i] | meeting[j]).subset_of(meeting[l])) bounds[i][j] |= std::uint32_t{1} << l;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    PointSet cover;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) cover |= meeting[i];
    if (!c.subset_of(cover)) continue;
    bool directed = true;
    for (std::size_t i = 0; i < k && directed; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (std::size_t j = i + 1; j < k && directed; ++j)
        if (((mask >> j) & 1u) && !(bounds[i][j] & mask)) directed = false;
    }
    if (directed) return false;
  }
  return true;
}

}  // namespace

bool compactness(const Topology& t, PointSet c, Compactness kind) {
  switch (kind) {
    case Compactness::compact:
      if (t.opens().size() <= 20) return compact_by_covers(t, c);
      return true;  // every cover of a finite space is finite
    case Compactness::supercompact: {
      PointSet rest;
      for (auto u : t.opens())
        if (!c.subset_of(u)) rest |= u;
      return !c.subset_of(rest);
    }
    case Compactness::hypercompact: {
      const auto sat = saturation(t, c);
      const auto q = specialization(t);
      // search for a finite generating set, smallest first
      for (std::size_t k = 0; k <= sat.size(); ++k) {
        bool found = false;
        for_each_subset(sat, [&](PointSet f) {
          if (!found && f.size() == k && q.up_closure(f) == sat) found = true;
        });
        if (found) return true;
      }
      return false;
    }
  }
  return false;
}

std::vector<PointSet> irreducible_closed(const Topology& t) {
  const auto closed = t.closed_sets();
  std::vector<PointSet> out;
  for (auto a : closed) {
    if (a.empty()) continue;
    bool irreducible = true;
    for (std::size_t i = 0; i < closed.size() && irreducible; ++i)
      for (std::size_t j = i; j < closed.size() && irreducible; ++j)
        if (a.subset_of(closed[i] | closed[j]) && !a.subset_of(closed[i]) && !a.subset_of(closed[j]))
          irreducible = false;
    if (irreducible) out.push_back(a);
  }
  return out;
}

namespace {

bool is_point_closure(const Topology& t, PointSet a) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t.closure(PointSet::singleton(x)) == a) return true;
  return false;
}

}  // namespace

bool is_sober(const Topology& t) {
  if (!is_t0(t)) return false;
  for (auto a : irreducible_closed(t))
    if (!is_point_closure(t, a)) return false;
  return true;
}

bool is_dspace(const Topology& t) {
  if (!is_t0(t)) return false;
  for (auto d : directed_subsets(specialization(t)))
    if (!is_point_closure(t, t.closure(d))) return false;
  return true;
}

Topology cocompact(const Topology& t) {
  std::vector<PointSet> sub;
  for_each_subset(t.carrier(), [&](PointSet k) {
    if (saturation(t, k) == k && compactness(t, k, Compactness::compact)) sub.push_back(k.complement(t.size()));
  });
  return Topology::generate(t.size(), sub);
}

EntourageBase validate_entourage_base(std::size_t n, std::vector<BinaryRelation> base) {
  if (base.empty()) throw Error(ErrorCode::NotReflexiveEntourage, {}, "entourage base is empty");
  for (std::size_t i = 0; i < base.size(); ++i)
    if (base[i].size() != n || !base[i].reflexive()) throw Error(ErrorCode::NotReflexiveEntourage, {i});
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return EntourageBase{n, std::move(base)};
}

EntourageBase quasi_uniformity(const Topology& s) {
  const auto n = s.size();
  const auto full = s.carrier();
  // interior relation: x R y iff y lies in the interior of the core of x
  std::vector<PointSet> after(n);
  for (std::size_t x = 0; x < n; ++x) after[x] = s.interior(saturation(s, PointSet::singleton(x)));
  std::set<BinaryRelation> gens;
  for (std::size_t xp = 0; xp < n; ++xp)
    for (std::size_t yp = 0; yp < n; ++yp) {
      if (!after[yp].contains(xp)) continue;
      // x'R -> y'R = (X \ x'R) x X  union  X x y'R
      std::vector<PointSet> rows(n);
      for (std::size_t a = 0; a < n; ++a) rows[a] = after[xp].contains(a) ? after[yp] : full;
      gens.insert(BinaryRelation(n, std::move(rows)));
    }
  std::set<BinaryRelation> closed(gens.begin(), gens.end());
  std::vector<BinaryRelation> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<BinaryRelation> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        auto m = a.intersect(g);
        if (closed.insert(m).second) next.push_back(m);
      }
    frontier = std::move(next);
  }
  return validate_entourage_base(n, {closed.begin(), closed.end()});
}

namespace {

Topology tau_of(std::size_t n, const std::vector<BinaryRelation>& rels) {
  // O is open iff every x in O has some xU inside O
  std::vector<std::vector<PointSet>> nbhds(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& u : rels) nbhds[x].push_back(u.after(x));
    std::sort(nbhds[x].begin(), nbhds[x].end());
    nbhds[x].erase(std::unique(nbhds[x].begin(), nbhds[x].end()), nbhds[x].end());
  }
  std::vector<PointSet> opens;
  for_each_subset(PointSet::full(n), [&](PointSet o) {
    bool open = true;
    o.for_each([&](std::size_t x) {
      if (!open) return;
      open = std::any_of(nbhds[x].begin(), nbhds[x].end(), [&](PointSet v) { return v.subset_of(o); });
    });
    if (open) opens.push_back(o);
  });
  return Topology::validate(n, std::move(opens));
}

}  // namespace

Topology tau(const EntourageBase& e) { return tau_of(e.n, e.base); }

Topology tau_inverse(const EntourageBase& e) {
  std::vector<BinaryRelation> rels;
  for (const auto& u : e.base) rels.push_back(u.transpose());
  return tau_of(e.n, rels);
}

Topology tau_star(const EntourageBase& e) {
  std::vector<BinaryRelation> rels;
  for (const auto& u : e.base) rels.push_back(u.intersect(u.transpose()));
  return tau_of(e.n, rels);
}

}  // namespace ordertop
