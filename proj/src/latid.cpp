#include "ordertop/latid.hpp"

#include <algorithm>

namespace ordertop {

std::string_view to_string(LatticeLaw law) {
  switch (law) {
    case LatticeLaw::frame: return "frame";
    case LatticeLaw::coframe: return "coframe";
    case LatticeLaw::wide_frame: return "wide-frame";
    case LatticeLaw::wide_coframe: return "wide-coframe";
    case LatticeLaw::completely_distributive: return "completely-distributive";
    case LatticeLaw::meet_continuous: return "meet-continuous";
    case LatticeLaw::continuous_lattice: return "continuous-lattice";
    case LatticeLaw::distributive: return "distributive";
  }
  return "?";
}

LatticeLaw lattice_law_from_string(std::string_view s) {
  for (auto law : kAllLatticeLaws)
    if (to_string(law) == s) return law;
  throw Error(ErrorCode::UnknownPredicateTag, {}, "unknown lattice law '" + std::string(s) + "'");
}

namespace {

bool directed_in(const Lattice& l, PointSet d) {
  if (d.empty()) return false;
  bool ok = true;
  d.for_each([&](std::size_t a) {
    d.for_each([&](std::size_t b) {
      if (ok && b > a && !(l.up(a) & l.up(b)).meets(d)) ok = false;
    });
  });
  return ok;
}

std::vector<PointSet> lower_sets(const Lattice& l) {
  std::vector<PointSet> out;
  for_each_subset(l.elements(), [&](PointSet s) {
    if (l.down_closure(s) == s) out.push_back(s);
  });
  return out;
}

// Law (d) x ∧ ⋁Y = ⋁{x ∧ y : y ∈ Y}, over every Y accepted by `admit`.
template <class Admit>
LawResult scan_d(const Lattice& l, Admit admit) {
  LawResult r;
  r.method = LawMethod::direct;
  for (std::size_t x = 0; x < l.size(); ++x) {
    bool failed = false;
    for_each_subset(l.elements(), [&](PointSet y) {
      if (failed || !admit(y)) return;
      std::size_t rhs = l.bottom();
      y.for_each([&](std::size_t e) { rhs = l.join(rhs, l.meet(x, e)); });
      if (l.meet(x, l.join_of(y)) != rhs) {
        failed = true;
        r.holds = false;
        r.witness = LawWitness{x, y, {}};
      }
    });
    if (failed) return r;
  }
  return r;
}

// Law (D) ⋀{⋁Y : Y ∈ 𝒴} = ⋁⋂𝒴 over every collection drawn from `family`.
LawResult scan_big_d(const Lattice& l, const std::vector<PointSet>& family) {
  LawResult r;
  r.method = LawMethod::direct;
  const auto k = family.size();
  std::vector<std::size_t> joins(k);
  for (std::size_t i = 0; i < k; ++i) joins[i] = l.join_of(family[i]);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::size_t lhs = l.top();
    PointSet common = l.elements();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) {
        lhs = l.meet(lhs, joins[i]);
        common &= family[i];
      }
    if (lhs != l.join_of(common)) {
      r.holds = false;
      LawWitness w;
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1u) w.collection.push_back(family[i]);
      r.witness = w;
      return r;
    }
  }
  return r;
}

LawResult binary_distributive(const Lattice& l) {
  LawResult r;
  r.method = LawMethod::reduction;
  const auto m = l.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = y + 1; z < m; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          r.holds = false;
          r.witness = LawWitness{x, PointSet::singleton(y).with(z), {}};
          return r;
        }
  return r;
}

// y = ⋁{x : x rel y} for every y
LawResult approximated(const Lattice& l, BelowKind kind) {
  LawResult r;
  r.method = LawMethod::reduction;
  const auto rows = below_rows(l, kind);
  for (std::size_t y = 0; y < l.size(); ++y) {
    PointSet below;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (rows[x].contains(y)) below = below.with(x);
    if (l.join_of(below) != y) {
      r.holds = false;
      r.witness = LawWitness{y, below, {}};
      return r;
    }
  }
  return r;
}

void require_cap(const Lattice& l, std::size_t cap, LatticeLaw law) {
  if (l.size() > cap)
    throw Error(ErrorCode::SizeCapExceeded, {l.size(), cap},
                "direct scan for " + std::string(to_string(law)) + " is capped");
}

LawResult direct(const Lattice& l, LatticeLaw law) {
  switch (law) {
    case LatticeLaw::frame:
      return scan_d(l, [](PointSet) { return true; });
    case LatticeLaw::coframe:
      return scan_d(l.dual(), [](PointSet) { return true; });
    case LatticeLaw::meet_continuous:
      return scan_d(l, [&](PointSet y) { return directed_in(l, y); });
    case LatticeLaw::completely_distributive:
      return scan_big_d(l, lower_sets(l));
    case LatticeLaw::wide_coframe:
    case LatticeLaw::wide_frame: {
      const Lattice target = law == LatticeLaw::wide_coframe ? l : l.dual();
      std::vector<PointSet> generated;
      for_each_subset(target.elements(), [&](PointSet f) { generated.push_back(target.down_closure(f)); });
      std::sort(generated.begin(), generated.end());
      generated.erase(std::unique(generated.begin(), generated.end()), generated.end());
      return scan_big_d(target, generated);
    }
    case LatticeLaw::continuous_lattice: {
      std::vector<PointSet> ideals;
      for (auto s : lower_sets(l))
        if (is_ideal(l, s)) ideals.push_back(s);
      return scan_big_d(l, ideals);
    }
    case LatticeLaw::distributive:
      return binary_distributive(l);
  }
  return {};
}

std::size_t cap_of(LatticeLaw law) {
  switch (law) {
    case LatticeLaw::frame:
    case LatticeLaw::coframe:
    case LatticeLaw::meet_continuous: return kDirectJoinLawCap;
    case LatticeLaw::completely_distributive:
    case LatticeLaw::wide_frame:
    case LatticeLaw::wide_coframe: return kDirectCollectionCap;
    case LatticeLaw::continuous_lattice: return kDirectIdealCap;
    case LatticeLaw::distributive: return kMaxLatticeElements;
  }
  return 0;
}

LawResult reduction(const Lattice& l, LatticeLaw law) {
  switch (law) {
    case LatticeLaw::frame:
      // finite joins reduce to binary ones; the empty join is trivial
      return binary_distributive(l);
    case LatticeLaw::coframe:
      return binary_distributive(l.dual());
    case LatticeLaw::meet_continuous: {
      // a finite directed set contains its join, so (d) holds for it
      LawResult r;
      r.method = LawMethod::reduction;
      return r;
    }
    case LatticeLaw::completely_distributive:
    case LatticeLaw::wide_coframe:
      return approximated(l, BelowKind::superway);
    case LatticeLaw::wide_frame:
      return approximated(l.dual(), BelowKind::superway);
    case LatticeLaw::continuous_lattice:
      return approximated(l, BelowKind::way_below);
    case LatticeLaw::distributive:
      return binary_distributive(l);
  }
  return {};
}

}  // namespace

LawResult check_law(const Lattice& l, LatticeLaw law, LawMethod method) {
  switch (method) {
    case LawMethod::direct:
      require_cap(l, cap_of(law), law);
      return direct(l, law);
    case LawMethod::reduction:
      return reduction(l, law);
    case LawMethod::automatic:
      if (law == LatticeLaw::completely_distributive) return reduction(l, law);
      return l.size() <= cap_of(law) ? direct(l, law) : reduction(l, law);
  }
  return {};
}

SetLattice inclusion_lattice(const std::vector<PointSet>& sorted_family) {
  const auto m = sorted_family.size();
  if (m > kMaxLatticeElements)
    throw Error(ErrorCode::SizeCapExceeded, {m, kMaxLatticeElements}, "lattice too large");
  std::vector<PointSet> up(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (sorted_family[i].subset_of(sorted_family[j])) up[i] = up[i].with(j);
  return SetLattice{Lattice::validate(m, up), sorted_family};
}

SetLattice open_lattice(const Topology& t) { return inclusion_lattice(t.opens()); }
SetLattice closed_lattice(const Topology& t) { return inclusion_lattice(t.closed_sets()); }

std::vector<PointSet> below_rows(const Lattice& l, BelowKind kind) {
  const auto m = l.size();
  std::vector<PointSet> rows(m);
  if (kind == BelowKind::way_below) {
    if (m <= kDirectIdealCap) {
      std::vector<std::pair<PointSet, std::size_t>> directed;
      for_each_subset(l.elements(), [&](PointSet d) {
        if (directed_in(l, d)) directed.emplace_back(d, l.join_of(d));
      });
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          bool below = true;
          for (const auto& [d, j] : directed)
            if (l.leq(y, j) && !l.up(x).meets(d)) {
              below = false;
              break;
            }
          if (below) rows[x] = rows[x].with(y);
        }
    } else {
      // finite directed sets have a greatest member, so only principal ideals matter
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          bool below = true;
          for (std::size_t z = 0; z < m && below; ++z)
            if (l.leq(y, z) && !l.leq(x, z)) below = false;
          if (below) rows[x] = rows[x].with(y);
        }
    }
    return rows;
  }
  if (m <= kDirectIdealCap) {
    // x ⊲ y iff x lies in ↓A for every A with y ≤ ⋁A
    std::vector<PointSet> common(m, l.elements());
    for_each_subset(l.elements(), [&](PointSet a) {
      const auto lowered = l.down_closure(a);
      l.down(l.join_of(a)).for_each([&](std::size_t y) { common[y] &= lowered; });
    });
    for (std::size_t y = 0; y < m; ++y)
      common[y].for_each([&](std::size_t x) { rows[x] = rows[x].with(y); });
  } else {
    // the largest A avoiding x is {a : x ≰ a}
    for (std::size_t x = 0; x < m; ++x) {
      const auto avoid = l.up(x).complement(m);
      const auto j = l.join_of(avoid);
      for (std::size_t y = 0; y < m; ++y)
        if (!l.leq(y, j)) rows[x] = rows[x].with(y);
    }
  }
  return rows;
}

BinaryRelation below_relation(const Lattice& l, BelowKind kind) {
  if (l.size() > kMaxPoints)
    throw Error(ErrorCode::SizeCapExceeded, {l.size(), kMaxPoints}, "relation carrier too large");
  return BinaryRelation(l.size(), below_rows(l, kind));
}

bool is_ideal(const Lattice& l, PointSet s) { return l.down_closure(s) == s && directed_in(l, s); }

PointSet coprimes(const Lattice& l) {
  PointSet out;
  for (std::size_t q = 0; q < l.size(); ++q)
    if (is_ideal(l, l.up(q).complement(l.size()))) out = out.with(q);
  return out;
}

PointSet join_irreducibles(const Lattice& l) {
  PointSet out;
  for (std::size_t y = 0; y < l.size(); ++y) {
    if (y == l.bottom()) continue;
    const auto strictly_below = l.down(y).without(y);
    std::size_t covers = 0;
    strictly_below.for_each([&](std::size_t x) {
      if ((l.up(x) & strictly_below) == PointSet::singleton(x)) ++covers;
    });
    if (covers == 1) out = out.with(y);
  }
  return out;
}

bool is_join_dense(const Lattice& l, PointSet d) {
  for (std::size_t y = 0; y < l.size(); ++y)
    if (l.join_of(d & l.down(y)) != y) return false;
  return true;
}

WeightResult min_join_dense(const Lattice& l) {
  const auto j = join_irreducibles(l);
  return WeightResult{j.size(), j};
}

WeightResult min_join_dense_search(const Lattice& l) {
  const auto m = l.size();
  if (m > 24) throw Error(ErrorCode::SizeCapExceeded, {m, 24}, "join-dense search is capped");
  for (std::size_t k = 0; k <= m; ++k)
    for (auto d : combinations(m, k))
      if (is_join_dense(l, d)) return WeightResult{k, d};
  return WeightResult{m, l.elements()};
}

}  // namespace ordertop
