#include "ordertop/cord.hpp"

#include <algorithm>

#include "ordertop/latid.hpp"
#include "ordertop/topoderive.hpp"

namespace ordertop {

BinaryRelation interior_relation(const Topology& s) {
  std::vector<PointSet> rows(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) rows[x] = s.interior(saturation(s, PointSet::singleton(x)));
  return BinaryRelation(s.size(), std::move(rows));
}

Qoset lower_quasi_order(const BinaryRelation& r) {
  const auto n = r.size();
  std::vector<PointSet> pre(n), rows(n);
  for (std::size_t x = 0; x < n; ++x) pre[x] = r.before(x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (pre[x].subset_of(pre[y])) rows[x] = rows[x].with(y);
  return Qoset::validate(BinaryRelation(n, std::move(rows)));
}

CQuasiOrder CQuasiOrder::validate(const BinaryRelation& r) {
  const auto n = r.size();
  for (std::size_t y = 0; y < n; ++y)
    if (r.before(y).empty()) throw Error(ErrorCode::EmptyPointPreimage, {y});
  const auto twice = r.compose(r);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      if (twice.holds(x, z) != r.holds(x, z)) throw Error(ErrorCode::NotIdempotent, {x, z});
  const auto lower = lower_quasi_order(r);
  for (std::size_t y = 0; y < n; ++y) {
    const auto ideal = r.before(y);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (ideal.contains(a) && ideal.contains(b) && !(lower.up(a) & lower.up(b)).meets(ideal))
          throw Error(ErrorCode::NotDirected, {y, a, b});
  }
  for (std::size_t y = 0; y < n; ++y) {
    const auto ideal = r.before(y);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!ideal.contains(a) && ideal.contains(b) && lower.leq(a, b))
          throw Error(ErrorCode::NotDownClosed, {y, a, b});
  }
  CQuasiOrder out;
  out.rel_ = r;
  out.lower_ = lower;
  return out;
}

Topology topology_of(const CQuasiOrder& c) {
  const auto& r = c.relation();
  const auto n = r.size();
  std::vector<char> seen(std::size_t{1} << n, 0);
  std::vector<PointSet> family{PointSet{}};
  seen[0] = 1;
  // YR is the union of the yR for y in Y
  for (std::size_t y = 0; y < n; ++y) {
    const auto count = family.size();
    for (std::size_t i = 0; i < count; ++i) {
      const auto u = family[i] | r.after(y);
      if (!seen[u.bits()]) {
        seen[u.bits()] = 1;
        family.push_back(u);
      }
    }
  }
  return Topology::validate(n, std::move(family));
}

std::vector<PointSet> rounded_sets(const CQuasiOrder& c) {
  std::vector<PointSet> out;
  for_each_subset(c.relation().carrier(), [&](PointSet y) {
    if (c.relation().preimage(y) == y) out.push_back(y);
  });
  return out;
}

BinaryRelation way_below(const Qoset& q) {
  const auto n = q.size();
  std::vector<std::pair<PointSet, PointSet>> probes;  // directed set, its least upper bounds
  for (auto d : directed_subsets(q)) {
    const auto lubs = least_upper_bounds(q, d);
    if (!lubs.empty()) probes.emplace_back(d, lubs);
  }
  std::vector<PointSet> rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool below = true;
      for (const auto& [d, lubs] : probes)
        if (q.leq(y, lubs.lowest()) && !q.up(x).meets(d)) {
          below = false;
          break;
        }
      if (below) rows[x] = rows[x].with(y);
    }
  return BinaryRelation(n, std::move(rows));
}

Completion rounded_ideal_completion(const CQuasiOrder& c) {
  const auto& r = c.relation();
  const auto& lower = c.lower();
  const auto n = r.size();
  Completion out;
  for_each_subset(r.carrier(), [&](PointSet i) {
    if (r.preimage(i) == i && is_directed(lower, i) && lower.is_lower(i)) out.ideals.push_back(i);
  });
  const auto m = out.ideals.size();
  if (m > kMaxPoints) throw Error(ErrorCode::SizeCapExceeded, {m, kMaxPoints}, "too many rounded ideals");
  std::vector<PointSet> rows(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (out.ideals[i].subset_of(out.ideals[j])) rows[i] = rows[i].with(j);
  out.domain = Qoset::validate(BinaryRelation(m, std::move(rows)));
  out.basis.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto it = std::lower_bound(out.ideals.begin(), out.ideals.end(), r.before(x));
    if (it == out.ideals.end() || *it != r.before(x))
      throw Error(ErrorCode::InvalidSource, {x}, "Rx is not a rounded ideal");
    out.basis[x] = static_cast<std::size_t>(it - out.ideals.begin());
  }
  const auto wb = way_below(out.domain);
  out.way_below_matches = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r.holds(x, y) != wb.holds(out.basis[x], out.basis[y])) out.way_below_matches = false;
  return out;
}

// ---------------------------------------------------------------------------
// core-space profile

namespace {

// Every open U around every x contains some C from `accept` with x in the interior of C.
template <class Accept>
bool has_neighborhood_bases(const Topology& s, Accept accept) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (auto u : s.opens()) {
      if (!u.contains(x)) continue;
      bool found = false;
      for_each_subset(u, [&](PointSet c) {
        if (!found && s.interior(c).contains(x) && accept(c)) found = true;
      });
      if (!found) return false;
    }
  return true;
}

std::vector<PointSet> sets_where(PointSet carrier, auto pred) {
  std::vector<PointSet> out;
  for_each_subset(carrier, [&](PointSet s) {
    if (pred(s)) out.push_back(s);
  });
  return out;
}

}  // namespace

bool has_core_neighborhood_bases(const Topology& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (auto u : s.opens()) {
      if (!u.contains(x)) continue;
      bool found = false;
      u.for_each([&](std::size_t y) {
        const auto core = saturation(s, PointSet::singleton(y));
        if (!found && s.interior(core).contains(x) && core.subset_of(u)) found = true;
      });
      if (!found) return false;
    }
  return true;
}

bool is_web_space(const Topology& s) {
  return check_law(open_lattice(s).lattice, LatticeLaw::coframe).holds;
}

bool is_wide_web_space(const Topology& s) {
  const auto q = specialization(s);
  return has_neighborhood_bases(s, [&](PointSet f) { return is_filtered(q, f); });
}

bool is_locally_compact(const Topology& s) {
  return has_neighborhood_bases(s, [&](PointSet c) { return compactness(s, c, Compactness::compact); });
}

CoreProfile core_space_profile(const Topology& s) {
  CoreProfile p;
  const auto q = specialization(s);
  p.flags[0] = has_core_neighborhood_bases(s);
  p.flags[1] = has_neighborhood_bases(s, [&](PointSet c) { return compactness(s, c, Compactness::supercompact); });
  p.flags[2] = check_law(open_lattice(s).lattice, LatticeLaw::completely_distributive).holds;
  const auto closed = closed_lattice(s).lattice;
  p.flags[3] = check_law(closed, LatticeLaw::completely_distributive).holds;
  p.flags[4] = check_law(closed, LatticeLaw::continuous_lattice).holds;

  const auto uppers = sets_where(s.carrier(), [&](PointSet y) { return q.is_upper(y); });
  const auto lowers = sets_where(s.carrier(), [&](PointSet y) { return q.is_lower(y); });
  if (uppers.size() > kFamilyEquationCap || lowers.size() > kFamilyEquationCap)
    throw Error(ErrorCode::SizeCapExceeded, {std::max(uppers.size(), lowers.size()), kFamilyEquationCap},
                "family quantifier is capped");
  p.flags[5] = true;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << uppers.size()) && p.flags[5]; ++mask) {
    PointSet whole, pieces;
    for (std::size_t i = 0; i < uppers.size(); ++i)
      if ((mask >> i) & 1u) {
        whole |= uppers[i];
        pieces |= s.interior(uppers[i]);
      }
    p.flags[5] = s.interior(whole) == pieces;
  }
  p.flags[6] = true;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << lowers.size()) && p.flags[6]; ++mask) {
    PointSet whole = s.carrier(), pieces = s.carrier();
    for (std::size_t i = 0; i < lowers.size(); ++i)
      if ((mask >> i) & 1u) {
        whole &= lowers[i];
        pieces &= s.closure(lowers[i]);
      }
    p.flags[6] = s.closure(whole) == pieces;
  }
  p.flags[7] = has_neighborhood_bases(s, [&](PointSet c) { return compactness(s, c, Compactness::hypercompact); }) &&
               is_web_space(s);
  p.flags[8] = is_locally_compact(s) && is_wide_web_space(s);
  return p;
}

bool core_basis_check(const Topology& s, PointSet b) {
  for (auto u : s.opens())
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (!u.contains(y)) continue;
      bool found = false;
      (b & u).for_each([&](std::size_t c) {
        const auto core = saturation(s, PointSet::singleton(c));
        if (!found && s.interior(core).contains(y) && core.subset_of(u)) found = true;
      });
      if (!found) return false;
    }
  return true;
}

PointSet minimal_core_basis(const Topology& s) {
  for (std::size_t k = 0; k <= s.size(); ++k)
    for (auto b : combinations(s.size(), k))
      if (core_basis_check(s, b)) return b;
  return s.carrier();
}

bool r_dense(const BinaryRelation& r, PointSet b) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (r.holds(x, y) && (r.after(x) & r.before(y) & b).empty()) return false;
  return true;
}

bool r_cofinal(const BinaryRelation& r, PointSet b) {
  const auto lower = lower_quasi_order(r);
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (r.holds(x, y) && (lower.up(x) & r.before(y) & b).empty()) return false;
  return true;
}

PointCardinal cofinality(const BinaryRelation& r) {
  for (std::size_t k = 0; k <= r.size(); ++k)
    for (auto b : combinations(r.size(), k))
      if (r_cofinal(r, b)) return {k, b};
  return {r.size(), r.carrier()};
}

namespace {

bool is_base(const Topology& t, const std::vector<PointSet>& family) {
  for (auto u : t.opens()) {
    PointSet covered;
    for (auto b : family)
      if (b.subset_of(u)) covered |= b;
    if (covered != u) return false;
  }
  return true;
}

constexpr std::size_t kBaseSearchCap = 24;

}  // namespace

FamilyCardinal minimal_base(const Topology& t) {
  std::vector<PointSet> candidates;
  for (auto u : t.opens())
    if (!u.empty()) candidates.push_back(u);  // the empty union needs no member
  if (candidates.size() <= kBaseSearchCap) {
    for (std::size_t k = 0; k <= candidates.size(); ++k)
      for (auto pick : combinations(candidates.size(), k)) {
        std::vector<PointSet> family;
        pick.for_each([&](std::size_t i) { family.push_back(candidates[i]); });
        if (is_base(t, family)) return {k, family};
      }
  }
  // Larger families: the minimal neighborhoods belong to every base and form one.
  std::vector<PointSet> cores;
  for (std::size_t x = 0; x < t.size(); ++x) cores.push_back(t.minimal_neighborhood(x));
  std::sort(cores.begin(), cores.end());
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  return {cores.size(), cores};
}

PointCardinal minimal_dense(const Topology& t) {
  for (std::size_t k = 0; k <= t.size(); ++k)
    for (auto d : combinations(t.size(), k)) {
      bool dense = true;
      for (auto u : t.opens())
        if (!u.empty() && !u.meets(d)) {
          dense = false;
          break;
        }
      if (dense) return {k, d};
    }
  return {t.size(), t.carrier()};
}

Topology skula(const Topology& s) {
  auto sub = s.opens();
  auto closed = s.closed_sets();
  sub.insert(sub.end(), closed.begin(), closed.end());
  return Topology::generate(s.size(), sub);
}

std::array<bool, 5> core_basis_conditions(const Topology& s, PointSet b) {
  const auto r = interior_relation(s);
  std::array<bool, 5> out{};
  out[0] = r_dense(r, b);
  out[1] = r_cofinal(r, b);
  out[2] = core_basis_check(s, b);
  const auto strong = patch(s, Coselection::alpha).topology;
  out[3] = true;
  for (auto u : strong.opens())
    if (!u.empty() && !u.meets(b)) out[3] = false;
  const auto closed = closed_lattice(s);
  PointSet generators;
  b.for_each([&](std::size_t x) {
    const auto cl = s.closure(PointSet::singleton(x));
    auto it = std::lower_bound(closed.sets.begin(), closed.sets.end(), cl);
    generators = generators.with(static_cast<std::size_t>(it - closed.sets.begin()));
  });
  out[4] = is_join_dense(closed.lattice, generators);
  return out;
}

InvariantBundle cardinal_invariants(const Topology& s) {
  if (s.size() > kInvariantCap)
    throw Error(ErrorCode::SizeCapExceeded, {s.size(), kInvariantCap}, "minimal-base search is capped");
  InvariantBundle out;
  out.c = cofinality(interior_relation(s));
  out.w_open = minimal_base(s);
  const auto closed = closed_lattice(s);
  const auto w = min_join_dense(closed.lattice);
  out.w_closed.value = w.weight;
  w.witness.for_each([&](std::size_t i) { out.w_closed.witness.push_back(closed.sets[i]); });
  const auto weak = patch(s, Coselection::upsilon).topology;
  out.w_patch = minimal_base(weak);
  out.d_patch = minimal_dense(weak);
  for (auto b : {out.c.witness, out.d_patch.witness}) {
    const auto conds = core_basis_conditions(s, b);
    for (bool f : conds)
      if (f != conds[0]) out.core_basis_conditions_agree = false;
  }
  return out;
}

}  // namespace ordertop
