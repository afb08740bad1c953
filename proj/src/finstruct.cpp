#include "ordertop/finstruct.hpp"

#include <algorithm>

namespace ordertop {

namespace {

void check_carrier(std::size_t n, std::size_t cap) {
  if (n == 0 || n > cap)
    throw Error(ErrorCode::BadCarrier, {n}, "carrier size must be in 1.." + std::to_string(cap));
}

}  // namespace

std::vector<PointSet> combinations(std::size_t n, std::size_t k) {
  std::vector<PointSet> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    PointSet s;
    for (auto i : idx) s = s.with(i);
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// BinaryRelation

BinaryRelation::BinaryRelation(std::size_t n, std::vector<PointSet> rows) : n_(n), rows_(std::move(rows)) {
  check_carrier(n, kMaxPoints);
  if (rows_.size() != n) throw Error(ErrorCode::BadCarrier, {rows_.size()}, "relation needs one row per point");
  for (std::size_t x = 0; x < n; ++x)
    if (!rows_[x].subset_of(carrier())) throw Error(ErrorCode::NotSubset, {x}, "relation row leaves the carrier");
}

BinaryRelation BinaryRelation::from_matrix(const BoolMatrix& m) {
  std::vector<PointSet> rows(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m[x].size() != m.size()) throw Error(ErrorCode::BadCarrier, {x}, "matrix is not square");
    for (std::size_t y = 0; y < m.size(); ++y)
      if (m[x][y]) rows[x] = rows[x].with(y);
  }
  return BinaryRelation(m.size(), std::move(rows));
}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  std::vector<PointSet> rows(n);
  for (std::size_t x = 0; x < n; ++x) rows[x] = PointSet::singleton(x);
  return BinaryRelation(n, std::move(rows));
}

BinaryRelation BinaryRelation::full(std::size_t n) {
  return BinaryRelation(n, std::vector<PointSet>(n, PointSet::full(n)));
}

BinaryRelation BinaryRelation::empty(std::size_t n) { return BinaryRelation(n, std::vector<PointSet>(n)); }

PointSet BinaryRelation::before(std::size_t y) const {
  PointSet out;
  for (std::size_t x = 0; x < n_; ++x)
    if (rows_[x].contains(y)) out = out.with(x);
  return out;
}

PointSet BinaryRelation::image(PointSet ys) const {
  PointSet out;
  ys.for_each([&](std::size_t y) { out |= rows_[y]; });
  return out;
}

PointSet BinaryRelation::preimage(PointSet ys) const {
  PointSet out;
  for (std::size_t x = 0; x < n_; ++x)
    if (rows_[x].meets(ys)) out = out.with(x);
  return out;
}

BinaryRelation BinaryRelation::transpose() const {
  std::vector<PointSet> rows(n_);
  for (std::size_t y = 0; y < n_; ++y) rows[y] = before(y);
  return BinaryRelation(n_, std::move(rows));
}

BinaryRelation BinaryRelation::compose(const BinaryRelation& next) const {
  std::vector<PointSet> rows(n_);
  for (std::size_t x = 0; x < n_; ++x) rows[x] = next.image(rows_[x]);
  return BinaryRelation(n_, std::move(rows));
}

BinaryRelation BinaryRelation::intersect(const BinaryRelation& other) const {
  std::vector<PointSet> rows(n_);
  for (std::size_t x = 0; x < n_; ++x) rows[x] = rows_[x] & other.rows_[x];
  return BinaryRelation(n_, std::move(rows));
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  for (std::size_t x = 0; x < n_; ++x)
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  return true;
}

bool BinaryRelation::reflexive() const {
  for (std::size_t x = 0; x < n_; ++x)
    if (!rows_[x].contains(x)) return false;
  return true;
}

bool BinaryRelation::transitive() const {
  for (std::size_t x = 0; x < n_; ++x)
    if (!image(rows_[x]).subset_of(rows_[x])) return false;
  return true;
}

BinaryRelation BinaryRelation::restrict_to(PointSet points) const {
  auto pts = points.elements();
  std::vector<PointSet> rows(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (holds(pts[i], pts[j])) rows[i] = rows[i].with(j);
  return BinaryRelation(pts.size(), std::move(rows));
}

BoolMatrix BinaryRelation::matrix() const {
  BoolMatrix m(n_, std::vector<bool>(n_));
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) m[x][y] = holds(x, y);
  return m;
}

// ---------------------------------------------------------------------------
// Qoset

Qoset::Qoset(BinaryRelation rel) : rel_(std::move(rel)), down_(rel_.size()) {
  for (std::size_t y = 0; y < rel_.size(); ++y) down_[y] = rel_.before(y);
}

Qoset Qoset::validate(const BinaryRelation& rel) {
  const auto n = rel.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!rel.holds(x, x)) throw Error(ErrorCode::NotReflexive, {x});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!rel.holds(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (rel.holds(y, z) && !rel.holds(x, z)) throw Error(ErrorCode::NotTransitive, {x, y, z});
    }
  return Qoset(rel);
}

Qoset Qoset::discrete(std::size_t n) { return Qoset(BinaryRelation::identity(n)); }
Qoset Qoset::total(std::size_t n) { return Qoset(BinaryRelation::full(n)); }

Qoset Qoset::chain(std::size_t n) {
  std::vector<PointSet> rows(n);
  for (std::size_t x = 0; x < n; ++x) rows[x] = PointSet::full(n) - PointSet::full(x);
  return Qoset(BinaryRelation(n, std::move(rows)));
}

PointSet Qoset::up_closure(PointSet ys) const { return rel_.image(ys); }

PointSet Qoset::down_closure(PointSet ys) const {
  PointSet out;
  ys.for_each([&](std::size_t y) { out |= down_[y]; });
  return out;
}

bool Qoset::antisymmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    if ((up(x) & down(x)) != PointSet::singleton(x)) return false;
  return true;
}

std::size_t Qoset::class_count() const {
  std::size_t count = 0;
  PointSet seen;
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen.contains(x)) continue;
    seen |= up(x) & down(x);
    ++count;
  }
  return count;
}

Qoset Qoset::dual() const { return Qoset(rel_.transpose()); }

// ---------------------------------------------------------------------------
// Topology

Topology::Topology(std::size_t n, std::vector<PointSet> sorted_opens)
    : n_(n), opens_(std::move(sorted_opens)), minimal_(n, PointSet::full(n)) {
  for (auto u : opens_)
    u.for_each([&](std::size_t x) { minimal_[x] &= u; });
}

Topology Topology::validate(std::size_t n, std::vector<PointSet> family) {
  check_carrier(n, kMaxPoints);
  const auto full = PointSet::full(n);
  for (auto u : family)
    if (!u.subset_of(full)) throw Error(ErrorCode::NotSubset, {u.bits()});
  std::sort(family.begin(), family.end());
  for (std::size_t i = 1; i < family.size(); ++i)
    if (family[i] == family[i - 1]) throw Error(ErrorCode::Duplicate, {family[i].bits()});
  if (family.empty() || family.front() != PointSet{}) throw Error(ErrorCode::MissingEmpty, {});
  if (family.back() != full) throw Error(ErrorCode::MissingFull, {});
  auto present = [&](PointSet s) { return std::binary_search(family.begin(), family.end(), s); };
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!present(family[i] | family[j]))
        throw Error(ErrorCode::NotUnionClosed, {family[i].bits(), family[j].bits()});
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!present(family[i] & family[j]))
        throw Error(ErrorCode::NotIntersectionClosed, {family[i].bits(), family[j].bits()});
  return Topology(n, std::move(family));
}

Topology Topology::generate(std::size_t n, const std::vector<PointSet>& subbase) {
  check_carrier(n, kMaxPoints);
  const auto full = PointSet::full(n);
  std::vector<char> seen(std::size_t{1} << n, 0);
  auto mark = [&](std::vector<PointSet>& acc, PointSet s) {
    if (!seen[s.bits()]) {
      seen[s.bits()] = 1;
      acc.push_back(s);
    }
  };
  // Finite intersections; X is the empty intersection.
  std::vector<PointSet> base;
  mark(base, full);
  for (auto s : subbase) {
    if (!s.subset_of(full)) throw Error(ErrorCode::NotSubset, {s.bits()});
    const auto count = base.size();
    for (std::size_t i = 0; i < count; ++i) mark(base, base[i] & s);
  }
  // Arbitrary unions of the intersections; the empty union is the empty set.
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<PointSet> opens;
  mark(opens, PointSet{});
  for (auto b : base) {
    const auto count = opens.size();
    for (std::size_t i = 0; i < count; ++i) mark(opens, opens[i] | b);
  }
  std::sort(opens.begin(), opens.end());
  return Topology(n, std::move(opens));
}

Topology Topology::discrete(std::size_t n) {
  check_carrier(n, kMaxPoints);
  std::vector<PointSet> opens;
  for_each_subset(PointSet::full(n), [&](PointSet s) { opens.push_back(s); });
  return Topology(n, std::move(opens));
}

Topology Topology::indiscrete(std::size_t n) {
  check_carrier(n, kMaxPoints);
  return Topology(n, {PointSet{}, PointSet::full(n)});
}

bool Topology::is_open(PointSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

std::vector<PointSet> Topology::closed_sets() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (auto u : opens_) out.push_back(u.complement(n_));
  std::sort(out.begin(), out.end());
  return out;
}

PointSet Topology::interior(PointSet s) const {
  PointSet out;
  for (std::size_t x = 0; x < n_; ++x)
    if (minimal_[x].subset_of(s)) out = out.with(x);
  return out;
}

PointSet Topology::closure(PointSet s) const { return interior(s.complement(n_)).complement(n_); }

// ---------------------------------------------------------------------------
// OrderedSpace

OrderedSpace::OrderedSpace(Qoset q, Topology t) : order(std::move(q)), topology(std::move(t)) {
  if (order.size() != topology.size())
    throw Error(ErrorCode::BadCarrier, {order.size(), topology.size()}, "order and topology carriers differ");
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::validate(const BoolMatrix& m) {
  std::vector<PointSet> rows(m.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (m[a].size() != m.size()) throw Error(ErrorCode::BadCarrier, {a}, "matrix is not square");
    for (std::size_t b = 0; b < m.size(); ++b)
      if (m[a][b]) rows[a] = rows[a].with(b);
  }
  return validate(m.size(), rows);
}

Lattice Lattice::validate(std::size_t m, const std::vector<PointSet>& up_rows) {
  check_carrier(m, kMaxLatticeElements);
  if (up_rows.size() != m) throw Error(ErrorCode::BadCarrier, {up_rows.size()});
  const auto all = PointSet::full(m);
  Lattice l;
  l.m_ = m;
  l.up_ = up_rows;
  l.down_.assign(m, PointSet{});
  for (std::size_t a = 0; a < m; ++a) {
    if (!up_rows[a].subset_of(all)) throw Error(ErrorCode::NotSubset, {a});
    up_rows[a].for_each([&](std::size_t b) { l.down_[b] = l.down_[b].with(a); });
  }
  for (std::size_t a = 0; a < m; ++a)
    if (!l.leq(a, a)) throw Error(ErrorCode::NotReflexive, {a});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!l.leq(a, b)) continue;
      for (std::size_t c = 0; c < m; ++c)
        if (l.leq(b, c) && !l.leq(a, c)) throw Error(ErrorCode::NotTransitive, {a, b, c});
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (l.leq(a, b) && l.leq(b, a)) throw Error(ErrorCode::NotAntisymmetric, {a, b});

  l.meet_.assign(m * m, 0);
  l.join_.assign(m * m, 0);
  auto greatest = [&](PointSet s, std::optional<std::size_t>& out) {
    s.for_each([&](std::size_t g) {
      if (!out && s.subset_of(l.down_[g])) out = g;
    });
  };
  auto least = [&](PointSet s, std::optional<std::size_t>& out) {
    s.for_each([&](std::size_t g) {
      if (!out && s.subset_of(l.up_[g])) out = g;
    });
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      std::optional<std::size_t> g;
      greatest(l.down_[a] & l.down_[b], g);
      if (!g) throw Error(ErrorCode::NoMeet, {a, b});
      l.meet_[a * m + b] = l.meet_[b * m + a] = *g;
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      std::optional<std::size_t> g;
      least(l.up_[a] & l.up_[b], g);
      if (!g) throw Error(ErrorCode::NoJoin, {a, b});
      l.join_[a * m + b] = l.join_[b * m + a] = *g;
    }
  l.bottom_ = l.meet_of(all);
  l.top_ = l.join_of(all);
  return l;
}

Lattice Lattice::chain(std::size_t m) {
  std::vector<PointSet> rows(m);
  for (std::size_t a = 0; a < m; ++a) rows[a] = PointSet::full(m) - PointSet::full(a);
  return validate(m, rows);
}

std::size_t Lattice::join_of(PointSet elems) const {
  // The bottom is the least element: the one below everything.
  std::size_t acc = 0;
  for (std::size_t a = 0; a < m_; ++a)
    if (up_[a] == elements()) acc = a;
  elems.for_each([&](std::size_t a) { acc = join(acc, a); });
  return acc;
}

std::size_t Lattice::meet_of(PointSet elems) const {
  std::size_t acc = 0;
  for (std::size_t a = 0; a < m_; ++a)
    if (down_[a] == elements()) acc = a;
  elems.for_each([&](std::size_t a) { acc = meet(acc, a); });
  return acc;
}

PointSet Lattice::down_closure(PointSet elems) const {
  PointSet out;
  elems.for_each([&](std::size_t a) { out |= down_[a]; });
  return out;
}

PointSet Lattice::up_closure(PointSet elems) const {
  PointSet out;
  elems.for_each([&](std::size_t a) { out |= up_[a]; });
  return out;
}

Lattice Lattice::dual() const { return validate(m_, down_); }

BoolMatrix Lattice::matrix() const {
  BoolMatrix out(m_, std::vector<bool>(m_));
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = 0; b < m_; ++b) out[a][b] = leq(a, b);
  return out;
}

// ---------------------------------------------------------------------------
// SpaceMap

SpaceMap::SpaceMap(std::size_t n_src, std::size_t n_dst, std::vector<std::size_t> values)
    : source_size(n_src), target_size(n_dst), value(std::move(values)) {
  check_carrier(n_src, kMaxPoints);
  check_carrier(n_dst, kMaxPoints);
  if (value.size() != n_src) throw Error(ErrorCode::BadCarrier, {value.size()}, "map needs one value per point");
  for (std::size_t x = 0; x < n_src; ++x)
    if (value[x] >= n_dst) throw Error(ErrorCode::NotSubset, {x, value[x]}, "map value outside target");
}

PointSet SpaceMap::preimage(PointSet ys) const {
  PointSet out;
  for (std::size_t x = 0; x < source_size; ++x)
    if (ys.contains(value[x])) out = out.with(x);
  return out;
}

PointSet SpaceMap::image(PointSet xs) const {
  PointSet out;
  xs.for_each([&](std::size_t x) { out = out.with(value[x]); });
  return out;
}

}  // namespace ordertop
