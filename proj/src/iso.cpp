#include "ordertop/iso.hpp"

#include <algorithm>

#include "ordertop/topoderive.hpp"

namespace ordertop {

PointSet map_set(PointSet s, const std::vector<std::size_t>& p) {
  PointSet out;
  s.for_each([&](std::size_t x) { out = out.with(p[x]); });
  return out;
}

namespace {

// Per-point signature used for pruning: degrees in each relation and mark membership.
std::vector<std::vector<std::size_t>> signatures(const IsoProfile& s) {
  std::vector<std::vector<std::size_t>> sig(s.n);
  for (const auto& rel : s.relations) {
    std::vector<std::size_t> in(s.n, 0);
    for (std::size_t x = 0; x < s.n; ++x) rel[x].for_each([&](std::size_t y) { ++in[y]; });
    for (std::size_t x = 0; x < s.n; ++x) {
      sig[x].push_back(rel[x].size());
      sig[x].push_back(in[x]);
      sig[x].push_back(rel[x].contains(x) ? 1 : 0);
    }
  }
  for (auto m : s.marks)
    for (std::size_t x = 0; x < s.n; ++x) sig[x].push_back(m.contains(x) ? 1 : 0);
  return sig;
}

struct Search {
  const IsoProfile& a;
  const IsoProfile& b;
  IsoFinalCheck check;
  const void* ctx;
  std::vector<std::vector<std::size_t>> sig_a, sig_b;
  std::vector<std::size_t> p;
  PointSet used;

  bool consistent(std::size_t x) const {
    const auto px = p[x];
    for (std::size_t r = 0; r < a.relations.size(); ++r) {
      const auto& ra = a.relations[r];
      const auto& rb = b.relations[r];
      for (std::size_t y = 0; y <= x; ++y) {
        if (ra[x].contains(y) != rb[px].contains(p[y])) return false;
        if (ra[y].contains(x) != rb[p[y]].contains(px)) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t x) {
    if (x == a.n) return !check || check(ctx, p);
    for (std::size_t y = 0; y < b.n; ++y) {
      if (used.contains(y) || sig_a[x] != sig_b[y]) continue;
      p[x] = y;
      used = used.with(y);
      if (consistent(x) && extend(x + 1)) return true;
      used = used.without(y);
    }
    return false;
  }
};

}  // namespace

IsoResult iso_search(const IsoProfile& a, const IsoProfile& b, IsoFinalCheck check, const void* ctx) {
  IsoResult r;
  if (a.n != b.n || a.relations.size() != b.relations.size() || a.marks.size() != b.marks.size()) return r;
  Search s{a, b, check, ctx, signatures(a), signatures(b), std::vector<std::size_t>(a.n, 0), {}};
  auto sa = s.sig_a, sb = s.sig_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return r;
  if (s.extend(0)) {
    r.isomorphic = true;
    r.witness = s.p;
  }
  return r;
}

namespace {

IsoProfile profile_of(const BinaryRelation& rel) { return IsoProfile{rel.size(), {rel.rows()}, {}}; }

struct FamilyPair {
  const std::vector<PointSet>* a;
  const std::vector<PointSet>* b;
};

bool families_match(const void* ctx, const std::vector<std::size_t>& p) {
  const auto* f = static_cast<const FamilyPair*>(ctx);
  std::vector<PointSet> image;
  image.reserve(f->a->size());
  for (auto s : *f->a) image.push_back(map_set(s, p));
  std::sort(image.begin(), image.end());
  return image == *f->b;
}

}  // namespace

IsoResult are_isomorphic(const BinaryRelation& a, const BinaryRelation& b) {
  return iso_search(profile_of(a), profile_of(b));
}

IsoResult are_isomorphic(const Qoset& a, const Qoset& b) { return are_isomorphic(a.relation(), b.relation()); }

IsoResult are_isomorphic(const Topology& a, const Topology& b) {
  if (a.size() != b.size() || a.opens().size() != b.opens().size()) return {};
  FamilyPair fp{&a.opens(), &b.opens()};
  return iso_search(profile_of(specialization(a).relation()), profile_of(specialization(b).relation()),
                    families_match, &fp);
}

IsoResult are_isomorphic(const OrderedSpace& a, const OrderedSpace& b) {
  if (a.size() != b.size() || a.topology.opens().size() != b.topology.opens().size()) return {};
  FamilyPair fp{&a.topology.opens(), &b.topology.opens()};
  IsoProfile pa{a.size(), {a.order.relation().rows(), specialization(a.topology).relation().rows()}, {}};
  IsoProfile pb{b.size(), {b.order.relation().rows(), specialization(b.topology).relation().rows()}, {}};
  return iso_search(pa, pb, families_match, &fp);
}

IsoResult are_isomorphic(const Lattice& a, const Lattice& b) {
  std::vector<PointSet> ra(a.size()), rb(b.size());
  for (std::size_t x = 0; x < a.size(); ++x) ra[x] = a.up(x);
  for (std::size_t x = 0; x < b.size(); ++x) rb[x] = b.up(x);
  return iso_search(IsoProfile{a.size(), {ra}, {}}, IsoProfile{b.size(), {rb}, {}});
}

IsoResult are_isomorphic(const Object& a, const Object& b) {
  if (a.index() != b.index())
    throw Error(ErrorCode::KindMismatch, {}, std::string(kind_of(a)) + " vs " + std::string(kind_of(b)));
  return std::visit(
      [&](const auto& va) -> IsoResult {
        using T = std::decay_t<decltype(va)>;
        const auto& vb = std::get<T>(b);
        if constexpr (std::is_same_v<T, TaggedRelation>)
          return are_isomorphic(va.relation, vb.relation);
        else if constexpr (std::is_same_v<T, SpaceMap>)
          throw Error(ErrorCode::KindMismatch, {}, "maps have no isomorphism test");
        else
          return are_isomorphic(va, vb);
      },
      a);
}

IsoResult are_isomorphic_marked(const Object& a, PointSet mark_a, const Object& b, PointSet mark_b) {
  if (a.index() != b.index())
    throw Error(ErrorCode::KindMismatch, {}, std::string(kind_of(a)) + " vs " + std::string(kind_of(b)));
  if (mark_a.size() != mark_b.size()) return {};
  auto shape = [](const Object& o, PointSet mark, const std::vector<PointSet>*& family) {
    family = nullptr;
    IsoProfile p;
    if (auto* q = std::get_if<Qoset>(&o)) {
      p = profile_of(q->relation());
    } else if (auto* t = std::get_if<Topology>(&o)) {
      p = profile_of(specialization(*t).relation());
      family = &t->opens();
    } else if (auto* s = std::get_if<OrderedSpace>(&o)) {
      p = IsoProfile{s->size(), {s->order.relation().rows(), specialization(s->topology).relation().rows()}, {}};
      family = &s->topology.opens();
    } else if (auto* l = std::get_if<Lattice>(&o)) {
      std::vector<PointSet> rows(l->size());
      for (std::size_t x = 0; x < l->size(); ++x) rows[x] = l->up(x);
      p = IsoProfile{l->size(), {rows}, {}};
    } else if (auto* r = std::get_if<TaggedRelation>(&o)) {
      p = profile_of(r->relation);
    } else {
      throw Error(ErrorCode::KindMismatch, {}, "maps have no isomorphism test");
    }
    p.marks.push_back(mark);
    return p;
  };
  const std::vector<PointSet>* fa = nullptr;
  const std::vector<PointSet>* fb = nullptr;
  const auto pa = shape(a, mark_a, fa);
  const auto pb = shape(b, mark_b, fb);
  if (pa.n != pb.n) return {};
  if (fa == nullptr) return iso_search(pa, pb);
  if (fa->size() != fb->size()) return {};
  FamilyPair fp{fa, fb};
  return iso_search(pa, pb, families_match, &fp);
}

}  // namespace ordertop
