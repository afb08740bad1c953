#pragma once

#include <optional>
#include <vector>

#include "ordertop/codec.hpp"

namespace ordertop {

/// witness[i] is the image of point i; the lexicographically least bijection is reported.
struct IsoResult {
  bool isomorphic = false;
  std::optional<std::vector<std::size_t>> witness;
};

IsoResult are_isomorphic(const Qoset& a, const Qoset& b);
IsoResult are_isomorphic(const Topology& a, const Topology& b);
IsoResult are_isomorphic(const OrderedSpace& a, const OrderedSpace& b);
IsoResult are_isomorphic(const Lattice& a, const Lattice& b);
IsoResult are_isomorphic(const BinaryRelation& a, const BinaryRelation& b);
/// Throws KindMismatch when the records hold different kinds.
IsoResult are_isomorphic(const Object& a, const Object& b);
/// As above, additionally mapping the marked points of a onto those of b.
IsoResult are_isomorphic_marked(const Object& a, PointSet mark_a, const Object& b, PointSet mark_b);

/// Structure described by row-relations and marked subsets, for the generic search.
struct IsoProfile {
  std::size_t n = 0;
  std::vector<std::vector<PointSet>> relations;  // each: n rows over up to 64 points
  std::vector<PointSet> marks;
};

/// Extra test applied to complete candidate bijections (e.g. a family of sets).
using IsoFinalCheck = bool (*)(const void* ctx, const std::vector<std::size_t>& p);

IsoResult iso_search(const IsoProfile& a, const IsoProfile& b, IsoFinalCheck check = nullptr,
                     const void* ctx = nullptr);

/// Image of a set under a point map.
PointSet map_set(PointSet s, const std::vector<std::size_t>& p);

}  // namespace ordertop
