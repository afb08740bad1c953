#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ordertop/finstruct.hpp"

namespace ordertop {

enum class LatticeLaw {
  frame,
  coframe,
  wide_frame,
  wide_coframe,
  completely_distributive,
  meet_continuous,
  continuous_lattice,
  distributive,
};

inline constexpr LatticeLaw kAllLatticeLaws[] = {
    LatticeLaw::frame,           LatticeLaw::coframe,           LatticeLaw::wide_frame,
    LatticeLaw::wide_coframe,    LatticeLaw::completely_distributive, LatticeLaw::meet_continuous,
    LatticeLaw::continuous_lattice, LatticeLaw::distributive,
};

std::string_view to_string(LatticeLaw law);
LatticeLaw lattice_law_from_string(std::string_view s);

/// automatic picks the direct scan inside its cap and an equivalent finite test beyond it.
enum class LawMethod { automatic, direct, reduction };

/// Caps for the powerset-quantified direct scans.
inline constexpr std::size_t kDirectJoinLawCap = 8;     // (d)-type: subsets Y
inline constexpr std::size_t kDirectCollectionCap = 6;  // (D)-type: collections of lower sets
inline constexpr std::size_t kDirectIdealCap = 16;      // (D) over collections of ideals

struct LawWitness {
  std::size_t x = 0;                    // (d)-type: the element x; ⊲/≪ tests: the failing y
  PointSet y;                           // (d)-type: the set Y
  std::vector<PointSet> collection;     // (D)-type: the collection of lower sets
  bool operator==(const LawWitness&) const = default;
};

struct LawResult {
  bool holds = true;
  std::optional<LawWitness> witness;
  LawMethod method = LawMethod::direct;
};

/// Throws SizeCapExceeded when LawMethod::direct is requested beyond the cap.
LawResult check_law(const Lattice& l, LatticeLaw law, LawMethod method = LawMethod::automatic);

/// A lattice of point sets ordered by inclusion; element i is sets[i].
struct SetLattice {
  Lattice lattice;
  std::vector<PointSet> sets;
};

/// Throws SizeCapExceeded when the family has more than kMaxLatticeElements members.
SetLattice inclusion_lattice(const std::vector<PointSet>& sorted_family);
SetLattice open_lattice(const Topology& t);
SetLattice closed_lattice(const Topology& t);

enum class BelowKind { way_below, superway };

/// Row x holds {y : x below y}.
BinaryRelation below_relation(const Lattice& l, BelowKind kind);
/// Same relations on lattices beyond kMaxPoints, as rows of lattice-element sets.
std::vector<PointSet> below_rows(const Lattice& l, BelowKind kind);

bool is_ideal(const Lattice& l, PointSet s);
PointSet coprimes(const Lattice& l);
PointSet join_irreducibles(const Lattice& l);

bool is_join_dense(const Lattice& l, PointSet d);

struct WeightResult {
  std::size_t weight = 0;
  PointSet witness;
};

WeightResult min_join_dense(const Lattice& l);
/// Smallest join-dense subset by exhaustive search, lexicographically least; for cross-checks.
WeightResult min_join_dense_search(const Lattice& l);

}  // namespace ordertop
