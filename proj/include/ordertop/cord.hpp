#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "ordertop/finstruct.hpp"

namespace ordertop {

/// x R y iff y lies in the interior of the core of x.
BinaryRelation interior_relation(const Topology& s);

/// x <=_R y iff Rx is contained in Ry.
Qoset lower_quasi_order(const BinaryRelation& r);

/// An idempotent relation whose point preimages Ry are ideals of the lower quasi-order.
class CQuasiOrder {
 public:
  CQuasiOrder() = default;
  /// Checks, in order: EmptyPointPreimage(y), NotIdempotent(x, z), NotDirected(y, a, b),
  /// NotDownClosed(y, a, b); the least witness of the first failing clause is reported.
  static CQuasiOrder validate(const BinaryRelation& r);

  std::size_t size() const { return rel_.size(); }
  const BinaryRelation& relation() const { return rel_; }
  const Qoset& lower() const { return lower_; }
  bool operator==(const CQuasiOrder& o) const { return rel_ == o.rel_; }

 private:
  BinaryRelation rel_;
  Qoset lower_;
};

/// O_R = {YR : Y a subset of X}.
Topology topology_of(const CQuasiOrder& r);
/// Fixed points of Y -> RY, ascending.
std::vector<PointSet> rounded_sets(const CQuasiOrder& r);

struct Completion {
  Qoset domain;                    // rounded ideals ordered by inclusion
  std::vector<PointSet> ideals;    // element i of the domain, ascending by membership word
  std::vector<std::size_t> basis;  // basis[x] = index of Rx
  /// x R y iff Rx is way below Ry in the domain, for all x and y.
  bool way_below_matches = false;
};

Completion rounded_ideal_completion(const CQuasiOrder& r);

/// x << y in a qoset: every directed set with a least upper bound above y meets the up-set of x.
BinaryRelation way_below(const Qoset& q);

inline constexpr std::size_t kFamilyEquationCap = 20;

struct CoreProfile {
  static constexpr std::array<std::string_view, 9> names = {
      "core-neighborhood-bases",   "locally-supercompact",     "open-lattice-supercontinuous",
      "closed-lattice-supercontinuous", "closed-lattice-continuous", "interior-preserves-upper-unions",
      "closure-preserves-lower-intersections", "locally-hypercompact-web", "locally-compact-wide-web",
  };
  std::array<bool, 9> flags{};
  bool all() const {
    for (bool f : flags)
      if (!f) return false;
    return true;
  }
};

/// Conditions 6 and 7 throw SizeCapExceeded when there are more than
/// kFamilyEquationCap upper (resp. lower) sets to quantify over.
CoreProfile core_space_profile(const Topology& s);

bool has_core_neighborhood_bases(const Topology& s);
bool is_web_space(const Topology& s);
bool is_wide_web_space(const Topology& s);
bool is_locally_compact(const Topology& s);

bool core_basis_check(const Topology& s, PointSet b);
PointSet minimal_core_basis(const Topology& s);

bool r_dense(const BinaryRelation& r, PointSet b);
bool r_cofinal(const BinaryRelation& r, PointSet b);

struct PointCardinal {
  std::size_t value = 0;
  PointSet witness;
};

struct FamilyCardinal {
  std::size_t value = 0;
  std::vector<PointSet> witness;
};

PointCardinal cofinality(const BinaryRelation& r);
/// Smallest family of opens of which every open is a union.
FamilyCardinal minimal_base(const Topology& t);
/// Smallest set meeting every nonempty open.
PointCardinal minimal_dense(const Topology& t);

/// The Skula topology: generated by the opens and the closed sets.
Topology skula(const Topology& s);

/// Five characterizations of core bases: R-dense, R-cofinal, core basis,
/// dense in the Skula topology, point closures join-dense in the closed-set lattice.
std::array<bool, 5> core_basis_conditions(const Topology& s, PointSet b);

struct InvariantBundle {
  PointCardinal c;
  FamilyCardinal w_open;
  FamilyCardinal w_closed;
  FamilyCardinal w_patch;
  PointCardinal d_patch;
  bool core_basis_conditions_agree = true;  // on every witness set examined
  bool all_equal() const {
    const auto v = c.value;
    return w_open.value == v && w_closed.value == v && w_patch.value == v && d_patch.value == v;
  }
};

inline constexpr std::size_t kInvariantCap = 6;

/// Throws SizeCapExceeded beyond kInvariantCap points.
InvariantBundle cardinal_invariants(const Topology& s);

}  // namespace ordertop
