#pragma once

#include <string_view>
#include <vector>

#include "ordertop/finstruct.hpp"

namespace ordertop {

/// The named coselections: weak, Scott and Alexandroff.
enum class Coselection { upsilon, sigma, alpha };

enum class UpsetKind { alpha, upsilon, sigma, lawson, alpha_dual, upsilon_dual };

enum class Compactness { compact, supercompact, hypercompact };

std::string_view to_string(Coselection z);
Coselection coselection_from_string(std::string_view s);  // accepts upsilon/sigma/alpha and the Greek letters

// ---------------------------------------------------------------------------
// directed sets and least upper bounds in a qoset

/// Nonempty, and any two members have an upper bound inside the set.
bool is_directed(const Qoset& q, PointSet d);
bool is_filtered(const Qoset& q, PointSet d);
/// Upper bounds common to all members of d.
PointSet upper_bounds(const Qoset& q, PointSet d);
PointSet lower_bounds(const Qoset& q, PointSet d);
/// All least upper bounds of d (a class of equivalent points, or empty).
PointSet least_upper_bounds(const Qoset& q, PointSet d);
PointSet greatest_lower_bounds(const Qoset& q, PointSet d);
/// Every directed subset, ascending by membership word.
std::vector<PointSet> directed_subsets(const Qoset& q);
std::vector<PointSet> filtered_subsets(const Qoset& q);

// ---------------------------------------------------------------------------
// derived topologies

Qoset specialization(const Topology& t);
bool is_t0(const Topology& t);
/// All upper sets.
Topology alexandroff(const Qoset& q);
Topology upset_topology(const Qoset& q, UpsetKind which);
/// The coselection applied to q itself (alpha, upsilon or sigma of q).
Topology coselection(const Qoset& q, Coselection z);

PointSet saturation(const Topology& t, PointSet s);

/// (X, specialization(S), S joined with zeta of the dual specialization order).
OrderedSpace patch(const Topology& s, Coselection z);
/// Open upper sets of the ordered space.
Topology upper_space(const OrderedSpace& t);
/// Open lower sets of the ordered space.
Topology lower_space(const OrderedSpace& t);

bool compactness(const Topology& t, PointSet c, Compactness kind);

std::vector<PointSet> irreducible_closed(const Topology& t);
bool is_sober(const Topology& t);
bool is_dspace(const Topology& t);

/// Generated by the complements of compact saturated sets.
Topology cocompact(const Topology& t);

// ---------------------------------------------------------------------------
// quasi-uniformities

struct EntourageBase {
  std::size_t n = 0;
  /// Reflexive relations, intersection-closed, ascending.
  std::vector<BinaryRelation> base;
  bool operator==(const EntourageBase&) const = default;
};

/// Throws NotReflexiveEntourage(i) for a base member missing the diagonal.
EntourageBase validate_entourage_base(std::size_t n, std::vector<BinaryRelation> base);
EntourageBase quasi_uniformity(const Topology& s);
Topology tau(const EntourageBase& e);
Topology tau_inverse(const EntourageBase& e);
Topology tau_star(const EntourageBase& e);

}  // namespace ordertop
