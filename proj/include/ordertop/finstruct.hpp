#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordertop/error.hpp"
#include "ordertop/pointset.hpp"

namespace ordertop {

using BoolMatrix = std::vector<std::vector<bool>>;

/// An arbitrary relation on {0..n-1}; row x holds xR = {y : x R y}.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  /// Throws BadCarrier unless 1 <= n <= kMaxPoints and the rows fit.
  BinaryRelation(std::size_t n, std::vector<PointSet> rows);
  static BinaryRelation from_matrix(const BoolMatrix& m);
  static BinaryRelation identity(std::size_t n);
  static BinaryRelation full(std::size_t n);
  static BinaryRelation empty(std::size_t n);

  std::size_t size() const { return n_; }
  PointSet carrier() const { return PointSet::full(n_); }
  bool holds(std::size_t x, std::size_t y) const { return rows_[x].contains(y); }
  /// xR = {y : x R y}.
  PointSet after(std::size_t x) const { return rows_[x]; }
  /// Ry = {x : x R y}.
  PointSet before(std::size_t y) const;
  /// YR = {x : exists y in Y with y R x}.
  PointSet image(PointSet ys) const;
  /// RY = {x : exists y in Y with x R y}.
  PointSet preimage(PointSet ys) const;
  const std::vector<PointSet>& rows() const { return rows_; }

  BinaryRelation transpose() const;
  BinaryRelation compose(const BinaryRelation& next) const;  // x (this;next) z
  BinaryRelation intersect(const BinaryRelation& other) const;
  bool subset_of(const BinaryRelation& other) const;
  bool reflexive() const;
  bool transitive() const;
  BinaryRelation restrict_to(PointSet points) const;  // relabels points ascending
  BoolMatrix matrix() const;

  bool operator==(const BinaryRelation&) const = default;
  auto operator<=>(const BinaryRelation& o) const { return rows_ <=> o.rows_; }

 private:
  std::size_t n_ = 0;
  std::vector<PointSet> rows_;
};

/// A reflexive, transitive relation on a finite carrier.
class Qoset {
 public:
  Qoset() = default;
  /// Throws NotReflexive(x) or NotTransitive(x, y, z), least witness first.
  static Qoset validate(const BinaryRelation& rel);
  static Qoset validate(const BoolMatrix& m) { return validate(BinaryRelation::from_matrix(m)); }
  static Qoset discrete(std::size_t n);
  static Qoset total(std::size_t n);
  /// Chain 0 < 1 < ... < n-1.
  static Qoset chain(std::size_t n);

  std::size_t size() const { return rel_.size(); }
  PointSet carrier() const { return rel_.carrier(); }
  bool leq(std::size_t x, std::size_t y) const { return rel_.holds(x, y); }
  PointSet up(std::size_t x) const { return rel_.after(x); }
  PointSet down(std::size_t x) const { return down_[x]; }
  PointSet up_closure(PointSet ys) const;
  PointSet down_closure(PointSet ys) const;
  bool is_upper(PointSet ys) const { return up_closure(ys) == ys; }
  bool is_lower(PointSet ys) const { return down_closure(ys) == ys; }
  bool antisymmetric() const;
  /// Number of classes of the equivalence x <= y <= x.
  std::size_t class_count() const;
  Qoset dual() const;
  const BinaryRelation& relation() const { return rel_; }

  bool operator==(const Qoset& o) const { return rel_ == o.rel_; }

 private:
  explicit Qoset(BinaryRelation rel);
  BinaryRelation rel_;
  std::vector<PointSet> down_;
};

/// A finite topology stored as its family of opens, ascending by membership word.
class Topology {
 public:
  Topology() = default;
  /// Canonicalizes (sorts) and validates the family. Throws NotSubset,
  /// Duplicate, MissingEmpty, MissingFull, NotUnionClosed(A, B),
  /// NotIntersectionClosed(A, B), checked in that order.
  static Topology validate(std::size_t n, std::vector<PointSet> family);
  /// Smallest topology containing the subbase: finite intersections, then unions.
  static Topology generate(std::size_t n, const std::vector<PointSet>& subbase);
  static Topology discrete(std::size_t n);
  static Topology indiscrete(std::size_t n);

  std::size_t size() const { return n_; }
  PointSet carrier() const { return PointSet::full(n_); }
  const std::vector<PointSet>& opens() const { return opens_; }
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(s.complement(n_)); }
  /// Closed sets, ascending by membership word.
  std::vector<PointSet> closed_sets() const;
  /// Smallest open set containing x.
  PointSet minimal_neighborhood(std::size_t x) const { return minimal_[x]; }
  PointSet interior(PointSet s) const;
  PointSet closure(PointSet s) const;

  bool operator==(const Topology& o) const { return n_ == o.n_ && opens_ == o.opens_; }
  auto operator<=>(const Topology& o) const { return opens_ <=> o.opens_; }

 private:
  Topology(std::size_t n, std::vector<PointSet> sorted_opens);
  std::size_t n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> minimal_;
};

/// A quasi-order and a topology on the same carrier, with no compatibility assumed.
struct OrderedSpace {
  Qoset order;
  Topology topology;

  OrderedSpace() = default;
  /// Throws BadCarrier when the carriers differ.
  OrderedSpace(Qoset q, Topology t);
  std::size_t size() const { return order.size(); }
  bool operator==(const OrderedSpace&) const = default;
};

/// A finite lattice with its meet and join tables.
class Lattice {
 public:
  Lattice() = default;
  /// Throws NotReflexive, NotTransitive, NotAntisymmetric(x, y), NoMeet(x, y),
  /// NoJoin(x, y); meets are checked before joins.
  static Lattice validate(const BoolMatrix& m);
  /// Rows hold up-sets: rows[a] = {b : a <= b}.
  static Lattice validate(std::size_t m, const std::vector<PointSet>& up_rows);
  static Lattice chain(std::size_t m);

  std::size_t size() const { return m_; }
  PointSet elements() const { return PointSet::full(m_); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  PointSet up(std::size_t a) const { return up_[a]; }
  PointSet down(std::size_t a) const { return down_[a]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * m_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * m_ + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t join_of(PointSet elems) const;
  std::size_t meet_of(PointSet elems) const;
  PointSet down_closure(PointSet elems) const;
  PointSet up_closure(PointSet elems) const;
  Lattice dual() const;
  BoolMatrix matrix() const;

  bool operator==(const Lattice& o) const { return m_ == o.m_ && up_ == o.up_; }

 private:
  std::size_t m_ = 0;
  std::vector<PointSet> up_, down_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
};

/// A total function between finite carriers.
struct SpaceMap {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<std::size_t> value;

  SpaceMap() = default;
  /// Throws BadCarrier when a value is out of range or the length is wrong.
  SpaceMap(std::size_t n_src, std::size_t n_dst, std::vector<std::size_t> values);
  std::size_t operator()(std::size_t x) const { return value[x]; }
  PointSet preimage(PointSet ys) const;
  PointSet image(PointSet xs) const;
  bool operator==(const SpaceMap&) const = default;
};

}  // namespace ordertop
