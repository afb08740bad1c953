#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace ordertop {

/// Largest carrier the library accepts for spaces, orders and relations.
inline constexpr std::size_t kMaxPoints = 16;
/// Largest lattice accepted; open-set lattices of small spaces exceed kMaxPoints.
inline constexpr std::size_t kMaxLatticeElements = 64;

/// A subset of a finite carrier {0, ..., n-1}, stored as a membership word.
/// Also used for sets of lattice elements (up to kMaxLatticeElements).
class PointSet {
 public:
  using word_type = std::uint64_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(word_type bits) : bits_(bits) {}

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~word_type{0} : ((word_type{1} << n) - 1));
  }
  static constexpr PointSet singleton(std::size_t x) { return PointSet(word_type{1} << x); }
  static PointSet of(std::initializer_list<std::size_t> points) {
    PointSet s;
    for (auto p : points) s = s.with(p);
    return s;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t x) const { return (bits_ >> x) & 1u; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool meets(PointSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr PointSet with(std::size_t x) const { return PointSet(bits_ | (word_type{1} << x)); }
  constexpr PointSet without(std::size_t x) const { return PointSet(bits_ & ~(word_type{1} << x)); }
  /// Complement relative to the carrier of size n.
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const PointSet&) const = default;

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (word_type b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (word_type b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

 private:
  word_type bits_ = 0;
};

/// Calls f for every subset of `universe` (including the empty set), in
/// ascending order of membership word.
template <class F>
void for_each_subset(PointSet universe, F&& f) {
  const auto u = universe.bits();
  PointSet::word_type s = 0;
  while (true) {
    f(PointSet(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

/// Lexicographic comparison of the ascending element lists of two sets.
inline bool lex_less(PointSet a, PointSet b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

/// All k-element subsets of {0..n-1} in lexicographic order of element lists.
std::vector<PointSet> combinations(std::size_t n, std::size_t k);

}  // namespace ordertop

template <>
struct std::hash<ordertop::PointSet> {
  std::size_t operator()(ordertop::PointSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
