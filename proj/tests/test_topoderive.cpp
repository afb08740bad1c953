#include "ordertop/cord.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/ospace.hpp"
#include "ordertop/topoderive.hpp"
#include "support.hpp"

using namespace ordertop;
using testsupport::family_of;
using testsupport::mat;
using testsupport::set;

namespace {

Topology sierpinski() { return Topology::validate(2, {PointSet(0), set({1}), set({0, 1})}); }
Qoset antichain(std::size_t n) { return Qoset::discrete(n); }

BinaryRelation rel(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<PointSet> rows(n);
  for (auto [x, y] : pairs) rows[x] = rows[x].with(y);
  return BinaryRelation(n, rows);
}

}  // namespace

TEST_SUITE("topoderive") {
  TEST_CASE("specialization examples") {
    const auto q = specialization(sierpinski());
    CHECK(q.leq(0, 1));
    CHECK_FALSE(q.leq(1, 0));
    CHECK(specialization(Topology::discrete(2)) == Qoset::discrete(2));
    CHECK(specialization(Topology::indiscrete(2)) == Qoset::total(2));
  }

  TEST_CASE("specialization matches the defining quantifier and detects T0") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& t : enumerate_topologies(n)) {
        const auto q = specialization(t);
        CHECK(testsupport::matrix_of(q) == oracle::specialization(static_cast<int>(n), family_of(t)));
        CHECK(q.antisymmetric() == is_t0(t));
      }
  }

  TEST_CASE("upset topology examples") {
    const auto chain = Qoset::chain(3);
    CHECK(upset_topology(chain, UpsetKind::alpha).opens() ==
          std::vector<PointSet>{PointSet(0), set({2}), set({1, 2}), set({0, 1, 2})});
    CHECK(upset_topology(antichain(2), UpsetKind::upsilon) == Topology::discrete(2));
    CHECK(upset_topology(Qoset::chain(2), UpsetKind::lawson) == Topology::discrete(2));
    CHECK(upset_topology(Qoset::chain(2), UpsetKind::sigma) == sierpinski());
  }

  TEST_CASE("upset topologies agree with the oracle; Scott equals Alexandroff on finite qosets") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& q : enumerate_qosets(n)) {
        const auto m = testsupport::matrix_of(q);
        const auto alpha = upset_topology(q, UpsetKind::alpha);
        CHECK(family_of(alpha) == oracle::upper_sets(m));
        CHECK(family_of(upset_topology(q, UpsetKind::upsilon)) == oracle::weak_upper(m));
        CHECK(upset_topology(q, UpsetKind::sigma) == alpha);
        CHECK(family_of(upset_topology(q, UpsetKind::alpha_dual)) == oracle::upper_sets(oracle::dual(m)));
        CHECK(family_of(upset_topology(q, UpsetKind::lawson)) ==
              oracle::join(static_cast<int>(n), oracle::upper_sets(m), oracle::weak_upper(oracle::dual(m))));
        CHECK(alexandroff(q) == alpha);
      }
  }

  TEST_CASE("hull operator examples") {
    const auto s = sierpinski();
    CHECK(s.closure(set({1})) == set({0, 1}));
    CHECK(s.interior(set({0})) == PointSet());
    CHECK(saturation(s, set({0})) == set({0, 1}));
    const auto q = Qoset::chain(3);
    CHECK(q.up_closure(set({1})) == set({1, 2}));
    CHECK(q.down_closure(set({1})) == set({0, 1}));
  }

  TEST_CASE("saturation is the up-closure in the specialization order") {
    for (const auto& t : enumerate_topologies(3))
      for_each_subset(t.carrier(), [&](PointSet y) { CHECK(saturation(t, y) == specialization(t).up_closure(y)); });
  }

  TEST_CASE("directed sets in a qoset") {
    const auto v = Qoset::validate(mat({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(is_directed(v, set({0, 1})));
    CHECK_FALSE(is_directed(v, set({1, 2})));
    CHECK_FALSE(is_directed(v, PointSet()));
    CHECK(is_filtered(v, set({0, 1, 2})));
    CHECK(least_upper_bounds(v, set({0})) == set({0}));
    CHECK(least_upper_bounds(v, set({1, 2})) == PointSet());
    CHECK(greatest_lower_bounds(v, set({1, 2})) == set({0}));
    // equivalent points form a single lub class
    CHECK(least_upper_bounds(Qoset::total(2), set({0})) == set({0, 1}));
  }

  TEST_CASE("patch examples") {
    const auto p = patch(sierpinski(), Coselection::upsilon);
    CHECK(p.order == Qoset::chain(2));
    CHECK(p.topology == Topology::discrete(2));
    for (auto z : {Coselection::upsilon, Coselection::sigma, Coselection::alpha}) {
      const auto d = patch(Topology::discrete(3), z);
      CHECK(d.order == Qoset::discrete(3));
      CHECK(d.topology == Topology::discrete(3));
    }
    const auto a = patch(alexandroff(antichain(2)), Coselection::upsilon);
    CHECK(a.order == antichain(2));
    CHECK(a.topology == Topology::discrete(2));
  }

  TEST_CASE("patch topology is the join of the space and the dual coselection") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& s : enumerate_topologies(n)) {
        const auto m = oracle::specialization(static_cast<int>(n), family_of(s));
        const auto up = oracle::join(static_cast<int>(n), family_of(s), oracle::weak_upper(oracle::dual(m)));
        const auto al = oracle::join(static_cast<int>(n), family_of(s), oracle::upper_sets(oracle::dual(m)));
        CHECK(family_of(patch(s, Coselection::upsilon).topology) == up);
        CHECK(family_of(patch(s, Coselection::alpha).topology) == al);
        CHECK(patch(s, Coselection::sigma).topology == patch(s, Coselection::alpha).topology);
        CHECK(specialization(s) == patch(s, Coselection::upsilon).order);
      }
  }

  TEST_CASE("upper and lower space examples") {
    CHECK(upper_space(OrderedSpace(Qoset::chain(2), Topology::discrete(2))) == sierpinski());
    for (const auto& t : enumerate_topologies(3)) CHECK(upper_space(OrderedSpace(Qoset::discrete(3), t)) == t);
    CHECK(upper_space(OrderedSpace(Qoset::chain(2), Topology::indiscrete(2))) == Topology::indiscrete(2));
    CHECK(lower_space(OrderedSpace(Qoset::chain(2), Topology::discrete(2))) ==
          Topology::validate(2, {PointSet(), set({0}), set({0, 1})}));
  }

  TEST_CASE("patch then upper space is the identity on finite spaces") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& s : enumerate_topologies(n))
        for (auto z : {Coselection::upsilon, Coselection::sigma, Coselection::alpha})
          REQUIRE(upper_space(patch(s, z)) == s);
  }

  TEST_CASE("upper space then patch recovers convex semi-qospaces") {
    for_each_ordered_space(3, [](const OrderedSpace& t) {
      for (auto z : {Coselection::upsilon, Coselection::sigma, Coselection::alpha}) {
        if (!is_zeta_convex(t, z) || !is_semi_qospace(t)) continue;
        const auto p = patch(upper_space(t), z);
        CHECK(p.topology == t.topology);
        CHECK(p.order == t.order);
      }
    });
  }

  TEST_CASE("compactness examples") {
    const auto s = sierpinski();
    CHECK(compactness(s, set({0, 1}), Compactness::supercompact));
    CHECK_FALSE(compactness(Topology::discrete(2), set({0, 1}), Compactness::supercompact));
    for (const auto& t : enumerate_topologies(3))
      for_each_subset(t.carrier(), [&](PointSet c) {
        CHECK(compactness(t, c, Compactness::compact));
        if (!c.empty()) CHECK(compactness(t, c, Compactness::hypercompact));
      });
  }

  TEST_CASE("supercompact sets are those with a single minimal point class") {
    for (const auto& t : enumerate_topologies(3)) {
      const auto q = specialization(t);
      for_each_subset(t.carrier(), [&](PointSet c) {
        if (c.empty()) return;
        // supercompact iff some x in C has C inside up(x)
        bool principal = false;
        c.for_each([&](std::size_t x) { principal = principal || c.subset_of(q.up(x)); });
        CHECK(compactness(t, c, Compactness::supercompact) == principal);
      });
    }
  }

  TEST_CASE("irreducible closed sets and sobriety") {
    const auto irr = irreducible_closed(sierpinski());
    CHECK(irr == std::vector<PointSet>{set({0}), set({0, 1})});
    CHECK(is_sober(sierpinski()));
    CHECK_FALSE(is_sober(Topology::indiscrete(2)));
    CHECK(irreducible_closed(Topology::discrete(3)) == std::vector<PointSet>{set({0}), set({1}), set({2})});
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& t : enumerate_topologies(n)) {
        CHECK(is_sober(t) == is_t0(t));
        CHECK(is_dspace(t) == is_t0(t));
      }
  }

  TEST_CASE("irreducible closed sets are the closures of directed sets") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& t : enumerate_topologies(n)) {
        std::vector<PointSet> closures;
        for (auto d : directed_subsets(specialization(t))) closures.push_back(t.closure(d));
        std::sort(closures.begin(), closures.end());
        closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
        auto irr = irreducible_closed(t);
        std::sort(irr.begin(), irr.end());
        CHECK(irr == closures);
      }
  }

  TEST_CASE("cocompact examples and the weak lower topology") {
    CHECK(cocompact(sierpinski()) == Topology::validate(2, {PointSet(), set({0}), set({0, 1})}));
    CHECK(cocompact(Topology::discrete(2)) == Topology::discrete(2));
    CHECK(cocompact(alexandroff(Qoset::chain(3))) == upset_topology(Qoset::chain(3), UpsetKind::alpha_dual));
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& s : enumerate_topologies(n)) {
        const auto q = specialization(s);
        CHECK(cocompact(s) == upset_topology(q, UpsetKind::upsilon_dual));
        CHECK(cocompact(s) == upset_topology(q, UpsetKind::alpha_dual));
      }
  }

  TEST_CASE("quasi-uniformity examples") {
    const auto e = quasi_uniformity(sierpinski());
    const auto all = BinaryRelation::full(2);
    const auto missing = rel(2, {{0, 0}, {0, 1}, {1, 1}});
    REQUIRE(e.base.size() == 2);
    CHECK(std::find(e.base.begin(), e.base.end(), all) != e.base.end());
    CHECK(std::find(e.base.begin(), e.base.end(), missing) != e.base.end());
    CHECK(tau(e) == sierpinski());
    CHECK(tau_inverse(e) == Topology::validate(2, {PointSet(), set({0}), set({0, 1})}));
    CHECK(tau_star(e) == Topology::discrete(2));

    const auto one = quasi_uniformity(Topology::discrete(1));
    CHECK(one.base == std::vector<BinaryRelation>{BinaryRelation::identity(1)});
    CHECK(tau(one) == Topology::indiscrete(1));
    CHECK(tau_star(one) == Topology::indiscrete(1));

    CHECK(tau_star(quasi_uniformity(alexandroff(antichain(2)))) == Topology::discrete(2));
  }

  TEST_CASE("entourage bases must be reflexive") {
    const auto e = testsupport::error_of(
        [] { validate_entourage_base(2, {BinaryRelation::full(2), BinaryRelation::empty(2)}); });
    CHECK(e.code() == ErrorCode::NotReflexiveEntourage);
    CHECK(e.witness() == std::vector<std::uint64_t>{1});
  }

  TEST_CASE("quasi-uniformity recovers the space and its weak patch") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& s : enumerate_topologies(n)) {
        const auto e = quasi_uniformity(s);
        for (const auto& u : e.base) CHECK(u.reflexive());
        CHECK(tau(e) == s);
        CHECK(tau_inverse(e) == coselection(specialization(s).dual(), Coselection::upsilon));
        CHECK(tau_star(e) == patch(s, Coselection::upsilon).topology);
      }
  }

  TEST_CASE("coselection names") {
    CHECK(coselection_from_string("upsilon") == Coselection::upsilon);
    CHECK(coselection_from_string("σ") == Coselection::sigma);
    CHECK(coselection_from_string("alpha") == Coselection::alpha);
    CHECK(to_string(Coselection::sigma) == "sigma");
  }
}
