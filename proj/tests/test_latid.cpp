#include "ordertop/enumerate.hpp"
#include "ordertop/latid.hpp"
#include "support.hpp"

using namespace ordertop;
using testsupport::error_of;
using testsupport::mat;
using testsupport::set;

namespace {

// bottom 0, atoms 1..3, top 4
Lattice m3() { return Lattice::validate(mat({{1, 1, 1, 1, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}})); }
// 0 < 1 < 2 < 4 and 0 < 3 < 4
Lattice n5() { return Lattice::validate(mat({{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}})); }
Lattice two_squared() { return Lattice::validate(mat({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}})); }
Topology sierpinski() { return Topology::validate(2, {PointSet(0), set({1}), set({0, 1})}); }

bool is_distributive_law(LatticeLaw law) { return law != LatticeLaw::meet_continuous && law != LatticeLaw::continuous_lattice; }

}  // namespace

TEST_SUITE("latid") {
  TEST_CASE("open and closed lattices") {
    CHECK(open_lattice(sierpinski()).lattice == Lattice::chain(3));
    CHECK(closed_lattice(sierpinski()).lattice == Lattice::chain(3));
    CHECK(open_lattice(Topology::discrete(2)).lattice == two_squared());
    CHECK(open_lattice(sierpinski()).sets == sierpinski().opens());
  }

  TEST_CASE("M3 and N5 laws") {
    const auto f = check_law(m3(), LatticeLaw::frame);
    CHECK_FALSE(f.holds);
    REQUIRE(f.witness);
    CHECK(f.witness->x == 1);
    CHECK(f.witness->y == set({2, 3}));
    CHECK_FALSE(check_law(n5(), LatticeLaw::distributive).holds);
    CHECK(check_law(two_squared(), LatticeLaw::completely_distributive).holds);
    for (auto law : kAllLatticeLaws) {
      const auto rm = check_law(m3(), law);
      const auto rn = check_law(n5(), law);
      CHECK(rm.holds == !is_distributive_law(law));
      CHECK(rn.holds == !is_distributive_law(law));
      if (!rm.holds) CHECK(rm.witness.has_value());
      if (!rn.holds) CHECK(rn.witness.has_value());
    }
  }

  TEST_CASE("finite collapse pattern over every lattice up to 6 elements") {
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& l : enumerate_lattices(m)) {
        const bool dist = oracle::distributive(l.matrix());
        for (auto law : kAllLatticeLaws) {
          const auto r = check_law(l, law);
          REQUIRE(r.holds == (is_distributive_law(law) ? dist : true));
        }
      }
  }

  TEST_CASE("direct and reduction methods agree up to 5 elements") {
    for (std::size_t m = 1; m <= 5; ++m)
      for (const auto& l : enumerate_lattices(m))
        for (auto law : kAllLatticeLaws) {
          const auto d = check_law(l, law, LawMethod::direct);
          const auto r = check_law(l, law, LawMethod::reduction);
          CHECK(d.holds == r.holds);
        }
  }

  TEST_CASE("direct scans are capped") {
    const auto big = Lattice::chain(kDirectCollectionCap + 1);
    CHECK(error_of([&] { check_law(big, LatticeLaw::completely_distributive, LawMethod::direct); }).code() ==
          ErrorCode::SizeCapExceeded);
    CHECK(check_law(big, LatticeLaw::completely_distributive).holds);
  }

  TEST_CASE("open lattices of finite spaces are frames") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& t : enumerate_topologies(n)) {
        CHECK(check_law(open_lattice(t).lattice, LatticeLaw::frame).holds);
        CHECK(check_law(closed_lattice(t).lattice, LatticeLaw::coframe).holds);
      }
  }

  TEST_CASE("below relations") {
    for (std::size_t m = 1; m <= 5; ++m)
      for (const auto& l : enumerate_lattices(m))
        CHECK(below_relation(l, BelowKind::way_below) == BinaryRelation::from_matrix(l.matrix()));
    const auto sw = below_relation(m3(), BelowKind::superway);
    for (std::size_t a = 1; a <= 3; ++a) CHECK(sw.before(a) == set({0}));
    const auto c = below_relation(Lattice::chain(3), BelowKind::superway);
    CHECK(c.holds(1, 2));
    CHECK(c.holds(0, 1));
    CHECK(below_rows(m3(), BelowKind::superway) == sw.rows());
  }

  TEST_CASE("superway below is the intersection over covers") {
    for (std::size_t m = 1; m <= 5; ++m)
      for (const auto& l : enumerate_lattices(m)) {
        const auto sw = below_relation(l, BelowKind::superway);
        for (std::size_t y = 0; y < m; ++y) {
          PointSet expect = l.elements();
          for_each_subset(l.elements(), [&](PointSet a) {
            if (l.leq(y, l.join_of(a))) expect &= l.down_closure(a);
          });
          CHECK(sw.before(y) == expect);
        }
      }
  }

  TEST_CASE("coprimes") {
    CHECK(coprimes(Lattice::chain(3)) == set({1, 2}));
    CHECK(coprimes(two_squared()) == set({1, 2}));
    // the complement of an atom's up-set holds the other two atoms, which have no bound inside it
    CHECK(coprimes(m3()) == PointSet());
    // on distributive lattices coprimes are the join-irreducibles
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& l : enumerate_lattices(m)) {
        if (!oracle::distributive(l.matrix())) continue;
        CHECK(coprimes(l) == join_irreducibles(l));
      }
  }

  TEST_CASE("coprimes match a directed-complement scan") {
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& l : enumerate_lattices(m)) {
        const auto mx = l.matrix();
        PointSet expect;
        for (std::size_t q = 0; q < m; ++q) {
          std::vector<std::size_t> rest;
          for (std::size_t x = 0; x < m; ++x)
            if (!mx[q][x]) rest.push_back(x);
          bool ideal = !rest.empty();
          for (auto a : rest)
            for (std::size_t b = 0; b < m; ++b)
              if (mx[b][a] && mx[q][b]) ideal = false;
          for (auto a : rest)
            for (auto b : rest) {
              bool bounded = false;
              for (auto c : rest) bounded = bounded || (mx[a][c] && mx[b][c]);
              ideal = ideal && bounded;
            }
          if (ideal) expect = expect.with(q);
        }
        CHECK(coprimes(l) == expect);
      }
  }

  TEST_CASE("join-irreducibles against the oracle count") {
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& l : enumerate_lattices(m))
        CHECK(static_cast<int>(join_irreducibles(l).size()) == oracle::join_irreducible_count(l.matrix()));
  }

  TEST_CASE("weight examples") {
    const auto w = min_join_dense(two_squared());
    CHECK(w.weight == 2);
    CHECK(w.witness == set({1, 2}));
    CHECK(min_join_dense(m3()).weight == 3);
    CHECK(min_join_dense(Lattice::chain(4)).weight == 3);
    CHECK(is_join_dense(m3(), set({1, 2, 3})));
    CHECK_FALSE(is_join_dense(m3(), set({1, 2})));
  }

  TEST_CASE("weight agrees with exhaustive search and with the dual on distributive lattices") {
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& l : enumerate_lattices(m)) {
        const auto w = min_join_dense(l);
        const auto s = min_join_dense_search(l);
        CHECK(w.weight == s.weight);
        CHECK(w.witness == s.witness);
        CHECK(is_join_dense(l, w.witness));
        if (oracle::distributive(l.matrix())) CHECK(w.weight == min_join_dense(l.dual()).weight);
      }
  }

  TEST_CASE("ideals") {
    CHECK(is_ideal(m3(), set({0, 1})));
    CHECK_FALSE(is_ideal(m3(), set({0, 1, 2})));
    CHECK_FALSE(is_ideal(m3(), PointSet()));
    CHECK(is_ideal(m3(), m3().elements()));
  }

  TEST_CASE("law names round-trip") {
    for (auto law : kAllLatticeLaws) CHECK(lattice_law_from_string(to_string(law)) == law);
  }
}
