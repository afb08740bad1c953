#include <algorithm>
#include <random>

#include "ordertop/codec.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/iso.hpp"
#include "ordertop/labcli.hpp"
#include "ordertop/topoderive.hpp"
#include "support.hpp"

using namespace ordertop;
using testsupport::bits;
using testsupport::error_of;
using testsupport::mat;
using testsupport::set;

TEST_SUITE("finstruct") {
  TEST_CASE("topology validation examples") {
    const auto s = Topology::validate(2, {PointSet(0), set({1}), set({0, 1})});
    CHECK(s.opens().size() == 3);

    auto e = error_of([] { Topology::validate(2, {PointSet(0), set({0}), set({1})}); });
    CHECK(e.code() == ErrorCode::MissingFull);

    e = error_of([] { Topology::validate(3, {PointSet(0), set({0}), set({1}), set({0, 1, 2})}); });
    CHECK(e.code() == ErrorCode::NotUnionClosed);
    CHECK(e.witness() == bits({{0}, {1}}));

    e = error_of([] { Topology::validate(2, {PointSet(0), set({0}), set({0}), set({0, 1})}); });
    CHECK(e.code() == ErrorCode::Duplicate);

    e = error_of([] { Topology::validate(2, {set({1}), set({0, 1})}); });
    CHECK(e.code() == ErrorCode::MissingEmpty);

    e = error_of([] { Topology::validate(3, {PointSet(0), set({0, 1}), set({1, 2}), set({0, 1, 2})}); });
    CHECK(e.code() == ErrorCode::NotIntersectionClosed);
    CHECK(e.witness() == bits({{0, 1}, {1, 2}}));

    e = error_of([] { Topology::validate(2, {PointSet(0), set({2}), set({0, 1})}); });
    CHECK(e.code() == ErrorCode::NotSubset);
  }

  TEST_CASE("opens are stored ascending by membership word") {
    const auto t = Topology::validate(2, {set({0, 1}), set({1}), PointSet(0)});
    CHECK(t.opens() == std::vector<PointSet>{PointSet(0), set({1}), set({0, 1})});
  }

  TEST_CASE("carrier bounds") {
    CHECK(error_of([] { BinaryRelation(0, {}); }).code() == ErrorCode::BadCarrier);
    CHECK(error_of([] { Qoset::discrete(kMaxPoints + 1); }).code() == ErrorCode::BadCarrier);
    const auto one = Topology::discrete(1);
    CHECK(one.opens().size() == 2);
    CHECK(Qoset::discrete(1).antisymmetric());
  }

  TEST_CASE("qoset validation examples") {
    CHECK_NOTHROW(Qoset::validate(BinaryRelation::identity(3)));

    auto e = error_of([] { Qoset::validate(mat({{0, 1}, {0, 0}})); });
    CHECK(e.code() == ErrorCode::NotReflexive);
    CHECK(e.witness() == std::vector<std::uint64_t>{0});

    e = error_of([] {
      Qoset::validate(mat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    });
    CHECK(e.code() == ErrorCode::NotTransitive);
    CHECK(e.witness() == std::vector<std::uint64_t>{0, 1, 2});
  }

  TEST_CASE("lattice validation examples") {
    // bottom 0, atoms 1 and 2, top 3
    const auto two_squared = mat({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    const auto l = Lattice::validate(two_squared);
    CHECK(l.meet(1, 2) == 0);
    CHECK(l.join(1, 2) == 3);

    auto e = error_of([] { Lattice::validate(mat({{1, 0}, {0, 1}})); });
    CHECK(e.code() == ErrorCode::NoMeet);
    CHECK(e.witness() == std::vector<std::uint64_t>{0, 1});

    e = error_of([] { Lattice::validate(mat({{1, 1}, {1, 1}})); });
    CHECK(e.code() == ErrorCode::NotAntisymmetric);

    // only a common lower bound, no join
    e = error_of([] { Lattice::validate(mat({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}})); });
    CHECK(e.code() == ErrorCode::NoJoin);
  }

  TEST_CASE("M3 tables match a brute-force bound scan") {
    const auto m3 = mat({{1, 1, 1, 1, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}});
    const auto l = Lattice::validate(m3);
    const auto b = oracle::bounds(m3);
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t y = 0; y < 5; ++y) {
        CHECK(static_cast<int>(l.meet(x, y)) == b.meet[x][y]);
        CHECK(static_cast<int>(l.join(x, y)) == b.join[x][y]);
      }
    CHECK(l.bottom() == 0);
    CHECK(l.top() == 4);
  }

  TEST_CASE("lattice tables agree with the oracle on every lattice up to 6 elements") {
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& l : enumerate_lattices(m)) {
        const auto b = oracle::bounds(l.matrix());
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < m; ++y) {
            REQUIRE(static_cast<int>(l.meet(x, y)) == b.meet[x][y]);
            REQUIRE(static_cast<int>(l.join(x, y)) == b.join[x][y]);
          }
        CHECK(l.dual().dual() == l);
      }
  }

  TEST_CASE("generation examples") {
    const auto g = Topology::generate(3, {set({0, 1}), set({1, 2})});
    CHECK(g.opens() == std::vector<PointSet>{PointSet(0), set({1}), set({0, 1}), set({1, 2}), set({0, 1, 2})});
    CHECK(Topology::generate(3, {}) == Topology::indiscrete(3));
    CHECK(Topology::generate(3, {set({0}), set({1}), set({2})}) == Topology::discrete(3));
  }

  TEST_CASE("generation matches the fixpoint oracle on random subbases") {
    std::mt19937 gen(11);
    for (int round = 0; round < 300; ++round) {
      const int n = 1 + round % 5;
      std::uniform_int_distribution<oracle::Mask> pick(0, oracle::full(n));
      std::vector<PointSet> sub;
      oracle::Family osub;
      for (int k = round % 4; k >= 0; --k) {
        const auto s = pick(gen);
        sub.emplace_back(s);
        osub.push_back(s);
      }
      CHECK(testsupport::family_of(Topology::generate(n, sub)) == oracle::generate(n, osub));
    }
  }

  TEST_CASE("interior and closure agree with the oracle") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& t : enumerate_topologies(n)) {
        const auto f = testsupport::family_of(t);
        for (oracle::Mask s = 0; s <= oracle::full(static_cast<int>(n)); ++s) {
          CHECK(t.interior(PointSet(s)).bits() == oracle::interior(f, s));
          CHECK(t.closure(PointSet(s)).bits() == oracle::closure(static_cast<int>(n), f, s));
        }
      }
  }

  TEST_CASE("minimal neighbourhoods exist and finite spaces are Alexandroff") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& t : enumerate_topologies(n)) {
        for (std::size_t x = 0; x < n; ++x) {
          const auto m = t.minimal_neighborhood(x);
          CHECK(t.is_open(m));
          for (auto o : t.opens())
            if (o.contains(x)) CHECK(m.subset_of(o));
        }
        CHECK(alexandroff(specialization(t)) == t);
      }
  }

  TEST_CASE("relation operations") {
    const BinaryRelation r(3, {set({1}), set({2}), PointSet()});
    CHECK(r.before(2) == set({1}));
    CHECK(r.image(set({0, 1})) == set({1, 2}));
    CHECK(r.preimage(set({2})) == set({1}));
    CHECK(r.compose(r).after(0) == set({2}));
    CHECK(r.transpose().after(2) == set({1}));
    CHECK_FALSE(r.reflexive());
    CHECK_FALSE(r.transitive());
    CHECK(r.restrict_to(set({1, 2})).after(0) == set({1}));
  }

  TEST_CASE("space maps") {
    const SpaceMap f(3, 2, {0, 0, 1});
    CHECK(f.preimage(set({0})) == set({0, 1}));
    CHECK(f.image(set({1, 2})) == set({0, 1}));
    const auto e = error_of([] { SpaceMap(2, 2, {0, 2}); });
    CHECK(e.code() == ErrorCode::NotSubset);
    CHECK(e.witness() == std::vector<std::uint64_t>{1, 2});
    CHECK(error_of([] { SpaceMap(2, 2, {0}); }).code() == ErrorCode::BadCarrier);
  }

  TEST_CASE("ordered space carriers must agree") {
    CHECK(error_of([] { OrderedSpace(Qoset::chain(2), Topology::discrete(3)); }).code() == ErrorCode::BadCarrier);
  }
}

TEST_SUITE("codec") {
  TEST_CASE("canonical text of the Sierpinski space") {
    const auto s = Topology::validate(2, {PointSet(0), set({1}), set({0, 1})});
    CHECK(encode(Object(s)) == R"({"kind":"topology","n":2,"opens":[[],[1],[0,1]]})");
  }

  TEST_CASE("decode propagates validation and schema errors") {
    auto e = error_of([] { decode(R"({"kind":"topology","n":2,"opens":[[],[1]]})"); });
    CHECK(e.code() == ErrorCode::MissingFull);
    e = error_of([] { decode(R"({"kind":"topology","n":2})"); });
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(std::string(e.what()).find("opens") != std::string::npos);
    e = error_of([] { decode(R"({"kind":"topology","n":2,"opens":[[],[1],[0,1)"); });
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(!e.witness().empty());
    e = error_of([] { decode(R"({"kind":"widget","n":2})"); });
    CHECK(e.code() == ErrorCode::SchemaError);
  }

  TEST_CASE("decode of encode is the identity on every small object") {
    std::vector<Object> corpus;
    for (std::size_t n = 1; n <= 3; ++n)
      for (auto k : {EnumKind::qoset, EnumKind::topology, EnumKind::ordered_space})
        for (auto& o : enumerate(k, n)) corpus.push_back(std::move(o));
    for (std::size_t m = 1; m <= 6; ++m)
      for (auto& o : enumerate(EnumKind::lattice, m)) corpus.push_back(std::move(o));
    for (const auto& f : fixtures()) corpus.push_back(f.object);
    corpus.emplace_back(SpaceMap(3, 2, {0, 1, 1}));
    corpus.emplace_back(TaggedRelation{BinaryRelation(2, {set({0, 1}), set({1})}), "c-quasi-order"});
    for (const auto& o : corpus) {
      const auto text = encode(o);
      CHECK(decode(text) == o);
      CHECK(encode(decode(text)) == text);
    }
  }

  TEST_CASE("stream decoding reads one record per line") {
    const auto objs = decode_stream(
        "{\"kind\":\"qoset\",\"n\":1,\"leq\":[[1]]}\n\n{\"kind\":\"topology\",\"n\":1,\"opens\":[[],[0]]}\n");
    REQUIRE(objs.size() == 2);
    CHECK(kind_of(objs[0]) == "qoset");
    CHECK(kind_of(objs[1]) == "topology");
  }
}

TEST_SUITE("iso") {
  TEST_CASE("examples") {
    const auto s = Topology::validate(2, {PointSet(0), set({1}), set({0, 1})});
    const auto swapped = Topology::validate(2, {PointSet(0), set({0}), set({0, 1})});
    const auto r = are_isomorphic(s, swapped);
    CHECK(r.isomorphic);
    CHECK(r.witness == std::vector<std::size_t>{1, 0});

    const auto chain = Qoset::chain(3);
    const auto vee = Qoset::validate(mat({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
    CHECK_FALSE(are_isomorphic(chain, vee).isomorphic);

    CHECK(are_isomorphic(Object(chain), Object(chain)).isomorphic);
    CHECK(error_of([&] { are_isomorphic(Object(chain), Object(s)); }).code() == ErrorCode::KindMismatch);
  }

  TEST_CASE("the lexicographically least witness is reported") {
    const auto r = are_isomorphic(Topology::discrete(3), Topology::discrete(3));
    CHECK(r.witness == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("agrees with a permutation oracle on all pairs of 3-point topologies") {
    const auto tops = enumerate_topologies(3);
    for (const auto& a : tops)
      for (const auto& b : tops) {
        const auto r = are_isomorphic(a, b);
        REQUIRE(r.isomorphic ==
                oracle::topologies_isomorphic(3, testsupport::family_of(a), testsupport::family_of(b)));
        if (r.isomorphic) {
          std::vector<PointSet> img;
          for (auto o : a.opens()) img.push_back(map_set(o, *r.witness));
          CHECK(Topology::validate(3, img) == b);
        }
      }
  }

  TEST_CASE("isomorphism is an equivalence relation on 4-point partial orders") {
    const auto orders = enumerate_partial_orders(4);
    std::vector<std::size_t> cls(orders.size());
    std::size_t classes = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      cls[i] = classes;
      for (std::size_t j = 0; j < i; ++j)
        if (are_isomorphic(orders[i], orders[j]).isomorphic) {
          cls[i] = cls[j];
          break;
        }
      if (cls[i] == classes) ++classes;
    }
    // 16 unlabelled posets on 4 points
    CHECK(classes == 16);
    std::mt19937 gen(5);
    std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
    for (int k = 0; k < 400; ++k) {
      const auto i = pick(gen), j = pick(gen);
      CHECK(are_isomorphic(orders[i], orders[j]).isomorphic == (cls[i] == cls[j]));
      CHECK(are_isomorphic(orders[j], orders[i]).isomorphic == (cls[i] == cls[j]));
    }
  }

  TEST_CASE("marked isomorphism respects the marks") {
    const auto chain = Object(Qoset::discrete(2));
    CHECK(are_isomorphic_marked(chain, set({0}), chain, set({1})).isomorphic);
    CHECK_FALSE(are_isomorphic_marked(chain, set({0}), chain, set({0, 1})).isomorphic);
  }
}
