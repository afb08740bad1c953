#include "ordertop/cord.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/ospace.hpp"
#include "ordertop/topoderive.hpp"
#include "support.hpp"

using namespace ordertop;
using testsupport::error_of;
using testsupport::mat;
using testsupport::set;

namespace {

OrderedSpace chain2_discrete() { return {Qoset::chain(2), Topology::discrete(2)}; }
OrderedSpace chain3_up_unstable() {
  return {Qoset::chain(3), Topology::validate(3, {PointSet(), set({1}), set({0, 1, 2})})};
}
Qoset two_squared() { return Qoset::validate(mat({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}})); }

bool implies(bool a, bool b) { return !a || b; }

template <class F>
void each_space(std::size_t max_n, F&& f) {
  for (std::size_t n = 1; n <= max_n; ++n) for_each_ordered_space(n, f);
}

// {x : y in the upper-space interior of up(x)}
PointSet r_of(const OrderedSpace& t, std::size_t y) {
  const auto u = upper_space(t);
  PointSet out;
  for (std::size_t x = 0; x < t.size(); ++x)
    if (u.interior(t.order.up(x)).contains(y)) out = out.with(x);
  return out;
}

bool join_semilattice_with_bottom(const Qoset& q) {
  if (!q.antisymmetric()) return false;
  bool has_bottom = false;
  for (std::size_t b = 0; b < q.size(); ++b) has_bottom = has_bottom || q.up(b) == q.carrier();
  if (!has_bottom) return false;
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (least_upper_bounds(q, set({x, y})).empty()) return false;
  return true;
}

}  // namespace

TEST_SUITE("ospace") {
  TEST_CASE("separation examples") {
    const auto s = separation_profile(chain2_discrete());
    CHECK(s.pospace);
    CHECK(s.t2_ordered);
    CHECK(s.upper_regular);
    CHECK_FALSE(separation_profile({Qoset::chain(2), Topology::indiscrete(2)}).lower_semi_qospace);
    for (const auto& [name, v] : separation_profile({Qoset::discrete(2), Topology::discrete(2)}).flags()) {
      INFO(name);
      CHECK(v);
    }
  }

  TEST_CASE("semi-qospaces have closed principal ideals and filters") {
    each_space(3, [](const OrderedSpace& t) {
      bool lower = true, upper = true;
      for (std::size_t x = 0; x < t.size(); ++x) {
        lower = lower && t.topology.is_closed(t.order.down(x));
        upper = upper && t.topology.is_closed(t.order.up(x));
      }
      CHECK(is_lower_semi_qospace(t) == lower);
      CHECK(is_upper_semi_qospace(t) == upper);
      CHECK(is_semi_qospace(t) == (lower && upper));
    });
  }

  TEST_CASE("separation implication chain") {
    each_space(3, [](const OrderedSpace& t) {
      const auto s = separation_profile(t);
      CHECK(implies(s.upper_regular && s.semi_qospace, s.qospace));
      CHECK(implies(s.qospace, s.semi_qospace));
      CHECK(s.pospace == (s.qospace && t.order.antisymmetric()));
    });
  }

  TEST_CASE("convexity examples") {
    CHECK(convexity_profile(chain2_discrete()).hyperconvex);
    const OrderedSpace coarse{Qoset::discrete(3), Topology::validate(3, {PointSet(), set({0, 1}), set({0, 1, 2})})};
    const auto c = convexity_profile(coarse);
    CHECK(c.strongly_convex);
    CHECK_FALSE(c.hyperconvex);
    for (const auto& s : enumerate_topologies(3)) CHECK(convexity_profile(patch(s, Coselection::alpha)).alpha_convex);
  }

  TEST_CASE("convexity implication chain and the base criterion") {
    each_space(3, [](const OrderedSpace& t) {
      const auto c = convexity_profile(t);
      for (bool z : {c.hyperconvex, c.sigma_convex, c.alpha_convex}) CHECK(implies(z, c.strongly_convex));
      CHECK(implies(c.strongly_convex, c.locally_convex));
      CHECK(is_hyperconvex_by_base(t) == c.hyperconvex);
    });
  }

  TEST_CASE("stability examples") {
    CHECK_FALSE(stability_profile(chain3_up_unstable()).up_stable);
    CHECK(stability_profile(chain2_discrete()).core_stable);
    each_space(3, [](const OrderedSpace& t) { CHECK(is_d_stable(t)); });
  }

  TEST_CASE("stability relations") {
    each_space(3, [](const OrderedSpace& t) {
      const auto s = stability_profile(t);
      CHECK(s.diamond_stable == (s.vee_stable && s.wedge_stable));
      CHECK(implies(s.core_stable, s.up_stable));
      // finite upper spaces are web spaces; their specialization is the order once ideals are closed
      if (is_lower_semi_qospace(t)) CHECK(s.vee_stable);
      bool directed = true;
      for (std::size_t y = 0; y < t.size(); ++y) directed = directed && is_directed(t.order, r_of(t, y));
      CHECK(s.wedge_stable == directed);
      if (join_semilattice_with_bottom(t.order)) CHECK(s.wedge_stable);
    });
  }

  TEST_CASE("principal filter families") {
    const auto q = Qoset::discrete(2);
    CHECK(upset_family(q, UpsetFamily::vee) == std::vector<PointSet>{PointSet(), set({0}), set({1}), set({0, 1})});
    CHECK(upset_family(q, UpsetFamily::wedge) == std::vector<PointSet>{PointSet(), set({0}), set({1}), set({0, 1})});
    const auto v = upset_family(Qoset::chain(3), UpsetFamily::vee);
    CHECK(v == std::vector<PointSet>{PointSet(), set({2}), set({1, 2}), set({0, 1, 2})});
  }

  TEST_CASE("core stability via the upper space") {
    each_space(3, [](const OrderedSpace& t) {
      if (!is_semi_qospace(t)) return;
      const auto u = upper_space(t);
      const bool core = core_space_profile(u).all() && specialization(u) == t.order;
      CHECK(is_core_stable(t) == core);
      const bool parts = is_upper_regular(t) && is_locally_filtered(t) && is_up_stable(t) && is_d_stable(t);
      CHECK(is_core_stable(t) == parts);
    });
  }

  TEST_CASE("web examples") {
    CHECK(web_profile(chain2_discrete()).fan_space);
    CHECK_FALSE(web_profile(chain3_up_unstable()).sector_space);
    const auto v = Qoset::validate(mat({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(is_web(v, set({0, 1, 2}), 1));
    // 1 and 2 share no lower point inside {1, 2}
    CHECK_FALSE(is_web(v, set({1, 2}), 1));
  }

  TEST_CASE("web implication chain and finite mc-orderedness") {
    each_space(3, [](const OrderedSpace& t) {
      const auto w = web_profile(t);
      CHECK(implies(w.fan_space, w.upsilon_sector_space));
      CHECK(implies(w.upsilon_sector_space, w.sector_space));
      if (is_semi_qospace(t) && t.order.antisymmetric()) CHECK(w.mc_ordered);
    });
  }

  TEST_CASE("patch spaces are web-ordered and locally filtered") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& s : enumerate_topologies(n)) {
        const auto p = patch(s, Coselection::upsilon);
        CHECK(is_web_ordered(p));
        CHECK(is_locally_filtered(p));
        CHECK(is_up_stable(p));
        CHECK(upper_space(p) == s);
      }
  }

  TEST_CASE("bundle examples") {
    const auto q = two_squared();
    const OrderedSpace lawson{q, upset_topology(q, UpsetKind::lawson)};
    CHECK(lawson.topology == Topology::discrete(4));
    const auto b62 = theorem_bundle(lawson, Bundle::thm_6_2);
    for (bool v : b62.verdicts) CHECK(v);
    CHECK(b62.agree);

    const auto b53 = theorem_bundle(chain3_up_unstable(), Bundle::thm_5_3);
    for (bool v : b53.verdicts) CHECK_FALSE(v);
    CHECK(b53.agree);

    CHECK(theorem_bundle(chain2_discrete(), Bundle::thm_7_2).agree);
  }

  TEST_CASE("sector and fan characterizations agree on every space up to 3 points") {
    each_space(3, [](const OrderedSpace& t) {
      CHECK(theorem_bundle(t, Bundle::thm_4_6).agree);
      CHECK(theorem_bundle(t, Bundle::thm_5_3).agree);
    });
  }

  TEST_CASE("Lawson spaces of finite posets") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& q : enumerate_partial_orders(n)) {
        CHECK(is_dcpo(q));
        CHECK(is_continuous_domain(q));
        const OrderedSpace t{q, upset_topology(q, UpsetKind::lawson)};
        CHECK(is_lawson_space(t));
        const auto b = theorem_bundle(t, Bundle::thm_6_2);
        for (bool v : b.verdicts) CHECK(v);
      }
  }

  TEST_CASE("semilattice examples") {
    // discrete opens are not all upper sets of the chain, so only compatibility fails
    for (const auto& [name, v] : semilattice_profile({Qoset::chain(3), Topology::discrete(3)}).flags()) {
      INFO(name);
      CHECK(v == (name != "compatible"));
    }
    CHECK(semilattice_profile({Qoset::chain(3), alexandroff(Qoset::chain(3))}).compatible);
    CHECK(semilattice_profile({two_squared(), Topology::discrete(4)}).topological);
    CHECK_FALSE(semilattice_profile({Qoset::chain(2), Topology::indiscrete(2)}).compatible);
    const auto e = error_of([] { semilattice_profile({Qoset::discrete(2), Topology::discrete(2)}); });
    CHECK(e.code() == ErrorCode::NotASemilattice);
    CHECK(e.witness() == std::vector<std::uint64_t>{0, 1});
    CHECK(error_of([] { theorem_bundle({Qoset::discrete(2), Topology::discrete(2)}, Bundle::thm_7_2); }).code() ==
          ErrorCode::NotASemilattice);
  }

  TEST_CASE("compatibility means the specialization is the order") {
    for (std::size_t n = 1; n <= 3; ++n)
      for_each_semilattice_ordered_space(n, [](const OrderedSpace& t) {
        CHECK(is_compatible(t) == (specialization(t.topology) == t.order));
      });
  }

  TEST_CASE("meet tables") {
    const auto m = meet_table(two_squared());
    CHECK(m[1 * 4 + 2] == 0);
    CHECK(m[3 * 4 + 2] == 2);
  }

  TEST_CASE("weak lower topologies make topological semilattices") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& q : enumerate_semilattice_orders(n)) {
        const OrderedSpace t{q, upset_topology(q, UpsetKind::upsilon_dual)};
        CHECK(semilattice_profile(t).topological);
      }
  }

  TEST_CASE("semilattice conditions agree on hyperconvex T1 instances") {
    for (std::size_t n = 1; n <= 3; ++n)
      for_each_semilattice_ordered_space(n, [](const OrderedSpace& t) {
        CHECK(theorem_bundle(t, Bundle::thm_7_2).agree);
        CHECK(theorem_bundle(t, Bundle::prop_7_4).agree);
      });
  }

  TEST_CASE("bundle names") {
    for (auto b : {Bundle::thm_4_6, Bundle::thm_5_3, Bundle::thm_6_2, Bundle::thm_7_2, Bundle::prop_7_4})
      CHECK(bundle_from_string(to_string(b)) == b);
    CHECK(error_of([] { bundle_from_string("thm-1.1"); }).code() == ErrorCode::UnknownSuite);
  }
}
