// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/labcli.hpp"
#include "ordertop/latid.hpp"
#include "ordertop/topoderive.hpp"

using namespace ordertop;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 for none
  std::function<Verdict()> run;
};

Report sweep(const std::string& suite, std::size_t n, std::size_t workers = 1) {
  SuiteSpec spec;
  spec.suite = suite;
  spec.n = n;
  spec.workers = workers;
  return run_suite(spec);
}

// runs suite over sizes lo..hi and folds the tallies into v
void sweep_sizes(Verdict& v, const std::string& suite, std::size_t lo, std::size_t hi) {
  std::size_t instances = 0, failed = 0, vacuous = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto r = sweep(suite, n);
    instances += r.instances;
    failed += r.failed;
    vacuous += r.vacuous;
    if (!r.ok() && v.ok) {
      v.ok = false;
      v.detail += suite + " n=" + std::to_string(n) + " first counterexample " +
                  std::to_string(*r.first_counterexample()) + "; ";
    }
  }
  v.detail += suite + " n<=" + std::to_string(hi) + ": " + std::to_string(instances) + " instances, " +
              std::to_string(failed) + " failed, " + std::to_string(vacuous) + " vacuous; ";
}

Topology sierpinski() { return Topology::validate(2, {PointSet(), PointSet::of({1}), PointSet::of({0, 1})}); }

Verdict roundtrip() {
  Verdict v;
  const auto r = sweep("thm-3.3-roundtrip", 4);
  const auto oracle_count = oracle::all_topologies(4).size();
  v.ok = r.ok() && r.instances == 355 && oracle_count == 355;
  v.detail = std::to_string(r.instances) + " topologies (oracle " + std::to_string(oracle_count) + "), " +
             std::to_string(r.failed) + " failed";
  return v;
}

Verdict patch_adjunction() {
  Verdict v;
  sweep_sizes(v, "lemma-2.1", 1, 3);
  return v;
}

Verdict sector_and_fan() {
  Verdict v;
  for (const char* id : {"thm-4.6", "thm-5.3"}) {
    const auto r = sweep(id, 4);
    if (!r.ok() || r.instances != 77745) v.ok = false;
    v.detail += std::string(id) + ": " + std::to_string(r.instances) + " spaces, " + std::to_string(r.failed) +
                " disagreements; ";
  }
  return v;
}

Verdict lawson() {
  Verdict v;
  sweep_sizes(v, "thm-6.2", 1, 5);
  const auto orders5 = enumerate_partial_orders(5).size();
  if (orders5 != 4231) v.ok = false;
  v.detail += "orders at n=5: " + std::to_string(orders5) + " swept exhaustively";
  return v;
}

Verdict core_profile() {
  Verdict v;
  sweep_sizes(v, "prop-3.1", 1, 4);
  return v;
}

Verdict quasi_uniformities() {
  Verdict v;
  sweep_sizes(v, "prop-5.5", 1, 3);
  const auto e = quasi_uniformity(sierpinski());
  const std::vector<BinaryRelation> want{BinaryRelation(2, {PointSet::of({0, 1}), PointSet::of({1})}),
                                         BinaryRelation::full(2)};
  auto got = e.base;
  std::sort(got.begin(), got.end());
  auto expect = want;
  std::sort(expect.begin(), expect.end());
  const bool example = got == expect && tau(e) == sierpinski() &&
                       tau_inverse(e) == Topology::validate(2, {PointSet(), PointSet::of({0}), PointSet::of({0, 1})}) &&
                       tau_star(e) == Topology::discrete(2);
  v.ok = v.ok && example;
  v.detail += std::string("two-point worked example ") + (example ? "matches" : "differs");
  return v;
}

Verdict cardinals() {
  Verdict v;
  sweep_sizes(v, "thm-9.3", 1, 4);
  sweep_sizes(v, "prop-9.1", 1, 3);
  return v;
}

Verdict lattice_laws() {
  Verdict v;
  sweep_sizes(v, "lattice-laws", 1, 6);
  const LatticeLaw laws[] = {LatticeLaw::frame,      LatticeLaw::coframe,
                             LatticeLaw::wide_frame, LatticeLaw::wide_coframe,
                             LatticeLaw::completely_distributive, LatticeLaw::distributive};
  for (const char* name : {"m3", "n5"}) {
    const auto& l = std::get<Lattice>(fixture(name).object);
    std::size_t flagged = 0;
    for (auto law : laws) {
      const auto r = check_law(l, law);
      if (!r.holds && r.witness) ++flagged;
    }
    if (flagged != std::size(laws)) v.ok = false;
    v.detail += std::string(name) + " fails " + std::to_string(flagged) + "/6 laws with witnesses; ";
  }
  return v;
}

Verdict converters() {
  Verdict v;
  sweep_sizes(v, "thm-8.4", 1, 3);
  return v;
}

Verdict semilattices() {
  Verdict v;
  sweep_sizes(v, "thm-7.2", 1, 4);
  return v;
}

Verdict determinism() {
  Verdict v;
  for (const char* id : {"thm-3.3-roundtrip", "thm-9.3", "lattice-laws"}) {
    const auto a = sweep(id, 4).to_lines(false);
    const auto b = sweep(id, 4).to_lines(false);
    const auto c = sweep(id, 4, 3).to_lines(false);
    if (a != b || a != c) {
      v.ok = false;
      v.detail += std::string(id) + " reports differ; ";
    }
  }
  std::size_t checked = 0;
  for (const auto& id : suite_ids())
    for (const auto& fault : suite_faults(id)) {
      SuiteSpec spec;
      spec.suite = id;
      spec.n = 4;
      spec.seed = 7;
      spec.samples = 2000;
      spec.fault = fault;
      const auto single = run_suite(spec);
      bool same = !single.ok();
      for (std::size_t w : {2, 3, 8}) {
        spec.workers = w;
        const auto part = run_suite(spec);
        same = same && part.first_counterexample() == single.first_counterexample() &&
               part.determinism_hash == single.determinism_hash;
      }
      for (const auto& c : single.counterexamples)
        same = same && evaluate_instance(id, c.instance, fault).status == Status::fail;
      if (!same) {
        v.ok = false;
        v.detail += id + "/" + fault + " diverges; ";
      }
      ++checked;
    }
  if (checked == 0) v.ok = false;
  v.detail += "repeated and 3-worker reports identical; " + std::to_string(checked) +
              " seeded fault runs agree across 1/2/3/8 workers and replay";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "interior-relation and specialization roundtrips on 4 points", 10, roundtrip},
      {2, "patch / upper-space adjunction, n <= 3", 30, patch_adjunction},
      {3, "sector-space and fan-space equivalences on 77,745 spaces", 300, sector_and_fan},
      {4, "Lawson spaces of posets n <= 5; (4) <=> (5) on ordered spaces n <= 3", 0, lawson},
      {5, "nine core-space conditions on every space n <= 4", 0, core_profile},
      {6, "quasi-uniformity identities, n <= 3, plus the two-point example", 0, quasi_uniformities},
      {7, "five cardinal invariants n <= 4; core-basis characterizations n <= 3", 120, cardinals},
      {8, "lattice-law collapse m <= 6; M3/N5 witnesses; dual weight", 60, lattice_laws},
      {9, "six-way converter roundtrips on T0 spaces n <= 3", 0, converters},
      {10, "semilattice biconditional groups, n <= 4", 0, semilattices},
      {11, "determinism and partition-independent first counterexamples", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = v.ok && in_time;
    if (!pass) ++failures;
    std::string limit = c.limit_s > 0 ? " (limit " + std::to_string(static_cast<int>(c.limit_s)) + " s)" : "";
    while (!v.detail.empty() && (v.detail.back() == ' ' || v.detail.back() == ';')) v.detail.pop_back();
    std::printf("[%s] %2d %s: %s | %.2f s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), v.detail.c_str(), secs,
                limit.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
