#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ordertop/cord.hpp"
#include "ordertop/labcli.hpp"
#include "ordertop/latid.hpp"
#include "ordertop/morphcat.hpp"
#include "ordertop/ospace.hpp"
#include "ordertop/topoderive.hpp"

namespace ordertop {

namespace {

struct Instance {
  std::optional<Object> object;
  json param = json::object();
};

json instance_to_json(const Instance& inst) {
  json j;
  j["object"] = inst.object ? to_json(*inst.object) : json(nullptr);
  j["param"] = inst.param;
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, {}, "instance record must be an object");
  Instance inst;
  const auto& obj = require_field(j, "object");
  if (!obj.is_null()) inst.object = from_json(obj);
  if (j.contains("param")) inst.param = j["param"];
  return inst;
}

template <class T>
const T& get(const Instance& inst) {
  if (!inst.object) throw Error(ErrorCode::SchemaError, {}, "instance record has no object");
  if (auto* p = std::get_if<T>(&*inst.object)) return *p;
  throw Error(ErrorCode::KindMismatch, {}, "unexpected instance kind '" + std::string(kind_of(*inst.object)) + "'");
}

std::string param_string(const Instance& inst, const char* field) {
  if (!inst.param.contains(field) || !inst.param[field].is_string())
    throw Error(ErrorCode::SchemaError, {}, std::string("instance parameter '") + field + "' missing");
  return inst.param[field].get<std::string>();
}

Outcome verdict(bool ok, json detail) { return {ok ? Status::pass : Status::fail, std::move(detail)}; }

struct Plan {
  std::size_t count = 0;
  std::function<Instance(std::size_t)> instance;
  std::vector<std::string> notes;
  json extra;
};

using Evaluator = Outcome (*)(const Instance&, std::string_view fault);

struct SuiteDef {
  std::string_view id;
  std::vector<std::string> faults;
  std::size_t cap, large_cap;
  Plan (*plan)(const SuiteSpec&);
  Evaluator eval;
};

// ---------------------------------------------------------------------------
// instance streams

template <class T>
Plan plan_over(std::vector<T> items) {
  auto shared = std::make_shared<std::vector<T>>(std::move(items));
  Plan p;
  p.count = shared->size();
  p.instance = [shared](std::size_t i) { return Instance{Object((*shared)[i]), json::object()}; };
  return p;
}

struct Product {
  std::shared_ptr<const std::vector<Qoset>> orders;
  std::shared_ptr<const std::vector<Topology>> tops;
  std::size_t size() const { return orders->size() * tops->size(); }
  OrderedSpace at(std::size_t i) const { return OrderedSpace((*orders)[i / tops->size()], (*tops)[i % tops->size()]); }
};

Product ordered_spaces(std::size_t n, bool semilattice) {
  return {std::make_shared<const std::vector<Qoset>>(semilattice ? enumerate_semilattice_orders(n)
                                                                 : enumerate_partial_orders(n)),
          std::make_shared<const std::vector<Topology>>(enumerate_topologies(n))};
}

Plan plan_product(const SuiteSpec& s, bool semilattice) {
  auto prod = ordered_spaces(s.n, semilattice);
  Plan p;
  p.count = prod.size();
  p.instance = [prod](std::size_t i) { return Instance{Object(prod.at(i)), json::object()}; };
  return p;
}

Plan plan_topologies(const SuiteSpec& s) { return plan_over(enumerate_topologies(s.n)); }

// ---------------------------------------------------------------------------
// evaluators

Outcome eval_roundtrip(const Instance& inst, std::string_view fault) {
  const auto& s = get<Topology>(inst);
  const bool via_relation = topology_of(CQuasiOrder::validate(interior_relation(s))) == s;
  auto spec = specialization(s);
  if (fault == "dual-specialization") spec = spec.dual();
  const bool via_order = alexandroff(spec) == s;
  return verdict(via_relation && via_order, {{"interior-relation", via_relation}, {"specialization", via_order}});
}

Plan plan_lemma_2_1(const SuiteSpec& s) {
  auto tops = std::make_shared<const std::vector<Topology>>(enumerate_topologies(s.n));
  auto prod = ordered_spaces(s.n, false);
  const std::size_t first = 3 * tops->size();
  Plan p;
  p.count = first + 3 * prod.size();
  p.instance = [tops, prod, first](std::size_t i) {
    static constexpr Coselection zs[] = {Coselection::upsilon, Coselection::sigma, Coselection::alpha};
    if (i < first)
      return Instance{Object((*tops)[i / 3]), {{"part", "topology"}, {"coselection", to_string(zs[i % 3])}}};
    i -= first;
    return Instance{Object(prod.at(i / 3)), {{"part", "ordered-space"}, {"coselection", to_string(zs[i % 3])}}};
  };
  p.notes.push_back("ordered-space instances outside the zeta-convex semi-qospaces are vacuous");
  return p;
}

Outcome eval_lemma_2_1(const Instance& inst, std::string_view) {
  const auto z = coselection_from_string(param_string(inst, "coselection"));
  if (param_string(inst, "part") == "topology") {
    const auto& s = get<Topology>(inst);
    const bool ok = upper_space(patch(s, z)) == s;
    return verdict(ok, {{"upper-of-patch", ok}});
  }
  const auto& t = get<OrderedSpace>(inst);
  if (!(is_zeta_convex(t, z) && is_semi_qospace(t))) return {Status::vacuous, {{"applicable", false}}};
  const bool ok = patch(upper_space(t), z) == t;
  return verdict(ok, {{"applicable", true}, {"patch-of-upper", ok}});
}

Outcome bundle_outcome(BundleResult r) {
  for (const auto& g : r.groups)
    for (auto i : g)
      if (r.verdicts[i] != r.verdicts[g.front()]) r.agree = false;
  json verdicts = json::array();
  for (bool v : r.verdicts) verdicts.push_back(v);
  json detail = {{"hypothesis", r.hypothesis}, {"verdicts", verdicts}};
  if (!r.hypothesis) return {Status::vacuous, std::move(detail)};
  return verdict(r.agree, std::move(detail));
}

Outcome eval_thm_4_6(const Instance& inst, std::string_view fault) {
  const auto& t = get<OrderedSpace>(inst);
  auto r = theorem_bundle(t, Bundle::thm_4_6);
  if (fault == "semi-qospace-dropped") r.verdicts[2] = is_strongly_convex(t) && is_core_stable(t);
  return bundle_outcome(std::move(r));
}

Outcome eval_thm_5_3(const Instance& inst, std::string_view fault) {
  const auto& t = get<OrderedSpace>(inst);
  auto r = theorem_bundle(t, Bundle::thm_5_3);
  if (fault == "semi-qospace-dropped")
    r.verdicts[2] = is_zeta_convex(t, Coselection::upsilon) && is_core_stable(t);
  return bundle_outcome(std::move(r));
}

Outcome eval_thm_7_2(const Instance& inst, std::string_view) {
  return bundle_outcome(theorem_bundle(get<OrderedSpace>(inst), Bundle::thm_7_2));
}

Outcome eval_prop_7_4(const Instance& inst, std::string_view) {
  return bundle_outcome(theorem_bundle(get<OrderedSpace>(inst), Bundle::prop_7_4));
}

Plan plan_thm_6_2(const SuiteSpec& s) {
  std::vector<OrderedSpace> lawson;
  for (const auto& q : enumerate_partial_orders(s.n)) lawson.emplace_back(q, upset_topology(q, UpsetKind::lawson));
  auto spaces = std::make_shared<const std::vector<OrderedSpace>>(std::move(lawson));
  const bool pairs = s.n <= enumeration_cap(EnumKind::ordered_space, s.allow_large || s.seed.has_value());
  std::optional<Product> prod;
  if (pairs) prod = ordered_spaces(s.n, false);
  Plan p;
  p.count = spaces->size() + (prod ? prod->size() : 0);
  p.instance = [spaces, prod](std::size_t i) {
    if (i < spaces->size()) return Instance{Object((*spaces)[i]), {{"part", "lawson"}}};
    return Instance{Object(prod->at(i - spaces->size())), {{"part", "ordered-space"}}};
  };
  if (!pairs) p.notes.push_back("ordered-space sweep skipped above its cap; Lawson spaces only");
  return p;
}

Outcome eval_thm_6_2(const Instance& inst, std::string_view) {
  auto r = theorem_bundle(get<OrderedSpace>(inst), Bundle::thm_6_2);
  if (param_string(inst, "part") == "lawson") {
    const bool all = r.hypothesis && std::all_of(r.verdicts.begin(), r.verdicts.end(), [](bool v) { return v; });
    auto out = bundle_outcome(std::move(r));
    out.status = all ? Status::pass : Status::fail;
    return out;
  }
  return bundle_outcome(std::move(r));
}

Outcome eval_prop_3_1(const Instance& inst, std::string_view) {
  const auto p = core_space_profile(get<Topology>(inst));
  json detail = json::object();
  for (std::size_t i = 0; i < p.flags.size(); ++i) detail[std::string(CoreProfile::names[i])] = p.flags[i];
  return verdict(p.all(), std::move(detail));
}

Outcome eval_prop_5_5(const Instance& inst, std::string_view) {
  const auto& s = get<Topology>(inst);
  const auto q = quasi_uniformity(s);
  const bool t = tau(q) == s;
  const bool t_inv = tau_inverse(q) == coselection(specialization(s).dual(), Coselection::upsilon);
  const bool t_star = tau_star(q) == patch(s, Coselection::upsilon).topology;
  return verdict(t && t_inv && t_star, {{"tau", t}, {"tau-inverse", t_inv}, {"tau-star", t_star}});
}

Outcome eval_thm_9_3(const Instance& inst, std::string_view) {
  const auto& s = get<Topology>(inst);
  const auto inv = cardinal_invariants(s);
  const auto classes = specialization(s).class_count();
  const bool ok = inv.all_equal() && inv.c.value == classes && inv.core_basis_conditions_agree;
  return verdict(ok, {{"classes", classes},
                      {"cofinality", inv.c.value},
                      {"weight", inv.w_open.value},
                      {"closed-weight", inv.w_closed.value},
                      {"patch-weight", inv.w_patch.value},
                      {"patch-density", inv.d_patch.value}});
}

Outcome eval_prop_9_1(const Instance& inst, std::string_view) {
  const auto& s = get<Topology>(inst);
  std::size_t disagreements = 0;
  std::optional<PointSet> first;
  for_each_subset(s.carrier(), [&](PointSet b) {
    const auto c = core_basis_conditions(s, b);
    if (std::all_of(c.begin(), c.end(), [&](bool v) { return v == c[0]; })) return;
    ++disagreements;
    if (!first) first = b;
  });
  json detail = {{"subsets", std::size_t{1} << s.size()}, {"disagreements", disagreements}};
  if (first) detail["first"] = set_to_json(*first);
  return verdict(disagreements == 0, std::move(detail));
}

Plan plan_lattice_laws(const SuiteSpec& s) {
  auto p = plan_over(enumerate_lattices(s.n));
  for (const auto* name : {"m3", "n5"}) {
    const auto& l = std::get<Lattice>(fixture(name).object);
    json laws = json::object();
    for (auto law : kAllLatticeLaws) laws[std::string(to_string(law))] = law_to_json(check_law(l, law));
    p.extra["fixtures"][name] = laws;
  }
  return p;
}

Outcome eval_lattice_laws(const Instance& inst, std::string_view) {
  const auto& l = get<Lattice>(inst);
  json laws = json::object();
  std::array<bool, std::size(kAllLatticeLaws)> holds{};
  for (std::size_t i = 0; i < holds.size(); ++i) {
    holds[i] = check_law(l, kAllLatticeLaws[i]).holds;
    laws[std::string(to_string(kAllLatticeLaws[i]))] = holds[i];
  }
  auto law = [&](LatticeLaw w) {
    for (std::size_t i = 0; i < holds.size(); ++i)
      if (kAllLatticeLaws[i] == w) return holds[i];
    return false;
  };
  const bool d = law(LatticeLaw::distributive);
  bool ok = true;
  for (auto w : {LatticeLaw::frame, LatticeLaw::coframe, LatticeLaw::wide_frame, LatticeLaw::wide_coframe,
                 LatticeLaw::completely_distributive})
    ok = ok && law(w) == d;
  ok = ok && law(LatticeLaw::meet_continuous) && law(LatticeLaw::continuous_lattice);
  json detail = {{"laws", laws}};
  if (d) {
    const auto w = min_join_dense(l).weight;
    const auto wd = min_join_dense(l.dual()).weight;
    detail["weight"] = w;
    detail["dual-weight"] = wd;
    ok = ok && w == wd;
  }
  return verdict(ok, std::move(detail));
}

Plan plan_count_crosscheck(const SuiteSpec& s) {
  Plan p;
  p.count = 1;
  const auto n = s.n;
  p.instance = [n](std::size_t) { return Instance{std::nullopt, {{"n", n}}}; };
  return p;
}

Outcome eval_count_crosscheck(const Instance& inst, std::string_view) {
  if (!inst.param.contains("n") || !inst.param["n"].is_number_unsigned())
    throw Error(ErrorCode::SchemaError, {}, "instance parameter 'n' missing");
  const auto n = inst.param["n"].get<std::size_t>();
  const auto qosets = enumerate_qosets(n);
  const auto tops = enumerate_topologies(n);
  const auto posets = enumerate_partial_orders(n).size();
  const auto t0 = enumerate_t0_topologies(n).size();
  std::vector<BinaryRelation> a, b;
  for (const auto& q : qosets) a.push_back(q.relation());
  for (const auto& t : tops) b.push_back(specialization(t).relation());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const bool bijection = a == b;
  const bool ok = qosets.size() == tops.size() && posets == t0 && bijection;
  return verdict(ok, {{"qosets", qosets.size()},
                      {"topologies", tops.size()},
                      {"partial-orders", posets},
                      {"t0-topologies", t0},
                      {"specialization-bijection", bijection}});
}

Plan plan_thm_8_4(const SuiteSpec& s) {
  auto tops = std::make_shared<const std::vector<Topology>>(enumerate_t0_topologies(s.n));
  std::vector<std::pair<RepKind, RepKind>> pairs;
  for (auto a : kAllRepKinds)
    for (auto b : kAllRepKinds)
      if (a != b) pairs.emplace_back(a, b);
  Plan p;
  p.count = tops->size() * pairs.size();
  p.instance = [tops, pairs](std::size_t i) {
    const auto& [a, b] = pairs[i % pairs.size()];
    return Instance{Object((*tops)[i / pairs.size()]), {{"from", to_string(a)}, {"via", to_string(b)}}};
  };
  return p;
}

Outcome eval_thm_8_4(const Instance& inst, std::string_view) {
  const auto& t = get<Topology>(inst);
  const auto from = rep_kind_from_string(param_string(inst, "from"));
  const auto via = rep_kind_from_string(param_string(inst, "via"));
  const auto ra = convert(Representation{RepKind::t0_core_space, Object(t), {}}, from);
  const auto back = convert(convert(ra, via), from);
  const bool ok = representations_isomorphic(back, ra);
  return verdict(ok, {{"isomorphic", ok}});
}

const std::vector<SuiteDef>& suite_table() {
  static const std::vector<SuiteDef> table = {
      {"count-crosscheck", {}, 5, 5, plan_count_crosscheck, eval_count_crosscheck},
      {"lattice-laws", {}, 7, 7, plan_lattice_laws, eval_lattice_laws},
      {"lemma-2.1", {}, 4, 5, plan_lemma_2_1, eval_lemma_2_1},
      {"prop-3.1", {}, 4, 4, plan_topologies, eval_prop_3_1},
      {"prop-5.5", {}, 5, 6, plan_topologies, eval_prop_5_5},
      {"prop-7.4", {}, 4, 5, [](const SuiteSpec& s) { return plan_product(s, true); }, eval_prop_7_4},
      {"prop-9.1", {}, 5, 6, plan_topologies, eval_prop_9_1},
      {"thm-3.3-roundtrip", {"dual-specialization"}, 5, 6, plan_topologies, eval_roundtrip},
      {"thm-4.6", {"semi-qospace-dropped"}, 4, 5, [](const SuiteSpec& s) { return plan_product(s, false); },
       eval_thm_4_6},
      {"thm-5.3", {"semi-qospace-dropped"}, 4, 5, [](const SuiteSpec& s) { return plan_product(s, false); },
       eval_thm_5_3},
      {"thm-6.2", {}, 5, 5, plan_thm_6_2, eval_thm_6_2},
      {"thm-7.2", {}, 4, 5, [](const SuiteSpec& s) { return plan_product(s, true); }, eval_thm_7_2},
      {"thm-8.4", {}, 4, 4, plan_thm_8_4, eval_thm_8_4},
      {"thm-9.3", {}, 5, 6, plan_topologies, eval_thm_9_3},
  };
  return table;
}

const SuiteDef& suite_def(std::string_view id) {
  for (const auto& d : suite_table())
    if (d.id == id) return d;
  throw Error(ErrorCode::UnknownSuite, {}, "unknown suite '" + std::string(id) + "'");
}

const SuiteDef& checked_def(const SuiteSpec& spec) {
  const auto& def = suite_def(spec.suite);
  if (!spec.fault.empty() && std::find(def.faults.begin(), def.faults.end(), spec.fault) == def.faults.end())
    throw Error(ErrorCode::SchemaError, {}, "suite " + spec.suite + " has no fault variant '" + spec.fault + "'");
  if (spec.n == 0) throw Error(ErrorCode::BadCarrier, {0}, "suites need at least one point");
  // seeded runs sample, so they may go up to the large caps
  const auto cap = suite_cap(spec.suite, spec.allow_large || spec.seed.has_value());
  if (spec.n > cap) throw Error(ErrorCode::BoundTooLarge, {spec.n, cap}, spec.suite);
  return def;
}

Outcome safe_eval(const SuiteDef& def, const Instance& inst, std::string_view fault) {
  try {
    return def.eval(inst, fault);
  } catch (const Error& e) {
    return {Status::fail, {{"error", std::string(to_string(e.code()))}, {"message", e.what()}}};
  }
}

std::vector<std::size_t> positions(const SuiteSpec& spec, std::size_t count) {
  std::vector<std::size_t> out;
  if (spec.seed && spec.samples < count) {
    // Floyd's sampling: distinct indices, reported in stream order
    std::mt19937_64 gen(*spec.seed);
    std::set<std::size_t> chosen;
    for (std::size_t j = count - spec.samples; j < count; ++j) {
      const auto t = std::uniform_int_distribution<std::size_t>(0, j)(gen);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    out.assign(chosen.begin(), chosen.end());
  } else {
    out.resize(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = i;
  }
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct Tally {
  std::size_t passed = 0, failed = 0, vacuous = 0;
  std::uint64_t hash = 0;
  std::vector<std::pair<std::size_t, json>> fails;  // ascending, at most kMaxCounterexamples
};

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& d : suite_table()) out.emplace_back(d.id);
  return out;
}

std::vector<std::string> suite_faults(std::string_view suite) { return suite_def(suite).faults; }

std::size_t suite_cap(std::string_view suite, bool allow_large) {
  const auto& d = suite_def(suite);
  return allow_large ? d.large_cap : d.cap;
}

std::size_t suite_instance_count(const SuiteSpec& spec) {
  const auto& def = checked_def(spec);
  const auto count = def.plan(spec).count;
  return spec.seed ? std::min(count, spec.samples) : count;
}

Outcome evaluate_instance(std::string_view suite, const json& instance, std::string_view fault) {
  const auto& def = suite_def(suite);
  return def.eval(instance_from_json(instance), fault);
}

Report run_suite(const SuiteSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const auto& def = checked_def(spec);
  const auto plan = def.plan(spec);
  const auto pos = positions(spec, plan.count);

  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.workers, std::max<std::size_t>(1, pos.size())));
  std::vector<Tally> tallies(workers);
  std::vector<json> verdicts(spec.verbose ? pos.size() : 0);
  auto work = [&](std::size_t w) {
    const std::size_t lo = pos.size() * w / workers, hi = pos.size() * (w + 1) / workers;
    auto& t = tallies[w];
    for (std::size_t k = lo; k < hi; ++k) {
      const auto idx = pos[k];
      auto out = safe_eval(def, plan.instance(idx), spec.fault);
      const auto status = to_string(out.status);
      t.hash += fnv1a(std::to_string(idx) + ":" + std::string(status) + ":" + out.detail.dump());
      if (spec.verbose) verdicts[k] = {{"record", "verdict"}, {"index", idx}, {"status", status}, {"detail", out.detail}};
      switch (out.status) {
        case Status::pass: ++t.passed; break;
        case Status::vacuous: ++t.vacuous; break;
        case Status::fail:
          ++t.failed;
          if (t.fails.size() < kMaxCounterexamples) t.fails.emplace_back(idx, std::move(out.detail));
          break;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }

  Report r;
  r.suite = spec.suite;
  r.n = spec.n;
  r.fault = spec.fault;
  r.seed = spec.seed;
  r.instances = pos.size();
  std::uint64_t hash = 0;
  std::vector<std::pair<std::size_t, json>> fails;
  for (auto& t : tallies) {
    r.passed += t.passed;
    r.failed += t.failed;
    r.vacuous += t.vacuous;
    hash += t.hash;
    for (auto& f : t.fails) fails.push_back(std::move(f));
  }
  std::sort(fails.begin(), fails.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (fails.size() > kMaxCounterexamples) fails.resize(kMaxCounterexamples);
  for (auto& [idx, detail] : fails) r.counterexamples.push_back({idx, instance_to_json(plan.instance(idx)), detail});
  r.verdicts = std::move(verdicts);
  r.extra = plan.extra;
  r.notes = plan.notes;
  if (spec.seed) r.notes.push_back("sampled " + std::to_string(pos.size()) + " of " + std::to_string(plan.count));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  r.determinism_hash = buf;
  r.version = std::string(kToolVersion);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// report records

std::optional<std::size_t> Report::first_counterexample() const {
  if (counterexamples.empty()) return std::nullopt;
  return counterexamples.front().index;
}

json Report::summary(bool with_time) const {
  json j;
  j["record"] = "summary";
  j["suite"] = suite;
  j["n"] = n;
  if (!fault.empty()) j["fault"] = fault;
  if (seed) j["seed"] = *seed;
  j["instances"] = instances;
  j["passed"] = passed;
  j["failed"] = failed;
  j["vacuous"] = vacuous;
  const auto first = first_counterexample();
  j["first_counterexample"] = first ? json(*first) : json(nullptr);
  if (!extra.is_null()) j["extra"] = extra;
  if (!notes.empty()) j["notes"] = notes;
  j["version"] = version;
  j["determinism_hash"] = determinism_hash;
  if (with_time) j["wall_ms"] = wall_ms;
  return j;
}

std::string Report::to_lines(bool with_time) const {
  std::ostringstream out;
  json header = {{"record", "suite"}, {"suite", suite}, {"n", n}, {"version", version}};
  out << header.dump() << '\n';
  for (const auto& v : verdicts) out << v.dump() << '\n';
  for (const auto& c : counterexamples)
    out << json{{"record", "counterexample"}, {"index", c.index}, {"instance", c.instance}, {"detail", c.detail}}.dump()
        << '\n';
  out << summary(with_time).dump() << '\n';
  return out.str();
}

}  // namespace ordertop
