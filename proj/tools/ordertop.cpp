// ordertop: batch front end over the library. Exit codes: 0 pass or exhausted,
// 1 counterexample or failed check, 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordertop/codec.hpp"
#include "ordertop/cord.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/labcli.hpp"
#include "ordertop/latid.hpp"
#include "ordertop/morphcat.hpp"

using namespace ordertop;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, {}, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, {}, "cannot write " + path);
  out << text << '\n';
}

// raw payloads of based kinds get the canonical finite basis
Representation as_representation(const json& j, RepKind from) {
  if (is_representation_record(j)) {
    auto r = representation_from_json(j);
    if (r.kind != from)
      throw Error(ErrorCode::InvalidSource, {}, "record holds " + std::string(to_string(r.kind)) + ", --from says " +
                                                    std::string(to_string(from)));
    return r;
  }
  Representation r{from, from_json(j), {}};
  switch (from) {
    case RepKind::based_domain: r.basis = std::get<Qoset>(r.payload).carrier(); break;
    case RepKind::core_based_sober_space: r.basis = minimal_core_basis(std::get<Topology>(r.payload)); break;
    case RepKind::based_supercontinuous_lattice: r.basis = coprimes(std::get<Lattice>(r.payload)); break;
    default: break;
  }
  return r;
}

int report_error(const Error& e) {
  json j = {{"error", to_string(e.code())}, {"witness", e.witness()}, {"message", e.what()}};
  std::cerr << j.dump() << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ordered spaces, topologies and lattices: checks, derivations, sweeps and hunts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string in_path = "-", out_path, tag, op, kind_name, suite, from_name, to_name, fault, refute;
  std::string assume_list;
  std::size_t n = 3, workers = 1, samples = 1000;
  std::optional<std::uint64_t> seed;
  bool verbose = false, allow_large = false, no_time = false;

  auto* check = app.add_subcommand("check", "Evaluate a registered predicate on a record");
  check->add_option("--class", tag, "Predicate tag")->required();
  check->add_option("--in", in_path, "Input record file, - for stdin");

  auto* derive_cmd = app.add_subcommand("derive", "Derived structure of a record");
  derive_cmd
      ->add_option("--op", op,
                   "scott|lawson|patch:upsilon|patch:sigma|patch:alpha|upper|lower|cocompact|interior-relation|"
                   "completion|quasi-uniformity")
      ->required();
  derive_cmd->add_option("--in", in_path, "Input record file, - for stdin");
  derive_cmd->add_option("--out", out_path, "Output file (stdout when absent)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream all labelled instances of a kind");
  enumerate_cmd->add_option("--kind", kind_name, "qoset|partial-order|topology|t0-topology|ordered-space|lattice|"
                                                 "semilattice-ordered-space")
      ->required();
  enumerate_cmd->add_option("--n", n, "Points (elements for lattices)")->required();
  enumerate_cmd->add_flag("--allow-large", allow_large, "Lift the default size cap");

  auto* verify = app.add_subcommand("verify", "Run a theorem suite and print its report");
  verify->add_option("--suite", suite, "Suite id")->required();
  verify->add_option("--n", n, "Size bound")->required();
  verify->add_option("--workers", workers, "Worker threads");
  verify->add_flag("--verbose", verbose, "One verdict record per instance");
  verify->add_option("--seed", seed, "Sample the stream with this seed");
  verify->add_option("--samples", samples, "Instances drawn when sampling");
  verify->add_flag("--allow-large", allow_large, "Exhaustive sweep above the default cap");
  verify->add_option("--fault", fault, "Deliberately broken predicate variant");
  verify->add_flag("--no-time", no_time, "Omit the wall-time field");

  auto* hunt_cmd = app.add_subcommand("hunt", "First instance meeting the assumptions and failing the refuted tag");
  hunt_cmd->add_option("--assume", assume_list, "Comma-separated predicate tags");
  hunt_cmd->add_option("--refute", refute, "Predicate tag")->required();
  hunt_cmd->add_option("--n", n, "Largest size searched")->required();
  hunt_cmd->add_option("--kind", kind_name, "Enumerated kind (default ordered-space)");
  hunt_cmd->add_flag("--allow-large", allow_large, "Lift the default size cap");

  auto* inv = app.add_subcommand("invariants", "All applicable profiles of a record");
  inv->add_option("--in", in_path, "Input record file, - for stdin");

  auto* convert_cmd = app.add_subcommand("convert", "Convert between the six representations");
  convert_cmd->add_option("--from", from_name, "Source representation kind")->required();
  convert_cmd->add_option("--to", to_name, "Target representation kind")->required();
  convert_cmd->add_option("--in", in_path, "Representation record or raw payload record");

  auto* list = app.add_subcommand("list", "List suites, predicate tags or fixtures");
  std::string what = "suites";
  list->add_option("what", what, "suites|predicates|fixtures");

  auto* fixture_cmd = app.add_subcommand("fixture", "Print a named fixture record");
  std::string fixture_name;
  fixture_cmd->add_option("name", fixture_name, "Fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const auto obj = decode(read_input(in_path));
      const bool holds = evaluate_predicate(tag, obj);
      std::cout << json{{"class", tag}, {"holds", holds}}.dump() << '\n';
      return holds ? 0 : 1;
    }
    if (*derive_cmd) {
      write_output(out_path, derive(op, decode(read_input(in_path))).dump());
      return 0;
    }
    if (*enumerate_cmd) {
      for (const auto& obj : enumerate(enum_kind_from_string(kind_name), n, allow_large)) std::cout << encode(obj) << '\n';
      return 0;
    }
    if (*verify) {
      SuiteSpec spec{suite, n, seed, samples, workers, verbose, allow_large, fault};
      if (allow_large && !seed) std::cerr << "instances to evaluate: " << suite_instance_count(spec) << '\n';
      const auto report = run_suite(spec);
      std::cout << report.to_lines(!no_time);
      return report.ok() ? 0 : 1;
    }
    if (*hunt_cmd) {
      HypothesisSpec h;
      std::stringstream ss(assume_list);
      for (std::string t; std::getline(ss, t, ',');)
        if (!t.empty()) h.assume.push_back(t);
      h.refute = refute;
      h.n = n;
      h.allow_large = allow_large;
      if (!kind_name.empty()) h.kind = enum_kind_from_string(kind_name);
      const auto r = hunt(h);
      std::cout << r.to_json(h).dump() << '\n';
      return r.found ? 1 : 0;
    }
    if (*inv) {
      std::cout << invariants(decode(read_input(in_path))).dump() << '\n';
      return 0;
    }
    if (*convert_cmd) {
      const auto from = rep_kind_from_string(from_name);
      const auto to = rep_kind_from_string(to_name);
      const auto src = as_representation(parse_json(read_input(in_path)), from);
      std::cout << to_json(convert(src, to)).dump() << '\n';
      return 0;
    }
    if (*list) {
      if (what == "suites") {
        for (const auto& id : suite_ids()) std::cout << id << '\n';
      } else if (what == "predicates") {
        for (const auto& p : predicate_registry())
          std::cout << p.tag << '\t' << to_string(p.domain) << '\t' << p.summary << '\n';
      } else if (what == "fixtures") {
        for (const auto& f : fixtures()) std::cout << f.name << '\t' << f.note << '\n';
      } else {
        std::cerr << "unknown list '" << what << "'\n";
        return 2;
      }
      return 0;
    }
    if (*fixture_cmd) {
      std::cout << fixture(fixture_name).to_json().dump() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::bad_variant_access&) {
    std::cerr << json{{"error", "KindMismatch"}, {"message", "payload kind does not match --from"}}.dump() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "SchemaError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 2;
}
