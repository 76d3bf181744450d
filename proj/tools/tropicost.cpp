// Command-line front end: cost analyses, abstractions and the verification
// campaigns, with human-readable output by default and stable JSON behind
// --json (every field except duration_ms is deterministic for fixed inputs).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropicost/analysis.hpp"
#include "tropicost/galois.hpp"
#include "tropicost/harness.hpp"
#include "tropicost/longrun.hpp"
#include "tropicost/partition.hpp"
#include "tropicost/system.hpp"

using nlohmann::json;
using namespace tropicost;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open `" + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// FNV-1a 64 over the raw file bytes; pins inputs inside JSON reports.
std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx",
                static_cast<unsigned long long>(h));
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void warn_all(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

void emit(const json& report, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

int run_cost(const std::string& path, bool as_json, bool longrun) {
  Timer timer;
  std::string bytes = read_file(path);
  ParsedSystem parsed = parse_system(bytes);
  warn_all(parsed.warnings);
  const auto& d = *parsed.system.dioid;

  const char* label = longrun ? "rho" : "gc";
  CostValue v =
      longrun ? long_run_cost(parsed.system) : global_cost(parsed.system);

  json report;
  report["subcommand"] = longrun ? "longrun" : "global";
  report["digests"]["system"] = digest(bytes);
  report["dioid"] = d.name();
  report[label] = d.to_string(v);
  report["warnings"] = parsed.warnings;
  report["duration_ms"] = timer.ms();
  emit(report, as_json, std::string(label) + " = " + d.to_string(v) + "\n");
  return 0;
}

int run_abstract(const std::string& sys_path, const std::string& map_path,
                 bool as_json, bool do_check, bool only_global,
                 bool only_longrun) {
  Timer timer;
  std::string sys_bytes = read_file(sys_path);
  std::string map_bytes = read_file(map_path);
  ParsedSystem parsed = parse_system(sys_bytes);
  warn_all(parsed.warnings);
  const TransitionSystem& p = parsed.system;
  const auto& d = *p.dioid;

  Partition q = parse_partition(map_bytes, p);
  PartitionLift lift = lift_partition(p, q);
  TransitionSystem abs = best_abstract_system(p, lift);

  json report;
  report["subcommand"] = "abstract";
  report["digests"]["system"] = digest(sys_bytes);
  report["digests"]["partition"] = digest(map_bytes);
  report["abstract_system"] = serialize_system(abs);

  std::string text = serialize_system(abs);
  bool failed = false;

  if (do_check) {
    std::string why;
    bool galois_ok = check_galois(lift, &why);
    CorrectnessVerdict verdict = check_correct_abstraction(p, abs, lift);
    report["check"]["galois_laws"] = galois_ok;
    report["check"]["correct_abstraction"] = verdict.ok;
    report["check"]["detail"] = galois_ok ? verdict.detail : why;
    text += "galois laws: " + std::string(galois_ok ? "ok" : "violated") +
            "\ncorrect abstraction: " + (verdict.ok ? "ok" : "violated") +
            "\n";
    if (!verdict.detail.empty()) text += "  " + verdict.detail + "\n";
    failed = failed || !galois_ok || !verdict.ok;
  }

  bool want_global = !only_longrun;
  bool want_longrun = !only_global;
  if (want_global) {
    CostValue c = global_cost(p), a = global_cost(abs);
    bool ok = d.leq(c, a);
    report["costs"]["global"] = {{"concrete", d.to_string(c)},
                                 {"abstract", d.to_string(a)},
                                 {"bound_holds", ok}};
    text += "gc = " + d.to_string(c) + "  gc-abstract = " + d.to_string(a) +
            "  bound " + (ok ? "holds" : "VIOLATED") + "\n";
    failed = failed || !ok;
  }
  if (want_longrun) {
    CostValue c = long_run_cost(p), a = long_run_cost(abs);
    bool ok = d.leq(c, a);
    report["costs"]["longrun"] = {{"concrete", d.to_string(c)},
                                  {"abstract", d.to_string(a)},
                                  {"bound_holds", ok}};
    text += "rho = " + d.to_string(c) + "  rho-abstract = " + d.to_string(a) +
            "  bound " + (ok ? "holds" : "VIOLATED") + "\n";
    failed = failed || !ok;
  }

  report["duration_ms"] = timer.ms();
  emit(report, as_json, text);
  return failed ? 1 : 0;
}

int run_galois(const std::string& source, int n, bool as_json,
               bool show_matrix, bool do_verify) {
  Timer timer;
  json report;
  report["subcommand"] = "galois";

  GaloisLift lift = [&] {
    if (source == "even-intervals") {
      report["lattice"] = "even-intervals";
      report["n"] = n;
      return even_interval_lift(n);
    }
    std::string bytes = read_file(source);
    report["lattice"] = "file";
    report["digests"]["lattice"] = digest(bytes);
    return parse_galois_file(bytes);
  }();

  std::string text;
  std::vector<std::string> rows = render_alpha1(lift);
  report["abstract_elements"] = lift.abstracted.size();
  report["concrete_atoms"] = lift.concrete.atoms().size();
  if (show_matrix) {
    report["alpha1"] = rows;
    size_t width = 0;
    for (size_t r = 0; r < rows.size(); ++r)
      width = std::max(
          width, lift.abstracted.name(lift.abstracted.irreducibles()[r]).size());
    for (size_t r = 0; r < rows.size(); ++r) {
      std::string label =
          lift.abstracted.name(lift.abstracted.irreducibles()[r]);
      label.resize(width, ' ');
      text += label + "  " + rows[r] + "\n";
    }
  }

  bool failed = false;
  if (do_verify) {
    std::string why;
    bool ok = check_residuated_pair(lift, &why);
    report["verify"]["residuated_pair"] = ok;
    report["verify"]["detail"] = why;
    text += "residuated pair: " + std::string(ok ? "ok" : "violated") + "\n";
    if (!ok) text += "  " + why + "\n";
    failed = !ok;
  }

  report["duration_ms"] = timer.ms();
  emit(report, as_json, text);
  return failed ? 1 : 0;
}

json campaign_json(const CampaignReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"skipped", c.skipped},
                      {"advisory", c.advisory}});
  return {{"name", rep.campaign},
          {"checks", checks},
          {"notes", rep.notes},
          {"counterexample", rep.counterexample},
          {"counterexample_check", rep.counterexample_check},
          {"ok", rep.ok()}};
}

std::string campaign_text(const CampaignReport& rep) {
  std::string text = rep.campaign + " campaign:\n";
  for (const auto& c : rep.checks) {
    text += "  " + c.name + ": " + std::to_string(c.passed) + " passed";
    if (c.failed) text += ", " + std::to_string(c.failed) + " FAILED";
    if (c.skipped) text += ", " + std::to_string(c.skipped) + " skipped";
    if (c.advisory) text += " (advisory)";
    text += "\n";
  }
  for (const auto& n : rep.notes) text += "  note: " + n + "\n";
  if (!rep.counterexample.empty()) {
    text += "counterexample (" + rep.counterexample_check + "):\n";
    text += rep.counterexample;
  }
  return text;
}

int run_verify(const std::string& dioid_name, int states, int trials,
               std::uint64_t seed, bool lemmas, bool as_json) {
  Timer timer;
  DioidPtr named = [&] {
    try {
      return make_dioid(dioid_name);
    } catch (const Error&) {
      // Set dioids need a universe; campaigns run over a default one.
      DioidParams p;
      p.universe = {"p", "q", "r", "s"};
      return make_dioid(dioid_name, std::move(p));
    }
  }();
  CampaignOptions opts;
  opts.kind = named->kind();
  opts.params.universe = named->universe();
  opts.params.vec_dim = named->vec_dim();
  opts.params.root_tolerance = named->root_tolerance();
  opts.states = states;
  opts.trials = trials;
  opts.seed = seed;
  opts.lemmas = lemmas;

  CampaignReport partition = partition_campaign(opts);
  CampaignReport linear = linear_campaign(opts);
  CampaignReport oracle = oracle_campaign(opts);
  bool ok = partition.ok() && linear.ok() && oracle.ok();

  json report;
  report["subcommand"] = "verify";
  report["dioid"] = dioid_name;
  report["states"] = states;
  report["trials"] = trials;
  report["seed"] = seed;
  report["campaigns"] = {campaign_json(partition), campaign_json(linear),
                         campaign_json(oracle)};
  report["ok"] = ok;
  report["duration_ms"] = timer.ms();

  std::string text = campaign_text(partition) + campaign_text(linear) +
                     campaign_text(oracle) +
                     (ok ? "all checks passed\n" : "CHECKS FAILED\n");
  emit(report, as_json, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cost-dioid transition system analyses"};
  app.require_subcommand(1);

  std::string sys_path, map_path, galois_source = "even-intervals";
  std::string dioid_name = "maxplus";
  bool as_json = false, do_check = false, only_global = false,
       only_longrun = false, show_matrix = false, do_verify = false,
       lemmas = false;
  int n = 2, states = 4, trials = 100;
  std::uint64_t seed = 1;

  CLI::App* global = app.add_subcommand("global", "global cost of a system");
  global->add_option("file", sys_path, "transition system file")->required();
  global->add_flag("--json", as_json, "machine-readable report");

  CLI::App* longrun =
      app.add_subcommand("longrun", "long-run cost of a system");
  longrun->add_option("file", sys_path, "transition system file")->required();
  longrun->add_flag("--json", as_json, "machine-readable report");

  CLI::App* abstract_cmd = app.add_subcommand(
      "abstract", "best abstraction of a system under a state map");
  abstract_cmd->add_option("file", sys_path, "transition system file")
      ->required();
  abstract_cmd->add_option("--partition", map_path, "state map file")
      ->required();
  abstract_cmd->add_flag("--check", do_check,
                         "verify the Galois laws and the correctness "
                         "conditions");
  abstract_cmd->add_flag("--global", only_global, "report global cost only");
  abstract_cmd->add_flag("--longrun", only_longrun,
                         "report long-run cost only");
  abstract_cmd->add_flag("--json", as_json, "machine-readable report");

  CLI::App* galois_cmd = app.add_subcommand(
      "galois", "lift a lattice Galois connection to linear maps");
  galois_cmd->add_option("lattice", galois_source,
                         "`even-intervals` or a lattice file");
  galois_cmd->add_option("--n", n, "even-interval bound (even, positive)");
  galois_cmd->add_flag("--show-matrix", show_matrix,
                       "print the abstraction matrix");
  galois_cmd->add_flag("--verify", do_verify,
                       "check the residuation laws exhaustively");
  galois_cmd->add_flag("--json", as_json, "machine-readable report");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "randomized theorem checking against brute-force oracles");
  verify_cmd->add_option("--dioid", dioid_name, "cost dioid name");
  verify_cmd->add_option("--states", states, "states per random system");
  verify_cmd->add_option("--trials", trials, "trials per campaign");
  verify_cmd->add_option("--seed", seed, "master seed");
  verify_cmd->add_flag("--lemmas", lemmas, "include the per-lemma checks");
  verify_cmd->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (global->parsed()) return run_cost(sys_path, as_json, false);
    if (longrun->parsed()) return run_cost(sys_path, as_json, true);
    if (abstract_cmd->parsed()) {
      if (only_global && only_longrun)
        throw Error("--global and --longrun are mutually exclusive");
      return run_abstract(sys_path, map_path, as_json, do_check, only_global,
                          only_longrun);
    }
    if (galois_cmd->parsed())
      return run_galois(galois_source, n, as_json, show_matrix, do_verify);
    if (verify_cmd->parsed())
      return run_verify(dioid_name, states, trials, seed, lemmas, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
