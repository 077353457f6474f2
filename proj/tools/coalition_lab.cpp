// coalition-lab: command-line surface over the coalition-formation engine.
// Subcommands: check, dynamics, construct, optimum, analyze, verify-monotone,
// paper-suite. Machine output is JSON (rationals as "p/q" strings) or CSV.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coalition/instance_io.hpp"

namespace {

using namespace coalition;

struct OutputOptions {
  std::string out_path;  // empty: stdout
  std::string format = "json";
};

void emit(const OutputOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) throw GameError(Errc::InvalidInput, "cannot write " + opts.out_path);
  out << payload << "\n";
}

void emit_json(const OutputOptions& opts, const json& doc) { emit(opts, doc.dump(2)); }

CoalitionStructure default_start(const GameInstance& g) {
  CoalitionStructure s;
  if (g.is_swap_game()) {
    for (int slot = 0; slot < g.num_slots; ++slot) {
      for (int i = 0; i < (*g.fixed_sizes)[static_cast<std::size_t>(slot)]; ++i) s.slot.push_back(slot);
    }
  } else {
    s.slot.assign(static_cast<std::size_t>(g.num_agents()), 0);
  }
  return s;
}

json check_payload(const GameInstance& g, const CoalitionStructure& s) {
  json payload;
  payload["coalitions"] = braces(s, g);
  payload["assignment"] = structure_to_json(s, g)["assignment"];
  payload["sorted"] = is_sorted(s, g).has_value();
  bool stable = g.is_swap_game() ? is_swap_stable(s, g) : is_jump_stable(s, g);
  payload["stable"] = stable;
  payload["verdict"] = stable ? "stable" : "unstable";
  payload["stability_concept"] = g.is_swap_game() ? "swap" : "jump";
  json costs = json::array();
  for (int agent = 0; agent < g.num_agents(); ++agent) {
    costs.push_back({{"agent", agent + 1},
                     {"value", format_rational(g.value(agent))},
                     {"cost", agent_cost(agent, s, g).str()}});
  }
  payload["agent_costs"] = std::move(costs);
  payload["social_cost"] = social_cost(s, g).str();
  return payload;
}

GameInstance random_probe_instance(std::mt19937_64& rng, int n_min = 4, int n_max = 12) {
  std::uniform_int_distribution<int> n_dist(n_min, n_max);
  int n = n_dist(rng);
  std::set<long long> seen;
  std::uniform_int_distribution<long long> v_dist(0, 4 * n);
  while (static_cast<int>(seen.size()) < n) seen.insert(v_dist(rng));
  RawInstance raw;
  for (long long v : seen) raw.values.emplace_back(v);
  raw.num_slots = 2;
  raw.cost_model = CostModel::average();
  return validate_instance(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coalition-lab: stability, dynamics, and optima of coalition-formation games "
               "with distance-induced costs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags like --format work after the subcommand

  OutputOptions out_opts;
  app.add_option("--out", out_opts.out_path, "write output to a file instead of stdout");
  app.add_option("--format", out_opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  int cap = default_enumeration_cap();
  app.add_option("--cap", cap, "enumeration cap on the number of agents");
  unsigned long long seed = 12345;
  app.add_option("--seed", seed, "seed for random probes");

  std::string instance_path, structure_path, script_path;
  std::string policy = "first";
  long max_steps = 10000;
  bool structural = false;
  long probe_count = 0;

  auto* cmd_check = app.add_subcommand("check", "stability, sortedness, and costs of a structure");
  cmd_check->add_option("instance", instance_path, "instance JSON file")->required();
  cmd_check->add_option("structure", structure_path, "structure JSON file (defaults to the instance's \"initial\")");

  auto* cmd_dynamics = app.add_subcommand("dynamics", "run improving-response dynamics");
  cmd_dynamics->add_option("instance", instance_path)->required();
  cmd_dynamics->add_option("--policy", policy, "move selection policy")
      ->check(CLI::IsMember({"first", "best"}));
  cmd_dynamics->add_option("--max-steps", max_steps, "step budget");
  cmd_dynamics->add_option("--script", script_path, "replay a scripted move list (JSON)");

  auto* cmd_construct = app.add_subcommand("construct", "build a sorted jump equilibrium");
  cmd_construct->add_option("instance", instance_path)->required();

  auto* cmd_optimum = app.add_subcommand("optimum", "brute-force social optimum");
  cmd_optimum->add_option("instance", instance_path);
  cmd_optimum->add_flag("--structural", structural, "also run structural checks on the optima");
  cmd_optimum->add_option("--probe", probe_count,
                          "run structural checks on N random two-slot average instances");

  auto* cmd_analyze = app.add_subcommand("analyze", "equilibrium census with anarchy/stability ratios");
  cmd_analyze->add_option("instance", instance_path)->required();

  std::string monotone_cost = "all";
  std::string lambda_text = "1";
  std::string ground_text = "0,1,2,3,4,5,6";
  int max_coalition_size = 3;
  auto* cmd_monotone = app.add_subcommand("verify-monotone", "check the monotonicity axioms exhaustively");
  cmd_monotone->add_option("--cost", monotone_cost, "cost model")
      ->check(CLI::IsMember({"avg", "max", "cutoff", "all"}));
  cmd_monotone->add_option("--lambda", lambda_text, "cutoff threshold");
  cmd_monotone->add_option("--ground", ground_text, "comma-separated ground values");
  cmd_monotone->add_option("--max-size", max_coalition_size, "largest coalition size");

  auto* cmd_suite = app.add_subcommand("paper-suite", "run every reference fixture");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_check) {
      LoadedInstance loaded = load_instance_file(instance_path);
      std::optional<CoalitionStructure> s = loaded.initial;
      if (!structure_path.empty()) s = parse_structure(load_json_file(structure_path), loaded.game);
      if (!s) throw GameError(Errc::InvalidInput, "no structure: pass a structure file or an \"initial\"");
      emit_json(out_opts, check_payload(loaded.game, *s));
    } else if (*cmd_dynamics) {
      LoadedInstance loaded = load_instance_file(instance_path);
      CoalitionStructure start = loaded.initial.value_or(default_start(loaded.game));
      DynamicsPolicy dyn_policy;
      if (!script_path.empty()) {
        dyn_policy = DynamicsPolicy::scripted(parse_script(load_json_file(script_path), loaded.game));
      } else {
        dyn_policy = policy == "best" ? DynamicsPolicy::best_response(max_steps)
                                      : DynamicsPolicy::first_improving(max_steps);
        dyn_policy.max_steps = max_steps;
      }
      DynamicsOutcome outcome = run_dynamics(start, loaded.game, dyn_policy);
      if (out_opts.format == "csv") {
        std::ostringstream os;
        write_trace_csv(os, outcome.trace);
        os << "# verdict: " << verdict_name(outcome.verdict);
        emit(out_opts, os.str());
      } else {
        json payload;
        payload["verdict"] = verdict_name(outcome.verdict);
        if (outcome.verdict == Verdict::CycleDetected) payload["cycle_start"] = outcome.cycle_start;
        payload["steps"] = outcome.trace.size();
        payload["terminal"] = structure_to_json(outcome.terminal, loaded.game);
        json trace = json::array();
        for (const Move& m : outcome.trace) trace.push_back(move_to_json(m));
        payload["trace"] = std::move(trace);
        emit_json(out_opts, payload);
      }
    } else if (*cmd_construct) {
      LoadedInstance loaded = load_instance_file(instance_path);
      ConstructResult result = construct_sorted_pne(loaded.game);
      json payload;
      payload["structure"] = structure_to_json(result.structure, loaded.game);
      payload["moves"] = result.trace.size();
      payload["move_budget"] = static_cast<long>(loaded.game.num_slots) * loaded.game.num_agents();
      payload["sorted"] = is_sorted(result.structure, loaded.game).has_value();
      payload["stable"] = is_jump_stable(result.structure, loaded.game);
      json trace = json::array();
      for (const Move& m : result.trace) trace.push_back(move_to_json(m));
      payload["trace"] = std::move(trace);
      emit_json(out_opts, payload);
    } else if (*cmd_optimum) {
      if (probe_count > 0) {
        std::mt19937_64 rng(seed);
        json payload;
        long violations = 0, all_unsorted = 0;
        json findings = json::array();
        for (long i = 0; i < probe_count; ++i) {
          GameInstance g = random_probe_instance(rng);
          StructuralReport report = structural_optimum_checks(g, cap);
          violations += static_cast<long>(report.violations.size());
          if (report.all_optima_unsorted) {
            ++all_unsorted;
            findings.push_back(instance_to_json(g));
          }
          for (const StructuralViolation& v : report.violations) {
            json f = structural_report_to_json(report, g);
            f["instance"] = instance_to_json(g);
            findings.push_back(std::move(f));
            break;
          }
        }
        payload["instances"] = probe_count;
        payload["violations"] = violations;
        payload["all_optima_unsorted"] = all_unsorted;
        payload["findings"] = std::move(findings);
        emit_json(out_opts, payload);
      } else {
        if (instance_path.empty()) throw GameError(Errc::InvalidInput, "optimum needs an instance file");
        LoadedInstance loaded = load_instance_file(instance_path);
        OptimumResult result = brute_force_optimum(loaded.game, cap);
        json payload = optimum_to_json(result, loaded.game);
        if (structural) {
          payload["structural"] =
              structural_report_to_json(structural_optimum_checks(loaded.game, cap), loaded.game);
        }
        emit_json(out_opts, payload);
      }
    } else if (*cmd_analyze) {
      LoadedInstance loaded = load_instance_file(instance_path);
      StabilityConcept concep =
          loaded.game.is_swap_game() ? StabilityConcept::Swap : StabilityConcept::Jump;
      EquilibriumCensus c = census(loaded.game, concep, cap);
      json payload = census_to_json(c, loaded.game);
      payload["poa"] = detail::cost_ratio(c.worst_cost, c.opt_cost).str();
      payload["pos"] = detail::cost_ratio(c.best_cost, c.opt_cost).str();
      emit_json(out_opts, payload);
    } else if (*cmd_monotone) {
      std::vector<Rational> ground;
      std::stringstream ss(ground_text);
      std::string token;
      while (std::getline(ss, token, ',')) ground.push_back(parse_rational(token));
      json payload;
      auto run_one = [&](const char* tag, const CostModel& model) {
        payload[tag] = monotonicity_to_json(verify_monotone(model, ground, max_coalition_size));
      };
      if (monotone_cost == "avg" || monotone_cost == "all") run_one("avg", CostModel::average());
      if (monotone_cost == "max" || monotone_cost == "all") run_one("max", CostModel::maximum());
      if (monotone_cost == "cutoff" || monotone_cost == "all") {
        run_one("cutoff", CostModel::cutoff(parse_rational(lambda_text)));
      }
      emit_json(out_opts, payload);
    } else if (*cmd_suite) {
      SuiteReport report = paper_suite();
      if (out_opts.format == "csv") {
        std::ostringstream os;
        write_suite_csv(os, report);
        emit(out_opts, os.str());
      } else {
        emit_json(out_opts, suite_report_to_json(report));
      }
    }
  } catch (const GameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
