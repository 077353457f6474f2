#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coalition/paper_suite.hpp"

namespace coalition {

using nlohmann::json;

/// Parsed instance file: the validated game plus the optional initial
/// assignment, carried over to the sorted agent order.
struct LoadedInstance {
  GameInstance game;
  std::optional<CoalitionStructure> initial;
};

namespace io_detail {

inline Rational rational_from_json(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw GameError(Errc::InvalidInput,
                  std::string(what) + " must be a rational string or an integer");
}

inline std::vector<int> assignment_from_json(const json& j, int n, int k, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw GameError(Errc::InvalidInput, std::string(what) + " must list one slot per agent");
  }
  std::vector<int> slots;
  slots.reserve(j.size());
  for (const json& e : j) {
    if (!e.is_number_integer()) throw GameError(Errc::InvalidInput, "slot indices must be integers");
    int slot = e.get<int>();
    if (slot < 1 || slot > k) {
      throw GameError(Errc::InvalidStructure,
                      "slot " + std::to_string(slot) + " outside 1.." + std::to_string(k));
    }
    slots.push_back(slot - 1);  // external format is 1-based
  }
  return slots;
}

}  // namespace io_detail

/// Instance document:
///   {"values": ["1","5/2","1.4", 3], "k": 2, "sizes": [4,5],
///    "cost": "avg"|"max"|"cutoff", "lambda": "4", "isolation": "his"|"uis",
///    "initial": [1,1,2,...]}
/// `values` entries are rational strings (or plain integers); `sizes` makes
/// the instance a swap game; `initial` is a 1-based assignment in the order
/// the values are written.
inline LoadedInstance parse_instance(const json& doc) {
  if (!doc.is_object()) throw GameError(Errc::InvalidInput, "instance document must be an object");
  RawInstance raw;
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw GameError(Errc::InvalidInput, "instance needs a \"values\" array");
  }
  for (const json& v : doc["values"]) raw.values.push_back(io_detail::rational_from_json(v, "value"));
  if (!doc.contains("k") || !doc["k"].is_number_integer()) {
    throw GameError(Errc::InvalidInput, "instance needs an integer \"k\"");
  }
  raw.num_slots = doc["k"].get<int>();
  if (doc.contains("sizes") && !doc["sizes"].is_null()) {
    if (!doc["sizes"].is_array()) throw GameError(Errc::InvalidInput, "\"sizes\" must be an array");
    std::vector<int> sizes;
    for (const json& s : doc["sizes"]) {
      if (!s.is_number_integer()) throw GameError(Errc::InvalidInput, "sizes must be integers");
      sizes.push_back(s.get<int>());
    }
    raw.fixed_sizes = std::move(sizes);
  }
  std::string cost = doc.value("cost", "avg");
  if (cost == "avg") {
    raw.cost_model = CostModel::average();
  } else if (cost == "max") {
    raw.cost_model = CostModel::maximum();
  } else if (cost == "cutoff") {
    if (!doc.contains("lambda")) {
      throw GameError(Errc::InvalidInput, "cutoff instances need a \"lambda\"");
    }
    raw.cost_model = CostModel::cutoff(io_detail::rational_from_json(doc["lambda"], "lambda"));
  } else {
    throw GameError(Errc::InvalidInput, "unknown cost model: " + cost);
  }
  std::string isolation = doc.value("isolation", "his");
  if (isolation == "his") {
    raw.isolation = IsolationMode::Happy;
  } else if (isolation == "uis") {
    raw.isolation = IsolationMode::Unhappy;
  } else {
    throw GameError(Errc::InvalidInput, "isolation must be \"his\" or \"uis\"");
  }

  LoadedInstance loaded;
  loaded.game = validate_instance(raw);
  if (doc.contains("initial") && !doc["initial"].is_null()) {
    std::vector<int> given = io_detail::assignment_from_json(
        doc["initial"], loaded.game.num_agents(), loaded.game.num_slots, "\"initial\"");
    std::vector<int> to_sorted = sorting_permutation(raw.values);
    CoalitionStructure s;
    s.slot.resize(given.size());
    for (std::size_t i = 0; i < given.size(); ++i) {
      s.slot[static_cast<std::size_t>(to_sorted[i])] = given[i];
    }
    require_valid(s, loaded.game);
    loaded.initial = std::move(s);
  }
  return loaded;
}

inline json instance_to_json(const GameInstance& g) {
  json doc;
  json values = json::array();
  for (const Rational& v : g.values) values.push_back(format_rational(v));
  doc["values"] = std::move(values);
  doc["k"] = g.num_slots;
  if (g.fixed_sizes) doc["sizes"] = *g.fixed_sizes;
  doc["cost"] = cost_variant_name(g.cost_model.variant);
  if (g.cost_model.variant == CostVariant::Cutoff) doc["lambda"] = format_rational(g.cost_model.lambda);
  doc["isolation"] = g.isolation == IsolationMode::Happy ? "his" : "uis";
  return doc;
}

/// Structure document: {"assignment": [1,2,1,...]} with 1-based slots over
/// agents in sorted value order.
inline CoalitionStructure parse_structure(const json& doc, const GameInstance& g) {
  const json& assignment = doc.is_object() && doc.contains("assignment") ? doc["assignment"] : doc;
  CoalitionStructure s{io_detail::assignment_from_json(assignment, g.num_agents(), g.num_slots,
                                                       "\"assignment\"")};
  require_valid(s, g);
  return s;
}

/// Renders a structure in brace notation by agent values, slots ordered by
/// smallest member, e.g. {{1,1,3,3},{2,2,2,2,2}}.
inline std::string braces(const CoalitionStructure& s, const GameInstance& g) {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : canonical_blocks(s, g.num_slots)) {
    if (!first_block) out += ",";
    first_block = false;
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += format_rational(g.value(block[i]));
    }
    out += "}";
  }
  return out + "}";
}

inline json structure_to_json(const CoalitionStructure& s, const GameInstance& g) {
  json doc;
  json assignment = json::array();
  for (int slot : s.slot) assignment.push_back(slot + 1);
  doc["assignment"] = std::move(assignment);
  doc["coalitions"] = braces(s, g);
  return doc;
}

/// Script document: {"moves": [{"agent": 3, "to": 1}, {"agent": 2, "partner": 5}]}
/// with 1-based agents (in sorted order), slots, and partners.
inline std::vector<ScriptedMove> parse_script(const json& doc, const GameInstance& g) {
  const json& moves = doc.is_object() && doc.contains("moves") ? doc["moves"] : doc;
  if (!moves.is_array()) throw GameError(Errc::InvalidInput, "script must be a list of moves");
  std::vector<ScriptedMove> script;
  for (const json& m : moves) {
    ScriptedMove sm;
    if (!m.contains("agent") || !m["agent"].is_number_integer()) {
      throw GameError(Errc::InvalidInput, "script moves need an \"agent\"");
    }
    sm.agent = m["agent"].get<int>() - 1;
    if (sm.agent < 0 || sm.agent >= g.num_agents()) {
      throw GameError(Errc::InvalidInput, "script agent index out of range");
    }
    if (m.contains("to")) {
      int slot = m["to"].get<int>();
      if (slot < 1 || slot > g.num_slots) throw GameError(Errc::InvalidInput, "script target out of range");
      sm.target_slot = slot - 1;
    }
    if (m.contains("partner")) {
      int partner = m["partner"].get<int>();
      if (partner < 1 || partner > g.num_agents()) {
        throw GameError(Errc::InvalidInput, "script partner out of range");
      }
      sm.partner = partner - 1;
    }
    if (!sm.target_slot && !sm.partner) {
      throw GameError(Errc::InvalidInput, "script moves need a \"to\" slot or a \"partner\"");
    }
    script.push_back(sm);
  }
  return script;
}

/// Trace CSV: step, mover, partner, source_slot, target_slot, cost_before,
/// cost_after. Agents and slots 1-based, rationals as "p/q".
inline void write_trace_csv(std::ostream& os, const std::vector<Move>& trace) {
  os << "step,mover,partner,source_slot,target_slot,cost_before,cost_after\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Move& m = trace[i];
    os << i + 1 << ',' << m.mover + 1 << ',';
    if (m.partner) os << *m.partner + 1;
    os << ',' << m.source_slot + 1 << ',' << m.target_slot + 1 << ',' << m.mover_before.str()
       << ',' << m.mover_after.str() << '\n';
  }
}

inline json move_to_json(const Move& m) {
  json j;
  j["kind"] = m.kind == MoveKind::Jump ? "jump" : "swap";
  j["mover"] = m.mover + 1;
  if (m.partner) j["partner"] = *m.partner + 1;
  j["source_slot"] = m.source_slot + 1;
  j["target_slot"] = m.target_slot + 1;
  j["cost_before"] = m.mover_before.str();
  j["cost_after"] = m.mover_after.str();
  if (m.partner) {
    j["partner_cost_before"] = m.partner_before.str();
    j["partner_cost_after"] = m.partner_after.str();
  }
  return j;
}

inline json witness_to_json(const AxiomWitness& w) {
  json j;
  j["condition"] = w.condition;
  json c = json::array(), d = json::array();
  for (const Rational& v : w.coalition_c) c.push_back(format_rational(v));
  for (const Rational& v : w.coalition_d) d.push_back(format_rational(v));
  j["coalition_c"] = std::move(c);
  j["coalition_d"] = std::move(d);
  j["x"] = format_rational(w.agent_x);
  j["y"] = format_rational(w.agent_y);
  j["violated"] = format_rational(w.lhs) + " > " + format_rational(w.rhs) + " expected <=";
  return j;
}

inline json monotonicity_to_json(const MonotonicityReport& r) {
  json j;
  auto axis = [](const AxiomResult& a) {
    json x;
    x["status"] = a.pass ? "PASS" : "FAIL";
    x["checks"] = a.checks;
    if (a.witness) x["witness"] = witness_to_json(*a.witness);
    return x;
  };
  j["axiom_i"] = axis(r.axiom_i);
  j["axiom_ii"] = axis(r.axiom_ii);
  j["axiom_iii"] = axis(r.axiom_iii);
  j["monotone"] = r.all_pass();
  return j;
}

inline json suite_report_to_json(const SuiteReport& report) {
  json j;
  json fixtures = json::array();
  for (const SuiteFixture& f : report.fixtures) {
    json jf;
    jf["id"] = f.id;
    jf["description"] = f.description;
    json checks = json::array();
    for (const SuiteCheck& c : f.checks) {
      checks.push_back({{"assertion", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}});
    }
    jf["checks"] = std::move(checks);
    fixtures.push_back(std::move(jf));
  }
  j["fixtures"] = std::move(fixtures);
  j["total"] = report.total;
  j["failures"] = report.failures;
  return j;
}

inline void write_suite_csv(std::ostream& os, const SuiteReport& report) {
  os << "fixture,assertion,expected,actual,pass\n";
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  for (const SuiteFixture& f : report.fixtures) {
    for (const SuiteCheck& c : f.checks) {
      os << quote(f.id) << ',' << quote(c.name) << ',' << quote(c.expected) << ','
         << quote(c.actual) << ',' << (c.pass ? "true" : "false") << '\n';
    }
  }
}

inline json census_to_json(const EquilibriumCensus& c, const GameInstance& g) {
  json j;
  json eqs = json::array();
  for (const auto& [structure, cost] : c.equilibria) {
    eqs.push_back({{"coalitions", braces(structure, g)}, {"social_cost", cost.str()}});
  }
  j["equilibria"] = std::move(eqs);
  j["equilibrium_count"] = c.equilibria.size();
  j["structures_enumerated"] = c.structures_enumerated;
  if (!c.equilibria.empty()) {
    j["worst_cost"] = c.worst_cost.str();
    j["best_cost"] = c.best_cost.str();
  }
  j["opt_cost"] = format_rational(c.opt_cost);
  return j;
}

inline json optimum_to_json(const OptimumResult& r, const GameInstance& g) {
  json j;
  j["opt_cost"] = format_rational(r.opt_cost);
  j["any_sorted"] = r.any_sorted;
  j["enumerated_count"] = r.enumerated_count;
  json optima = json::array();
  for (const CoalitionStructure& s : r.optima) {
    optima.push_back({{"coalitions", braces(s, g)},
                      {"assignment", structure_to_json(s, g)["assignment"]}});
  }
  j["optima"] = std::move(optima);
  return j;
}

inline json structural_report_to_json(const StructuralReport& r, const GameInstance& g) {
  json j;
  j["opt_cost"] = format_rational(r.opt_cost);
  j["optima_checked"] = r.optima_checked;
  j["all_optima_unsorted"] = r.all_optima_unsorted;
  json v = json::array();
  for (const StructuralViolation& violation : r.violations) {
    v.push_back({{"rule", violation.rule},
                 {"coalitions", braces(violation.structure, g)},
                 {"detail", violation.detail}});
  }
  j["violations"] = std::move(v);
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameError(Errc::InvalidInput, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw GameError(Errc::InvalidInput, "malformed JSON in " + path + ": " + e.what());
  }
  return doc;
}

inline LoadedInstance load_instance_file(const std::string& path) {
  return parse_instance(load_json_file(path));
}

}  // namespace coalition
