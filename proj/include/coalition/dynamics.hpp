#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coalition/costs.hpp"
#include "coalition/enumerate.hpp"

namespace coalition {

enum class MoveKind { Jump, Swap };

/// One improving move. For a jump the mover changes slot unilaterally; for a
/// swap the mover and partner exchange slots and both strictly improve.
struct Move {
  MoveKind kind = MoveKind::Jump;
  int mover = 0;
  std::optional<int> partner;
  int source_slot = 0;
  int target_slot = 0;
  CostValue mover_before, mover_after;
  CostValue partner_before, partner_after;  // meaningful for swaps only
};

inline CoalitionStructure apply_move(const CoalitionStructure& s, const Move& m) {
  CoalitionStructure next = s;
  next.slot[static_cast<std::size_t>(m.mover)] = m.target_slot;
  if (m.partner) next.slot[static_cast<std::size_t>(*m.partner)] = m.source_slot;
  return next;
}

/// All improving jumps of a structure in (agent asc, slot asc) order.
/// Empty exactly when the structure is jump stable.
inline std::vector<Move> improving_jumps(const CoalitionStructure& s, const GameInstance& g) {
  std::vector<Move> moves;
  for (int agent = 0; agent < g.num_agents(); ++agent) {
    CostValue current = agent_cost(agent, s, g);
    for (int target = 0; target < g.num_slots; ++target) {
      if (target == s.slot_of(agent)) continue;
      CostValue after = hypothetical_cost(agent, target, s, g);
      if (after < current) {
        Move m;
        m.kind = MoveKind::Jump;
        m.mover = agent;
        m.source_slot = s.slot_of(agent);
        m.target_slot = target;
        m.mover_before = current;
        m.mover_after = after;
        moves.push_back(std::move(m));
      }
    }
  }
  return moves;
}

inline bool has_improving_jump(const CoalitionStructure& s, const GameInstance& g) {
  for (int agent = 0; agent < g.num_agents(); ++agent) {
    CostValue current = agent_cost(agent, s, g);
    for (int target = 0; target < g.num_slots; ++target) {
      if (target == s.slot_of(agent)) continue;
      if (hypothetical_cost(agent, target, s, g) < current) return true;
    }
  }
  return false;
}

namespace detail {

/// Costs of both participants after i and j exchange slots.
inline std::pair<CostValue, CostValue> swap_costs_after(int i, int j, const CoalitionStructure& s,
                                                        const GameInstance& g) {
  CoalitionStructure after = s;
  after.slot[static_cast<std::size_t>(i)] = s.slot_of(j);
  after.slot[static_cast<std::size_t>(j)] = s.slot_of(i);
  return {agent_cost(i, after, g), agent_cost(j, after, g)};
}

}  // namespace detail

/// All improving swaps (unordered agent pairs in different slots where both
/// strictly improve), ordered by (min index, max index).
inline std::vector<Move> improving_swaps(const CoalitionStructure& s, const GameInstance& g) {
  std::vector<Move> moves;
  std::vector<CostValue> current(static_cast<std::size_t>(g.num_agents()));
  for (int agent = 0; agent < g.num_agents(); ++agent) current[static_cast<std::size_t>(agent)] = agent_cost(agent, s, g);
  for (int i = 0; i < g.num_agents(); ++i) {
    for (int j = i + 1; j < g.num_agents(); ++j) {
      if (s.slot_of(i) == s.slot_of(j)) continue;
      auto [cost_i, cost_j] = detail::swap_costs_after(i, j, s, g);
      if (cost_i < current[static_cast<std::size_t>(i)] && cost_j < current[static_cast<std::size_t>(j)]) {
        Move m;
        m.kind = MoveKind::Swap;
        m.mover = i;
        m.partner = j;
        m.source_slot = s.slot_of(i);
        m.target_slot = s.slot_of(j);
        m.mover_before = current[static_cast<std::size_t>(i)];
        m.mover_after = cost_i;
        m.partner_before = current[static_cast<std::size_t>(j)];
        m.partner_after = cost_j;
        moves.push_back(std::move(m));
      }
    }
  }
  return moves;
}

inline bool has_improving_swap(const CoalitionStructure& s, const GameInstance& g) {
  for (int i = 0; i < g.num_agents(); ++i) {
    CostValue cost_i_now = agent_cost(i, s, g);
    for (int j = i + 1; j < g.num_agents(); ++j) {
      if (s.slot_of(i) == s.slot_of(j)) continue;
      auto [cost_i, cost_j] = detail::swap_costs_after(i, j, s, g);
      if (cost_i < cost_i_now && cost_j < agent_cost(j, s, g)) return true;
    }
  }
  return false;
}

inline std::vector<Move> improving_moves(const CoalitionStructure& s, const GameInstance& g) {
  return g.is_swap_game() ? improving_swaps(s, g) : improving_jumps(s, g);
}

enum class PolicyKind { FirstImproving, BestResponse, Scripted };

/// One scripted step: a jump (`target_slot`) or a swap (`partner`).
struct ScriptedMove {
  int agent = 0;
  std::optional<int> target_slot;
  std::optional<int> partner;
};

struct DynamicsPolicy {
  PolicyKind kind = PolicyKind::FirstImproving;
  long max_steps = 10000;
  std::vector<ScriptedMove> script;

  static DynamicsPolicy first_improving(long steps = 10000) { return {PolicyKind::FirstImproving, steps, {}}; }
  static DynamicsPolicy best_response(long steps = 10000) { return {PolicyKind::BestResponse, steps, {}}; }
  static DynamicsPolicy scripted(std::vector<ScriptedMove> moves) {
    return {PolicyKind::Scripted, static_cast<long>(moves.size()), std::move(moves)};
  }
};

enum class Verdict { Converged, CycleDetected, StepLimit };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Converged: return "CONVERGED";
    case Verdict::CycleDetected: return "CYCLE_DETECTED";
    case Verdict::StepLimit: return "STEP_LIMIT";
  }
  return "?";
}

struct DynamicsOutcome {
  CoalitionStructure terminal;
  std::vector<Move> trace;
  Verdict verdict = Verdict::Converged;
  long cycle_start = -1;  // index of the first visit of the repeated state
};

namespace detail {

/// Best response of the lowest-index agent that has an improving move.
/// Ties broken by lowest target slot, then lowest partner index.
inline std::optional<Move> best_response_move(const CoalitionStructure& s, const GameInstance& g) {
  std::vector<Move> all = improving_moves(s, g);
  if (all.empty()) return std::nullopt;
  int agent = all.front().mover;  // lists are ordered by mover already
  std::optional<Move> best;
  for (const Move& m : all) {
    if (m.mover != agent) break;
    if (!best || m.mover_after < best->mover_after) best = m;
  }
  return best;
}

inline Move realize_scripted(const ScriptedMove& sm, const CoalitionStructure& s,
                             const GameInstance& g, long step) {
  const std::string where = "scripted move #" + std::to_string(step + 1);
  if (sm.agent < 0 || sm.agent >= g.num_agents()) {
    throw GameError(Errc::InvalidInput, where + ": agent out of range");
  }
  Move m;
  m.mover = sm.agent;
  m.source_slot = s.slot_of(sm.agent);
  m.mover_before = agent_cost(sm.agent, s, g);
  if (sm.partner) {
    if (g.is_swap_game() == false) {
      throw GameError(Errc::InvalidInput, where + ": swap move in a jump game");
    }
    if (*sm.partner < 0 || *sm.partner >= g.num_agents() || *sm.partner == sm.agent ||
        s.slot_of(*sm.partner) == s.slot_of(sm.agent)) {
      throw GameError(Errc::InvalidInput, where + ": invalid swap partner");
    }
    m.kind = MoveKind::Swap;
    m.partner = *sm.partner;
    m.target_slot = s.slot_of(*sm.partner);
    m.partner_before = agent_cost(*sm.partner, s, g);
    auto [after_mover, after_partner] = swap_costs_after(sm.agent, *sm.partner, s, g);
    m.mover_after = after_mover;
    m.partner_after = after_partner;
    if (!(m.mover_after < m.mover_before) || !(m.partner_after < m.partner_before)) {
      throw GameError(Errc::ScriptedMoveNotImproving, where + ": swap does not strictly improve both agents");
    }
  } else {
    if (!sm.target_slot) throw GameError(Errc::InvalidInput, where + ": missing jump target");
    if (g.is_swap_game()) throw GameError(Errc::InvalidInput, where + ": jump move in a swap game");
    if (*sm.target_slot < 0 || *sm.target_slot >= g.num_slots || *sm.target_slot == m.source_slot) {
      throw GameError(Errc::InvalidInput, where + ": invalid jump target");
    }
    m.kind = MoveKind::Jump;
    m.target_slot = *sm.target_slot;
    m.mover_after = hypothetical_cost(sm.agent, *sm.target_slot, s, g);
    if (!(m.mover_after < m.mover_before)) {
      throw GameError(Errc::ScriptedMoveNotImproving,
                      where + ": cost " + m.mover_before.str() + " -> " + m.mover_after.str());
    }
  }
  return m;
}

}  // namespace detail

/// Runs improving-response dynamics from s0 under the given policy, with
/// revisit detection on canonical keys. Scripted moves are replayed exactly
/// and must each be improving.
inline DynamicsOutcome run_dynamics(const CoalitionStructure& s0, const GameInstance& g,
                                    const DynamicsPolicy& policy) {
  require_valid(s0, g);
  DynamicsOutcome out;
  out.terminal = s0;
  std::unordered_map<std::string, long> visited;
  visited.emplace(canonical_key(s0, g), 0);

  for (long step = 0;; ++step) {
    if (policy.kind == PolicyKind::Scripted) {
      if (step >= static_cast<long>(policy.script.size())) {
        out.verdict = improving_moves(out.terminal, g).empty() ? Verdict::Converged : Verdict::StepLimit;
        return out;
      }
    } else if (step >= policy.max_steps) {
      out.verdict = Verdict::StepLimit;
      return out;
    }

    std::optional<Move> move;
    switch (policy.kind) {
      case PolicyKind::FirstImproving: {
        std::vector<Move> all = improving_moves(out.terminal, g);
        if (!all.empty()) move = all.front();
        break;
      }
      case PolicyKind::BestResponse:
        move = detail::best_response_move(out.terminal, g);
        break;
      case PolicyKind::Scripted:
        move = detail::realize_scripted(policy.script[static_cast<std::size_t>(step)], out.terminal, g, step);
        break;
    }
    if (!move) {
      out.verdict = Verdict::Converged;
      return out;
    }
    out.terminal = apply_move(out.terminal, *move);
    out.trace.push_back(std::move(*move));
    auto [it, inserted] = visited.emplace(canonical_key(out.terminal, g), step + 1);
    if (!inserted) {
      out.verdict = Verdict::CycleDetected;
      out.cycle_start = it->second;
      return out;
    }
  }
}

enum class PotentialKind { SocialCost, MaxJumpLex };

/// Potential of a structure. SocialCost holds the social cost; MaxJumpLex is
/// the pair (number of nonempty slots, non-increasingly sorted cost vector)
/// compared lexicographically, with the slot count fixed to 0 under HIS and
/// isolated agents contributing 0 to the vector under UIS.
struct PotentialValue {
  PotentialKind kind = PotentialKind::SocialCost;
  CostValue social;
  long nonempty_count = 0;
  std::vector<Rational> sorted_costs;  // non-increasing

  friend bool operator<(const PotentialValue& a, const PotentialValue& b) {
    if (a.kind != b.kind) throw GameError(Errc::KindModelMismatch, "comparing potentials of different kinds");
    if (a.kind == PotentialKind::SocialCost) return a.social < b.social;
    if (a.nonempty_count != b.nonempty_count) return a.nonempty_count < b.nonempty_count;
    return a.sorted_costs < b.sorted_costs;
  }
  friend bool operator==(const PotentialValue& a, const PotentialValue& b) {
    if (a.kind != b.kind) throw GameError(Errc::KindModelMismatch, "comparing potentials of different kinds");
    if (a.kind == PotentialKind::SocialCost) return a.social == b.social;
    return a.nonempty_count == b.nonempty_count && a.sorted_costs == b.sorted_costs;
  }
};

inline PotentialValue potential(const CoalitionStructure& s, const GameInstance& g,
                                PotentialKind kind) {
  PotentialValue p;
  p.kind = kind;
  if (kind == PotentialKind::SocialCost) {
    p.social = social_cost(s, g);
    return p;
  }
  if (g.cost_model.variant != CostVariant::Maximum) {
    throw GameError(Errc::KindModelMismatch, "lexicographic jump potential requires the maximum cost model");
  }
  auto groups = slot_members(s, g.num_slots);
  for (const auto& group : groups) {
    if (group.empty()) continue;
    ++p.nonempty_count;
    for (int agent : group) {
      if (group.size() == 1) {
        p.sorted_costs.emplace_back(0);  // isolated agents enter the vector as 0
      } else {
        Rational worst(0);
        for (int other : group) {
          if (other == agent) continue;
          Rational d = distance(agent, other, g);
          if (d > worst) worst = d;
        }
        p.sorted_costs.push_back(std::move(worst));
      }
    }
  }
  std::sort(p.sorted_costs.begin(), p.sorted_costs.end(), std::greater<>());
  if (g.isolation == IsolationMode::Happy) p.nonempty_count = 0;
  return p;
}

struct FipResult {
  bool holds = true;
  std::vector<std::string> cycle;  // canonical keys along a directed cycle, if found
  long states_explored = 0;
};

inline long default_state_cap() { return 200000; }

/// Builds the directed graph of all structures and all improving moves and
/// searches it for a directed cycle.
inline FipResult verify_fip(const GameInstance& g, long state_cap = default_state_cap()) {
  BigInt space = g.is_swap_game() ? count_sized_assignments(*g.fixed_sizes)
                                  : count_partitions(g.num_agents(), g.num_slots);
  if (space > state_cap) {
    throw GameError(Errc::StateSpaceTooLarge,
                    "state space " + space.str() + " exceeds cap " + std::to_string(state_cap));
  }

  std::vector<CoalitionStructure> states;
  std::unordered_map<std::string, int> index_of;
  auto add_state = [&](const std::vector<int>& slots) {
    CoalitionStructure s{slots};
    std::string key = canonical_key(s, g);
    if (index_of.emplace(std::move(key), static_cast<int>(states.size())).second) {
      states.push_back(std::move(s));
    }
  };
  if (g.is_swap_game()) {
    for_each_sized_assignment(*g.fixed_sizes, [&](const std::vector<int>& slots) { add_state(slots); });
  } else {
    for_each_partition(g.num_agents(), g.num_slots, [&](const std::vector<int>& rgs, int) { add_state(rgs); });
  }

  FipResult result;
  result.states_explored = static_cast<long>(states.size());

  std::vector<std::vector<int>> successors(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const Move& m : improving_moves(states[i], g)) {
      CoalitionStructure next = apply_move(states[i], m);
      successors[i].push_back(index_of.at(canonical_key(next, g)));
    }
  }

  // iterative DFS, colors: 0 unvisited, 1 on stack, 2 done
  std::vector<int> color(states.size(), 0);
  std::vector<int> parent(states.size(), -1);
  for (std::size_t root = 0; root < states.size(); ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [node, edge] = stack.back();
      if (edge < successors[static_cast<std::size_t>(node)].size()) {
        int next = successors[static_cast<std::size_t>(node)][edge++];
        if (color[static_cast<std::size_t>(next)] == 0) {
          color[static_cast<std::size_t>(next)] = 1;
          parent[static_cast<std::size_t>(next)] = node;
          stack.emplace_back(next, 0);
        } else if (color[static_cast<std::size_t>(next)] == 1) {
          // directed cycle: walk ancestors from node back to next
          result.holds = false;
          std::vector<int> chain{next};
          for (int walk = node; walk != next; walk = parent[static_cast<std::size_t>(walk)]) {
            chain.push_back(walk);
          }
          std::reverse(chain.begin() + 1, chain.end());
          for (int id : chain) result.cycle.push_back(canonical_key(states[static_cast<std::size_t>(id)], g));
          return result;
        }
      } else {
        color[static_cast<std::size_t>(node)] = 2;
        stack.pop_back();
      }
    }
  }
  return result;
}

}  // namespace coalition
