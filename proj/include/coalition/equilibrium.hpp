#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalition/dynamics.hpp"

namespace coalition {

/// Witness that a structure is sorted: coalitions renumbered ascending by
/// their values, as contiguous blocks of the sorted agent order. boundaries
/// holds the k-1 cut positions (empty slots become empty trailing blocks);
/// slot_of_block maps each block back to its slot.
struct SortedView {
  std::vector<int> boundaries;
  std::vector<int> slot_of_block;
  int nonempty_blocks = 0;
};

/// A structure is sorted iff no agent's value lies strictly between two
/// values of another slot. Equal values may span slots.
inline std::optional<SortedView> is_sorted(const CoalitionStructure& s, const GameInstance& g) {
  const int k = g.num_slots;
  auto groups = slot_members(s, k);

  std::vector<int> nonempty;
  for (int slot = 0; slot < k; ++slot) {
    if (!groups[static_cast<std::size_t>(slot)].empty()) nonempty.push_back(slot);
  }
  for (int agent = 0; agent < g.num_agents(); ++agent) {
    for (int slot : nonempty) {
      if (slot == s.slot_of(agent)) continue;
      const auto& members = groups[static_cast<std::size_t>(slot)];
      // members ascend by agent index, hence by value
      if (g.value(members.front()) < g.value(agent) && g.value(agent) < g.value(members.back())) {
        return std::nullopt;
      }
    }
  }

  // order slots ascending by value range, ties by first member
  std::sort(nonempty.begin(), nonempty.end(), [&](int a, int b) {
    const auto& ga = groups[static_cast<std::size_t>(a)];
    const auto& gb = groups[static_cast<std::size_t>(b)];
    const Rational& min_a = g.value(ga.front());
    const Rational& min_b = g.value(gb.front());
    if (min_a != min_b) return min_a < min_b;
    const Rational& max_a = g.value(ga.back());
    const Rational& max_b = g.value(gb.back());
    if (max_a != max_b) return max_a < max_b;
    return ga.front() < gb.front();
  });

  SortedView view;
  view.nonempty_blocks = static_cast<int>(nonempty.size());
  int position = 0;
  for (int slot : nonempty) {
    position += static_cast<int>(groups[static_cast<std::size_t>(slot)].size());
    view.slot_of_block.push_back(slot);
    if (static_cast<int>(view.slot_of_block.size()) < k) view.boundaries.push_back(position);
  }
  for (int slot = 0; slot < k; ++slot) {
    if (groups[static_cast<std::size_t>(slot)].empty()) {
      view.slot_of_block.push_back(slot);
      if (static_cast<int>(view.slot_of_block.size()) < k) view.boundaries.push_back(position);
    }
  }
  return view;
}

inline bool is_jump_stable(const CoalitionStructure& s, const GameInstance& g) {
  if (g.is_swap_game()) throw GameError(Errc::PreconditionViolated, "jump stability applies to jump games");
  return !has_improving_jump(s, g);
}

inline bool is_swap_stable(const CoalitionStructure& s, const GameInstance& g) {
  if (!g.is_swap_game()) throw GameError(Errc::PreconditionViolated, "swap stability applies to swap games");
  return !has_improving_swap(s, g);
}

namespace detail {

enum class Direction { Left, Right };

/// Moves of block-extremal agents one block toward `dir` (among nonempty
/// blocks, which are numbered ascending by value) that strictly improve.
inline std::vector<Move> edge_improving_moves(const CoalitionStructure& s, const GameInstance& g,
                                              Direction dir) {
  auto view = is_sorted(s, g);
  if (!view) throw GameError(Errc::NotSorted, "structure is not sorted");
  auto groups = slot_members(s, g.num_slots);

  std::vector<Move> moves;
  const int blocks = view->nonempty_blocks;
  for (int b = 0; b < blocks; ++b) {
    int neighbor = dir == Direction::Left ? b - 1 : b + 1;
    if (neighbor < 0 || neighbor >= blocks) continue;
    int slot = view->slot_of_block[static_cast<std::size_t>(b)];
    const auto& members = groups[static_cast<std::size_t>(slot)];
    int agent = dir == Direction::Left ? members.front() : members.back();
    int target = view->slot_of_block[static_cast<std::size_t>(neighbor)];
    CostValue before = agent_cost(agent, s, g);
    CostValue after = hypothetical_cost(agent, target, s, g);
    if (after < before) {
      Move m;
      m.kind = MoveKind::Jump;
      m.mover = agent;
      m.source_slot = slot;
      m.target_slot = target;
      m.mover_before = before;
      m.mover_after = after;
      moves.push_back(std::move(m));
    }
  }
  return moves;
}

}  // namespace detail

inline std::vector<Move> left_improving_moves(const CoalitionStructure& s, const GameInstance& g) {
  return detail::edge_improving_moves(s, g, detail::Direction::Left);
}

inline std::vector<Move> right_improving_moves(const CoalitionStructure& s, const GameInstance& g) {
  return detail::edge_improving_moves(s, g, detail::Direction::Right);
}

struct ConstructResult {
  CoalitionStructure structure;
  std::vector<Move> trace;
};

/// Constructs a sorted jump equilibrium for an HIS jump game by starting from
/// the right-heavy structure ({v1},...,{v_{k-1}},{v_k..v_n}) and applying
/// left-improving moves until none remains; among simultaneous candidates the
/// one of lowest block index is applied. Takes at most k*n moves and never
/// passes through a structure that admits a right-improving move.
inline ConstructResult construct_sorted_pne(const GameInstance& g) {
  if (g.is_swap_game()) {
    throw GameError(Errc::PreconditionViolated, "the construction applies to jump games");
  }
  if (g.isolation != IsolationMode::Happy) {
    throw GameError(Errc::PreconditionViolated, "the construction requires the happy-in-isolation setting");
  }

  const int n = g.num_agents();
  const int k = g.num_slots;
  ConstructResult result;
  result.structure.slot.resize(static_cast<std::size_t>(n));
  for (int agent = 0; agent < n; ++agent) {
    result.structure.slot[static_cast<std::size_t>(agent)] = std::min(agent, k - 1);
  }

  const long move_budget = static_cast<long>(k) * n;
  for (long step = 0; step <= move_budget; ++step) {
    std::vector<Move> candidates = left_improving_moves(result.structure, g);
    if (candidates.empty()) return result;
    if (step == move_budget) break;
    result.structure = apply_move(result.structure, candidates.front());
    result.trace.push_back(std::move(candidates.front()));
    if (!right_improving_moves(result.structure, g).empty()) {
      throw std::logic_error("construction invariant violated: right-improving move appeared");
    }
  }
  throw std::logic_error("construction exceeded its move budget");
}

/// Cost rule abstraction for the monotonicity axioms: cost of agent `x`
/// evaluated against the multiset `others` of co-member values (self already
/// excluded). An empty set costs 0.
using CostRule = std::function<Rational(const Rational& x, const std::vector<Rational>& others)>;

inline CostRule standard_cost_rule(const CostModel& model) {
  return [model](const Rational& x, const std::vector<Rational>& others) -> Rational {
    if (others.empty()) return Rational(0);
    switch (model.variant) {
      case CostVariant::Average: {
        Rational sum(0);
        for (const Rational& v : others) sum += abs(x - v);
        return sum / static_cast<long long>(others.size());
      }
      case CostVariant::Maximum: {
        Rational worst(0);
        for (const Rational& v : others) {
          Rational d = abs(x - v);
          if (d > worst) worst = d;
        }
        return worst;
      }
      case CostVariant::Cutoff: {
        long long enemies = 0;
        for (const Rational& v : others) {
          if (abs(x - v) > model.lambda) ++enemies;
        }
        return Rational(enemies) / static_cast<long long>(others.size());
      }
    }
    return Rational(0);
  };
}

struct AxiomWitness {
  std::string condition;
  std::vector<Rational> coalition_c;
  std::vector<Rational> coalition_d;
  Rational agent_x;
  Rational agent_y;  // second agent for axiom (i); the pivot member for axiom (iii)
  Rational lhs, rhs;
};

struct AxiomResult {
  bool pass = true;
  std::optional<AxiomWitness> witness;
  long checks = 0;
};

struct MonotonicityReport {
  AxiomResult axiom_i, axiom_ii, axiom_iii;
  bool all_pass() const { return axiom_i.pass && axiom_ii.pass && axiom_iii.pass; }
};

namespace detail {

inline std::vector<std::vector<int>> index_subsets(int ground_size, int max_size) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int from) {
    if (!current.empty()) subsets.push_back(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (int i = from; i < ground_size; ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return subsets;
}

inline std::vector<Rational> values_of(const std::vector<int>& indices,
                                       const std::vector<Rational>& ground) {
  std::vector<Rational> values;
  values.reserve(indices.size());
  for (int i : indices) values.push_back(ground[static_cast<std::size_t>(i)]);
  return values;
}

inline bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? ++i : ++j;
  }
  return true;
}

inline std::vector<Rational> without_one(const std::vector<Rational>& values, std::size_t drop) {
  std::vector<Rational> rest;
  rest.reserve(values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != drop) rest.push_back(values[i]);
  }
  return rest;
}

}  // namespace detail

/// Exhaustively checks the three monotonicity axioms of a cost rule over
/// sub-multisets of the ground value list, with coalition sizes bounded by
/// max_coalition_size. Coalitions are drawn value-disjoint from the ground
/// multiset; agents x, y are drawn from the remaining entries.
inline MonotonicityReport verify_monotone(const CostRule& cost, std::vector<Rational> ground,
                                          int max_coalition_size, long max_checks = 20000000) {
  std::sort(ground.begin(), ground.end());
  const int gn = static_cast<int>(ground.size());
  auto subsets = detail::index_subsets(gn, max_coalition_size);

  {
    // all configurations below are bounded by subsets^2 * ground^2
    BigInt budget = BigInt(subsets.size()) * BigInt(subsets.size()) * gn +
                    BigInt(subsets.size()) * gn * gn;
    if (budget > max_checks) {
      throw GameError(Errc::EnumerationTooLarge,
                      "monotonicity enumeration needs " + budget.str() + " checks, cap is " +
                          std::to_string(max_checks));
    }
  }

  MonotonicityReport report;
  std::vector<char> in_set(static_cast<std::size_t>(gn));

  // axiom (i): agents beyond the near edge of a coalition order their costs
  for (const auto& c_idx : subsets) {
    if (!report.axiom_i.pass) break;
    std::fill(in_set.begin(), in_set.end(), 0);
    for (int i : c_idx) in_set[static_cast<std::size_t>(i)] = 1;
    auto c_vals = detail::values_of(c_idx, ground);
    const Rational& left = c_vals.front();
    const Rational& right = c_vals.back();
    for (int xi = 0; xi < gn && report.axiom_i.pass; ++xi) {
      if (in_set[static_cast<std::size_t>(xi)]) continue;
      for (int yi = 0; yi < gn; ++yi) {
        if (yi == xi || in_set[static_cast<std::size_t>(yi)]) continue;
        const Rational& x = ground[static_cast<std::size_t>(xi)];
        const Rational& y = ground[static_cast<std::size_t>(yi)];
        bool left_case = x <= y && y <= left;
        bool right_case = right <= y && y <= x;
        if (!left_case && !right_case) continue;
        ++report.axiom_i.checks;
        Rational cost_y = cost(y, c_vals);
        Rational cost_x = cost(x, c_vals);
        if (cost_y > cost_x) {
          report.axiom_i.pass = false;
          report.axiom_i.witness = AxiomWitness{
              left_case ? "x <= y <= L(C)" : "R(C) <= y <= x", c_vals, {}, x, y, cost_y, cost_x};
          break;
        }
      }
    }
  }

  // axioms (ii) and (iii) range over ordered disjoint coalition pairs
  for (const auto& c_idx : subsets) {
    if (!report.axiom_ii.pass && !report.axiom_iii.pass) break;
    std::fill(in_set.begin(), in_set.end(), 0);
    for (int i : c_idx) in_set[static_cast<std::size_t>(i)] = 1;
    auto c_vals = detail::values_of(c_idx, ground);
    for (const auto& d_idx : subsets) {
      if (!detail::disjoint(c_idx, d_idx)) continue;
      auto d_vals = detail::values_of(d_idx, ground);

      // axiom (ii): x on the far side of C with D beyond it
      if (report.axiom_ii.pass) {
        for (int xi = 0; xi < gn; ++xi) {
          if (in_set[static_cast<std::size_t>(xi)]) continue;
          bool in_d = std::binary_search(d_idx.begin(), d_idx.end(), xi);
          if (in_d) continue;
          const Rational& x = ground[static_cast<std::size_t>(xi)];
          bool left_case = x <= c_vals.front() && c_vals.back() <= d_vals.front();
          bool right_case = d_vals.back() <= c_vals.front() && c_vals.back() <= x;
          if (!left_case && !right_case) continue;
          ++report.axiom_ii.checks;
          std::vector<Rational> joint = c_vals;
          joint.insert(joint.end(), d_vals.begin(), d_vals.end());
          Rational in_c = cost(x, c_vals);
          Rational in_joint = cost(x, joint);
          Rational in_d_only = cost(x, d_vals);
          const char* cond = left_case ? "x <= L(C) <= R(C) <= L(D)" : "R(D) <= L(C) <= R(C) <= x";
          if (in_c > in_joint) {
            report.axiom_ii.pass = false;
            report.axiom_ii.witness =
                AxiomWitness{cond, c_vals, d_vals, x, Rational(0), in_c, in_joint};
            break;
          }
          if (in_joint > in_d_only) {
            report.axiom_ii.pass = false;
            report.axiom_ii.witness =
                AxiomWitness{cond, c_vals, d_vals, x, Rational(0), in_joint, in_d_only};
            break;
          }
        }
      }

      // axiom (iii): if any member of C prefers D, so does the extremal
      // member of C on D's side
      if (report.axiom_iii.pass) {
        bool d_right = c_vals.back() <= d_vals.front();
        bool d_left = d_vals.back() <= c_vals.front();
        if (d_right || d_left) {
          for (std::size_t ci = 0; ci < c_vals.size(); ++ci) {
            ++report.axiom_iii.checks;
            const Rational& member = c_vals[ci];
            Rational member_in_c = cost(member, detail::without_one(c_vals, ci));
            Rational member_in_d = cost(member, d_vals);
            if (!(member_in_c > member_in_d)) continue;
            std::size_t edge = d_right ? c_vals.size() - 1 : 0;
            const Rational& edge_agent = c_vals[edge];
            Rational edge_in_c = cost(edge_agent, detail::without_one(c_vals, edge));
            Rational edge_in_d = cost(edge_agent, d_vals);
            if (!(edge_in_c > edge_in_d)) {
              report.axiom_iii.pass = false;
              report.axiom_iii.witness =
                  AxiomWitness{d_right ? "member prefers D right of C, R(C) does not"
                                       : "member prefers D left of C, L(C) does not",
                               c_vals, d_vals, edge_agent, member, edge_in_c, edge_in_d};
              break;
            }
          }
        }
      }
      if (!report.axiom_ii.pass && !report.axiom_iii.pass) break;
    }
  }
  return report;
}

inline MonotonicityReport verify_monotone(const CostModel& model, std::vector<Rational> ground,
                                          int max_coalition_size, long max_checks = 20000000) {
  return verify_monotone(standard_cost_rule(model), std::move(ground), max_coalition_size, max_checks);
}

}  // namespace coalition
