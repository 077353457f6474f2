#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalition/equilibrium.hpp"

namespace coalition {

namespace detail {

/// Social cost from per-slot member lists (ascending agent index, hence
/// ascending value), using closed per-coalition forms. Agrees with the
/// definitional agent-by-agent sum and keeps brute-force enumeration cheap.
inline CostValue structure_cost(const std::vector<std::vector<int>>& groups, const GameInstance& g) {
  Rational total(0);
  for (const auto& members : groups) {
    const auto m = static_cast<long long>(members.size());
    if (m == 0) continue;
    if (m == 1) {
      if (g.isolation == IsolationMode::Unhappy) return CostValue::unhappy();
      continue;
    }
    switch (g.cost_model.variant) {
      case CostVariant::Average: {
        // sum of pairwise distances via the sorted order
        Rational pairwise(0);
        for (long long i = 0; i < m; ++i) {
          pairwise += g.value(members[static_cast<std::size_t>(i)]) * (2 * i - m + 1);
        }
        total += 2 * pairwise / (m - 1);
        break;
      }
      case CostVariant::Maximum: {
        const Rational& low = g.value(members.front());
        const Rational& high = g.value(members.back());
        for (int agent : members) {
          Rational to_low = g.value(agent) - low;
          Rational to_high = high - g.value(agent);
          total += to_low > to_high ? to_low : to_high;
        }
        break;
      }
      case CostVariant::Cutoff: {
        long long enemies = 0;
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
          const Rational& v = g.value(members[i]);
          while (g.value(members[lo]) < v - g.cost_model.lambda) ++lo;
          if (hi < i) hi = i;
          while (hi + 1 < members.size() && g.value(members[hi + 1]) <= v + g.cost_model.lambda) ++hi;
          enemies += m - static_cast<long long>(hi - lo + 1);
        }
        total += Rational(enemies) / (m - 1);
        break;
      }
    }
  }
  return CostValue::finite(std::move(total));
}

}  // namespace detail

/// All social-cost minimizers of an instance, canonically deduplicated.
struct OptimumResult {
  std::vector<CoalitionStructure> optima;
  Rational opt_cost;
  bool any_sorted = false;
  long long enumerated_count = 0;
};

/// Exhaustive optimum search. Jump games enumerate partitions into at most k
/// nonempty blocks (under HIS a singleton costs 0, so reserving empty slots
/// never helps; under UIS structures with singletons are never optimal for
/// n >= 2). Swap games enumerate the assignments realizing the size multiset.
inline OptimumResult brute_force_optimum(const GameInstance& g, int cap = default_enumeration_cap()) {
  if (g.num_agents() > cap) {
    throw GameError(Errc::StateSpaceTooLarge, "n=" + std::to_string(g.num_agents()) +
                                                  " exceeds enumeration cap " + std::to_string(cap));
  }
  OptimumResult result;
  CostValue best = CostValue::unhappy();

  auto consider = [&](const std::vector<int>& slot_of) {
    ++result.enumerated_count;
    CoalitionStructure s{slot_of};
    CostValue cost = detail::structure_cost(slot_members(s, g.num_slots), g);
    if (cost < best) {
      best = cost;
      result.optima.clear();
    }
    if (cost == best && !best.is_unhappy()) result.optima.push_back(std::move(s));
  };

  if (g.is_swap_game()) {
    for_each_sized_assignment(*g.fixed_sizes, consider);
  } else {
    for_each_partition(g.num_agents(), g.num_slots,
                       [&](const std::vector<int>& rgs, int) { consider(rgs); });
  }

  if (best.is_unhappy()) {
    throw GameError(Errc::PreconditionViolated, "no structure has a finite social cost");
  }
  result.opt_cost = best.value();
  for (const auto& s : result.optima) {
    if (is_sorted(s, g)) {
      result.any_sorted = true;
      break;
    }
  }
  return result;
}

/// Minimum set of length-lambda intervals covering all agent values, built by
/// the left-to-right greedy sweep (each block starts at the smallest
/// uncovered value). The instance is "nice" iff count <= k.
struct BlockCover {
  std::vector<std::pair<Rational, Rational>> blocks;
  int count = 0;
};

inline BlockCover lambda_block_cover(const GameInstance& g) {
  if (g.cost_model.variant != CostVariant::Cutoff) {
    throw GameError(Errc::ModelMismatch, "lambda blocks require the cutoff cost model");
  }
  BlockCover cover;
  const Rational& lambda = g.cost_model.lambda;
  std::size_t i = 0;
  while (i < g.values.size()) {
    Rational start = g.values[i];
    Rational end = start + lambda;
    cover.blocks.emplace_back(start, end);
    ++cover.count;
    while (i < g.values.size() && g.values[i] <= end) ++i;
  }
  return cover;
}

inline bool is_nice(const GameInstance& g) {
  return lambda_block_cover(g).count <= g.num_slots;
}

/// Rewriting of the average social cost for k=2 as a weighted sum of the
/// consecutive value gaps: social cost = sum over i of alpha_i(delta_i) * d_i,
/// where d_i = v_{i+1} - v_i, delta_i counts members of the smaller coalition
/// among the first i agents, and
/// alpha_i = 2*delta_i*(m-delta_i)/(m-1) + 2*(i-delta_i)*(n-m-i+delta_i)/(n-m-1).
struct AlphaDecomposition {
  int m = 0;                     // size of the smaller coalition
  std::vector<Rational> gaps;    // d_1..d_{n-1}
  std::vector<int> delta;        // delta_1..delta_{n-1}
  std::vector<Rational> alphas;  // alpha_1..alpha_{n-1}

  Rational weighted_sum() const {
    Rational total(0);
    for (std::size_t i = 0; i < gaps.size(); ++i) total += alphas[i] * gaps[i];
    return total;
  }
};

inline AlphaDecomposition alpha_decompose(const CoalitionStructure& s, const GameInstance& g) {
  if (g.cost_model.variant != CostVariant::Average) {
    throw GameError(Errc::PreconditionViolated, "decomposition applies to the average cost model");
  }
  if (g.num_slots != 2) {
    throw GameError(Errc::PreconditionViolated, "decomposition requires exactly two slots");
  }
  require_valid(s, g);
  const int n = g.num_agents();
  std::vector<int> sizes = slot_sizes(s, 2);
  if (sizes[0] < 2 || sizes[1] < 2) {
    throw GameError(Errc::PreconditionViolated, "decomposition requires both coalitions of size >= 2");
  }
  const int small_slot = sizes[0] <= sizes[1] ? 0 : 1;

  AlphaDecomposition dec;
  dec.m = sizes[static_cast<std::size_t>(small_slot)];
  const long long m = dec.m;
  long long in_small = 0;
  for (int i = 1; i < n; ++i) {  // gap i sits between agents i and i+1 (1-based)
    if (s.slot_of(i - 1) == small_slot) ++in_small;
    const long long d = in_small;
    dec.gaps.push_back(g.value(i) - g.value(i - 1));
    dec.delta.push_back(static_cast<int>(d));
    Rational alpha = Rational(2 * d * (m - d)) / (m - 1) +
                     Rational(2 * (i - d) * (n - m - i + d)) / (n - m - 1);
    dec.alphas.push_back(std::move(alpha));
  }
  return dec;
}

/// Structural facts about the optima of an average-cost two-slot jump game:
/// no optimum has an isolated agent (both index-neighbors in the other
/// coalition, first and last agent exempt), an optimum whose smaller
/// coalition fits in the first (last) half is matched by the left-packed
/// (right-packed) sorted structure, and no optimum's smaller coalition is a
/// contiguous run straddling the midpoint.
struct StructuralViolation {
  std::string rule;
  CoalitionStructure structure;
  std::string detail;
};

struct StructuralReport {
  Rational opt_cost;
  long long optima_checked = 0;
  std::vector<StructuralViolation> violations;
  bool all_optima_unsorted = false;  // a true value is a reportable finding
};

namespace detail {

/// Sorted two-slot structure whose smaller coalition is the m left-most
/// (or right-most) agents.
inline CoalitionStructure packed_structure(int n, int m, bool left) {
  CoalitionStructure s;
  s.slot.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < m; ++i) {
    s.slot[static_cast<std::size_t>(left ? i : n - 1 - i)] = 0;
  }
  return s;
}

}  // namespace detail

inline StructuralReport structural_optimum_checks(const GameInstance& g,
                                                  int cap = default_enumeration_cap()) {
  if (g.cost_model.variant != CostVariant::Average || g.num_slots != 2 || g.is_swap_game()) {
    throw GameError(Errc::PreconditionViolated,
                    "structural checks apply to average-cost jump games with two slots");
  }
  OptimumResult opt = brute_force_optimum(g, cap);
  StructuralReport report;
  report.opt_cost = opt.opt_cost;
  report.optima_checked = static_cast<long long>(opt.optima.size());
  report.all_optima_unsorted = !opt.any_sorted;
  const int n = g.num_agents();

  for (const CoalitionStructure& s : opt.optima) {
    auto groups = canonical_blocks(s, 2);

    // isolated agents (first and last agent are exempt)
    for (int agent = 1; agent + 1 < n; ++agent) {
      int mine = s.slot_of(agent);
      if (s.slot_of(agent - 1) != mine && s.slot_of(agent + 1) != mine) {
        report.violations.push_back(
            {"no-isolated-agent", s, "agent " + std::to_string(agent + 1) + " is isolated"});
      }
    }

    if (groups.size() != 2) continue;
    for (const auto& block : groups) {
      const int m = static_cast<int>(block.size());
      if (m > n - m) continue;  // structural statements address the smaller coalition
      const bool in_first_half = block.back() < n / 2;       // all indices within 1..floor(n/2)
      const bool in_last_half = block.front() >= (n + 1) / 2;  // all within ceil(n/2)+1..n
      if (in_first_half || in_last_half) {
        CoalitionStructure packed = detail::packed_structure(n, m, in_first_half);
        CostValue packed_cost = detail::structure_cost(slot_members(packed, 2), g);
        if (packed_cost.is_unhappy() || packed_cost.value() > opt.opt_cost) {
          report.violations.push_back({in_first_half ? "left-packed-dominance" : "right-packed-dominance",
                                       s, "packed structure costs " + packed_cost.str()});
        }
      }
      const bool contiguous = block.back() - block.front() + 1 == m;
      if (m >= 2 && contiguous && block.front() < n / 2 && block.back() >= n / 2) {
        report.violations.push_back(
            {"no-straddling-run", s,
             "smaller coalition is a contiguous run across the midpoint"});
      }
    }
  }
  return report;
}

}  // namespace coalition
