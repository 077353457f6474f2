#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coalition/optimum.hpp"

namespace coalition {

enum class StabilityConcept { Jump, Swap };

/// Exhaustive classification of an instance: every stable structure with its
/// social cost, the extremes over that list, and the optimum cost.
struct EquilibriumCensus {
  std::vector<std::pair<CoalitionStructure, CostValue>> equilibria;
  CostValue worst_cost, best_cost;
  Rational opt_cost;
  long long structures_enumerated = 0;
};

inline EquilibriumCensus census(const GameInstance& g, StabilityConcept stability,
                                int cap = default_enumeration_cap()) {
  if ((stability == StabilityConcept::Swap) != g.is_swap_game()) {
    throw GameError(Errc::InvalidInput, "stability concept does not match the instance kind");
  }
  if (g.num_agents() > cap) {
    throw GameError(Errc::StateSpaceTooLarge, "n=" + std::to_string(g.num_agents()) +
                                                  " exceeds enumeration cap " + std::to_string(cap));
  }

  EquilibriumCensus result;
  CostValue best_overall = CostValue::unhappy();

  auto consider = [&](const std::vector<int>& slot_of) {
    ++result.structures_enumerated;
    CoalitionStructure s{slot_of};
    CostValue cost = detail::structure_cost(slot_members(s, g.num_slots), g);
    if (cost < best_overall) best_overall = cost;
    bool stable = stability == StabilityConcept::Jump ? !has_improving_jump(s, g)
                                                    : !has_improving_swap(s, g);
    if (stable) {
      if (result.equilibria.empty()) {
        result.worst_cost = cost;
        result.best_cost = cost;
      } else {
        if (result.worst_cost < cost) result.worst_cost = cost;
        if (cost < result.best_cost) result.best_cost = cost;
      }
      result.equilibria.emplace_back(std::move(s), std::move(cost));
    }
  };

  if (g.is_swap_game()) {
    for_each_sized_assignment(*g.fixed_sizes, consider);
  } else {
    for_each_partition(g.num_agents(), g.num_slots,
                       [&](const std::vector<int>& rgs, int) { consider(rgs); });
  }

  if (best_overall.is_unhappy()) {
    throw GameError(Errc::PreconditionViolated, "no structure has a finite social cost");
  }
  result.opt_cost = best_overall.value();
  return result;
}

/// Per-instance equilibrium/optimum cost ratio. When the optimum is 0 the
/// ratio is UNBOUNDED if the relevant equilibrium cost is positive, and
/// reported as 1 (ALL_ZERO) when it is 0 as well.
struct Ratio {
  enum class Kind { Finite, Unbounded, UndefinedAllZero };
  Kind kind = Kind::Finite;
  Rational value;  // the ratio for Finite; 1 by convention for UndefinedAllZero

  static Ratio finite(Rational v) { return {Kind::Finite, std::move(v)}; }
  static Ratio unbounded() { return {Kind::Unbounded, Rational(0)}; }
  static Ratio all_zero() { return {Kind::UndefinedAllZero, Rational(1)}; }

  bool is_one() const {
    return (kind == Kind::Finite && value == 1) || kind == Kind::UndefinedAllZero;
  }
  std::string str() const {
    switch (kind) {
      case Kind::Finite: return format_rational(value);
      case Kind::Unbounded: return "unbounded";
      case Kind::UndefinedAllZero: return "1";
    }
    return "?";
  }
};

namespace detail {

inline Ratio cost_ratio(const CostValue& equilibrium_cost, const Rational& opt) {
  if (equilibrium_cost.is_unhappy()) return Ratio::unbounded();
  if (opt == 0) {
    return equilibrium_cost.value() == 0 ? Ratio::all_zero() : Ratio::unbounded();
  }
  return Ratio::finite(equilibrium_cost.value() / opt);
}

}  // namespace detail

inline Ratio poa(const GameInstance& g, StabilityConcept stability,
                 int cap = default_enumeration_cap()) {
  EquilibriumCensus c = census(g, stability, cap);
  if (c.equilibria.empty()) throw GameError(Errc::PreconditionViolated, "instance has no equilibrium");
  return detail::cost_ratio(c.worst_cost, c.opt_cost);
}

inline Ratio pos(const GameInstance& g, StabilityConcept stability,
                 int cap = default_enumeration_cap()) {
  EquilibriumCensus c = census(g, stability, cap);
  if (c.equilibria.empty()) throw GameError(Errc::PreconditionViolated, "instance has no equilibrium");
  return detail::cost_ratio(c.best_cost, c.opt_cost);
}

}  // namespace coalition
