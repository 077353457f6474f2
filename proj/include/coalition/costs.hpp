#pragma once

#include <vector>

#include "coalition/core.hpp"

namespace coalition {

/// Euclidean distance between two agents' values.
inline Rational distance(int i, int j, const GameInstance& g) {
  Rational d = g.value(i) - g.value(j);
  return d < 0 ? Rational(-d) : d;
}

/// Friends and enemies of an agent among a set of co-members: a co-member is
/// a friend iff its distance to the agent is at most lambda.
struct FriendEnemySplit {
  std::vector<int> friends;
  std::vector<int> enemies;
};

inline FriendEnemySplit friend_enemy_split(int agent, const std::vector<int>& co_members,
                                           const Rational& lambda, const GameInstance& g) {
  FriendEnemySplit split;
  for (int other : co_members) {
    if (other == agent) continue;
    (distance(agent, other, g) <= lambda ? split.friends : split.enemies).push_back(other);
  }
  return split;
}

/// Cost of an agent evaluated against a set of co-members (self excluded).
/// An empty set is the isolation case: 0 under HIS, UNHAPPY under UIS.
inline CostValue cost_among(int agent, const std::vector<int>& co_members, const GameInstance& g) {
  long long count = 0;
  for (int other : co_members) {
    if (other != agent) ++count;
  }
  if (count == 0) {
    return g.isolation == IsolationMode::Happy ? CostValue::finite(Rational(0))
                                               : CostValue::unhappy();
  }
  switch (g.cost_model.variant) {
    case CostVariant::Average: {
      Rational sum(0);
      for (int other : co_members) {
        if (other != agent) sum += distance(agent, other, g);
      }
      return CostValue::finite(sum / count);
    }
    case CostVariant::Maximum: {
      Rational worst(0);
      for (int other : co_members) {
        if (other == agent) continue;
        Rational d = distance(agent, other, g);
        if (d > worst) worst = d;
      }
      return CostValue::finite(worst);
    }
    case CostVariant::Cutoff: {
      long long enemies = 0;
      for (int other : co_members) {
        if (other == agent) continue;
        if (distance(agent, other, g) > g.cost_model.lambda) ++enemies;
      }
      return CostValue::finite(Rational(enemies) / count);
    }
  }
  return CostValue::unhappy();
}

/// Cost of agent i in its current coalition.
inline CostValue agent_cost(int i, const CoalitionStructure& s, const GameInstance& g) {
  std::vector<int> co_members;
  const int my_slot = s.slot_of(i);
  for (int other = 0; other < g.num_agents(); ++other) {
    if (other != i && s.slot_of(other) == my_slot) co_members.push_back(other);
  }
  return cost_among(i, co_members, g);
}

/// Cost agent i would have after jumping into target_slot: evaluated against
/// the target's current occupants, so the divisor for the average and cutoff
/// models is the target's occupancy before the move. An empty target costs 0
/// under HIS and UNHAPPY under UIS.
inline CostValue hypothetical_cost(int i, int target_slot, const CoalitionStructure& s,
                                   const GameInstance& g) {
  std::vector<int> occupants;
  for (int other = 0; other < g.num_agents(); ++other) {
    if (other != i && s.slot_of(other) == target_slot) occupants.push_back(other);
  }
  return cost_among(i, occupants, g);
}

/// Sum of all agents' costs; UNHAPPY as soon as any summand is UNHAPPY.
inline CostValue social_cost(const CoalitionStructure& s, const GameInstance& g) {
  CostValue total = CostValue::finite(Rational(0));
  auto groups = slot_members(s, g.num_slots);
  for (const auto& group : groups) {
    for (int agent : group) {
      total += cost_among(agent, group, g);
      if (total.is_unhappy()) return total;
    }
  }
  return total;
}

}  // namespace coalition
