#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coalition/optimum.hpp"
#include "test_support.hpp"

using namespace coalition;
using namespace testsupport;

TEST_CASE("distance is the absolute value gap") {
  GameInstance g = make_jump({4, 7, 10}, 2, CostModel::average());
  CHECK(distance(1, 2, g) == Rational(3));
  CHECK(distance(0, 0, g) == Rational(0));
  std::mt19937_64 rng(5);
  GameInstance r = make_jump(random_values(rng, 8), 2, CostModel::average());
  for (int i = 0; i < r.num_agents(); ++i) {
    for (int j = 0; j < r.num_agents(); ++j) {
      CHECK(distance(i, j, r) == distance(j, i, r));
      CHECK(distance(i, j, r) >= 0);
      if (r.value(i) == r.value(j)) CHECK(distance(i, j, r) == 0);
    }
  }
}

TEST_CASE("singletons cost zero under HIS and unhappy under UIS") {
  for (auto variant : {CostModel::average(), CostModel::maximum(), CostModel::cutoff(Rational(1))}) {
    GameInstance his = make_jump({1, 5}, 2, variant, IsolationMode::Happy);
    GameInstance uis = make_jump({1, 5}, 2, variant, IsolationMode::Unhappy);
    CoalitionStructure split = st({0, 1});
    CHECK(agent_cost(0, split, his) == CostValue::finite(Rational(0)));
    CHECK(agent_cost(0, split, uis) == CostValue::unhappy());
    CHECK(social_cost(split, uis).is_unhappy());
  }
}

TEST_CASE("moving toward an empty slot") {
  GameInstance his = make_jump({1, 5}, 2, CostModel::average(), IsolationMode::Happy);
  GameInstance uis = make_jump({1, 5}, 2, CostModel::average(), IsolationMode::Unhappy);
  CoalitionStructure together = st({0, 0});
  CHECK(hypothetical_cost(0, 1, together, his) == CostValue::finite(Rational(0)));
  CHECK(hypothetical_cost(0, 1, together, uis) == CostValue::unhappy());
}

TEST_CASE("friend/enemy split partitions co-members by the threshold") {
  GameInstance g = make_jump({4, 4, 5, 5, 7, 7, 7, 8, 9, 11}, 3, CostModel::cutoff(Rational(1)));
  std::vector<int> coalition = {0, 1, 4, 5, 7};  // values 4,4,7,7,8
  FriendEnemySplit split = friend_enemy_split(4, coalition, Rational(1), g);
  CHECK(split.friends == std::vector<int>{5, 7});  // the other 7 and the 8
  CHECK(split.enemies == std::vector<int>{0, 1});
  CHECK(split.friends.size() + split.enemies.size() == coalition.size() - 1);
}

TEST_CASE("average cost sits between the extreme distances") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    GameInstance g = random_jump_instance(rng, 3, 8, 3, CostModel::average(), IsolationMode::Happy);
    CoalitionStructure s = random_structure(rng, g);
    for (int agent = 0; agent < g.num_agents(); ++agent) {
      Rational lo(-1), hi(0);
      for (int other = 0; other < g.num_agents(); ++other) {
        if (other == agent || s.slot_of(other) != s.slot_of(agent)) continue;
        Rational d = distance(agent, other, g);
        if (lo < 0 || d < lo) lo = d;
        if (d > hi) hi = d;
      }
      if (lo < 0) continue;  // singleton
      CostValue c = agent_cost(agent, s, g);
      CHECK(CostValue::finite(lo) <= c);
      CHECK(c <= CostValue::finite(hi));
    }
  }
}

TEST_CASE("cutoff cost lives in [0,1] with exact boundary semantics") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    GameInstance g = random_jump_instance(rng, 3, 8, 3, CostModel::cutoff(Rational(2)), IsolationMode::Happy);
    CoalitionStructure s = random_structure(rng, g);
    auto groups = slot_members(s, g.num_slots);
    for (const auto& group : groups) {
      for (int agent : group) {
        if (group.size() < 2) continue;
        CostValue c = agent_cost(agent, s, g);
        CHECK(CostValue::finite(Rational(0)) <= c);
        CHECK(c <= CostValue::finite(Rational(1)));
        FriendEnemySplit split = friend_enemy_split(agent, group, Rational(2), g);
        CHECK((c == CostValue::finite(Rational(0))) == split.enemies.empty());
        CHECK((c == CostValue::finite(Rational(1))) == split.friends.empty());
      }
    }
  }
}

TEST_CASE("an agent below a coalition pays the coalition mean or maximum shifted by its value") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> values = random_values(rng, 6, 20);
    for (auto& v : values) v += 5;
    values[0] = 0;  // agent 0 sits below everyone
    GameInstance avg = make_jump(values, 2, CostModel::average());
    GameInstance max = make_jump(values, 2, CostModel::maximum());
    CoalitionStructure s = st({1, 0, 0, 0, 0, 0});
    Rational mean(0), top(0);
    for (int other = 1; other < 6; ++other) {
      mean += avg.value(other);
      if (avg.value(other) > top) top = avg.value(other);
    }
    mean /= 5;
    CHECK(hypothetical_cost(0, 0, s, avg) == CostValue::finite(mean - avg.value(0)));
    CHECK(hypothetical_cost(0, 0, s, max) == CostValue::finite(top - max.value(0)));
  }
}

TEST_CASE("a same-value co-member never raises maximum or cutoff cost") {
  std::mt19937_64 rng(37);
  for (auto variant : {CostModel::maximum(), CostModel::cutoff(Rational(2))}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> values = random_values(rng, 6, 12);
      int focal = static_cast<int>(rng() % 6);
      std::vector<long long> extended = values;
      extended.push_back(values[static_cast<std::size_t>(focal)]);
      GameInstance g = make_jump(values, 2, variant);
      GameInstance g_ext = make_jump(extended, 2, variant);
      CoalitionStructure everyone = st(std::vector<int>(6, 0));
      CoalitionStructure everyone_ext = st(std::vector<int>(7, 0));
      // equal-valued agents cost the same in the grand coalition, so any
      // agent with the focal value stands in for the focal agent
      Rational v = Rational(values[static_cast<std::size_t>(focal)]);
      int in_sorted = -1, in_ext = -1;
      for (int agent = 0; agent < g.num_agents(); ++agent) {
        if (g.value(agent) == v) in_sorted = agent;
      }
      for (int agent = 0; agent < g_ext.num_agents(); ++agent) {
        if (g_ext.value(agent) == v) in_ext = agent;
      }
      REQUIRE(in_sorted >= 0);
      REQUIRE(in_ext >= 0);
      CHECK(agent_cost(in_ext, everyone_ext, g_ext) <= agent_cost(in_sorted, everyone, g));
    }
  }
}

TEST_CASE("social cost ignores slot labels") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    GameInstance g = random_jump_instance(rng, 3, 7, 3, random_model(rng),
                                          rng() % 2 ? IsolationMode::Happy : IsolationMode::Unhappy);
    CoalitionStructure s = random_structure(rng, g);
    CoalitionStructure relabeled = s;
    for (auto& slot : relabeled.slot) slot = (slot + 1) % g.num_slots;
    CHECK(social_cost(s, g) == social_cost(relabeled, g));
  }
}

TEST_CASE("the closed-form structure cost agrees with the definitional sum") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    IsolationMode iso = rng() % 2 ? IsolationMode::Happy : IsolationMode::Unhappy;
    GameInstance g = random_jump_instance(rng, 2, 9, 4, random_model(rng), iso);
    CoalitionStructure s = random_structure(rng, g);
    CHECK(coalition::detail::structure_cost(slot_members(s, g.num_slots), g) == social_cost(s, g));
  }
  // rational-valued instance exercising the cutoff window walk
  GameInstance g = make_jump_rat({Rational(0), Rational(1, 16), Rational(1, 8), Rational(1, 8),
                                  Rational(17, 16), Rational(19, 16), Rational(33, 16), Rational(9, 4)},
                                 2, CostModel::cutoff(Rational(1)));
  std::mt19937_64 rng2(47);
  for (int trial = 0; trial < 40; ++trial) {
    CoalitionStructure s = random_structure(rng2, g);
    CHECK(coalition::detail::structure_cost(slot_members(s, g.num_slots), g) == social_cost(s, g));
  }
}
