#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace coalition;
using namespace testsupport;

TEST_CASE("brute force reproduces the published optima") {
  // 7 agents, cutoff below 1: unique unsorted optimum {{1,1,3,3},{2,2,2}}
  GameInstance cutoff = make_jump({1, 1, 2, 2, 2, 3, 3}, 2, CostModel::cutoff(Rational(1, 2)));
  OptimumResult r = brute_force_optimum(cutoff);
  CHECK(r.opt_cost == Rational(8, 3));
  CHECK(r.optima.size() == 1);
  CHECK_FALSE(r.any_sorted);

  // 7 agents, maximum: optimum cost 14, alternatives 18 / 32 / 23
  GameInstance maxg = make_jump({1, 1, 1, 4, 6, 8, 8}, 2, CostModel::maximum());
  OptimumResult m = brute_force_optimum(maxg);
  CHECK(m.opt_cost == Rational(14));
  REQUIRE(m.optima.size() == 1);
  CHECK(canonical_key(m.optima.front(), maxg) == canonical_key(st({0, 0, 0, 1, 1, 1, 1}), maxg));
  CHECK(social_cost(st({0, 0, 0, 0, 1, 1, 1}), maxg) == CostValue::finite(Rational(18)));
  CHECK(social_cost(st({0, 0, 0, 1, 0, 1, 1}), maxg) == CostValue::finite(Rational(32)));
  CHECK(social_cost(st({0, 0, 0, 0, 0, 1, 1}), maxg) == CostValue::finite(Rational(23)));

  // 11 agents, maximum: opt cost 8 with seven 2s kept alone
  GameInstance wide = make_jump({1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3}, 2, CostModel::maximum());
  CHECK(brute_force_optimum(wide).opt_cost == Rational(8));
}

TEST_CASE("brute force agrees with the unpruned labeled enumeration") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    IsolationMode iso = rng() % 2 ? IsolationMode::Happy : IsolationMode::Unhappy;
    GameInstance g = trial % 2 == 0
                         ? random_jump_instance(rng, 2, 6, 3, random_model(rng), iso)
                         : random_swap_instance(rng, 4, 6, random_model(rng));
    OptimumResult fast = brute_force_optimum(g);
    NaiveOptimum naive = naive_optimum(g);
    CHECK(fast.opt_cost == naive.opt_cost);
    std::set<std::string> fast_keys;
    for (const CoalitionStructure& s : fast.optima) fast_keys.insert(canonical_key(s, g));
    CHECK(fast_keys == naive.canonical_optima);
  }
}

TEST_CASE("the optimum is indifferent to the order of the size list") {
  GameInstance a = make_swap({1, 1, 2, 2, 2, 2, 2, 3, 3}, {4, 5}, CostModel::average());
  GameInstance b = make_swap({1, 1, 2, 2, 2, 2, 2, 3, 3}, {5, 4}, CostModel::average());
  OptimumResult ra = brute_force_optimum(a);
  OptimumResult rb = brute_force_optimum(b);
  CHECK(ra.opt_cost == rb.opt_cost);
  REQUIRE(ra.optima.size() == rb.optima.size());
  CHECK(canonical_key(ra.optima.front(), a) == canonical_key(rb.optima.front(), b));
}

TEST_CASE("a swap optimum is the jump optimum restricted to its size multiset") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 25; ++trial) {
    GameInstance swap = random_swap_instance(rng, 4, 7, random_model(rng));
    OptimumResult swap_opt = brute_force_optimum(swap);
    std::vector<int> want = *swap.fixed_sizes;
    std::sort(want.begin(), want.end());
    GameInstance jump = swap;
    jump.fixed_sizes.reset();
    CostValue best = CostValue::unhappy();
    for_each_partition(jump.num_agents(), jump.num_slots, [&](const std::vector<int>& rgs, int) {
      CoalitionStructure s{rgs};
      std::vector<int> have = slot_sizes(s, jump.num_slots);
      std::sort(have.begin(), have.end());
      if (have != want) return;
      CostValue cost = social_cost(s, jump);
      if (cost < best) best = cost;
    });
    REQUIRE(best.is_finite());
    CHECK(best.value() == swap_opt.opt_cost);
  }
}

TEST_CASE("the enumeration cap refuses oversized instances") {
  GameInstance g = make_jump(std::vector<long long>(16, 1), 2, CostModel::average());
  try {
    brute_force_optimum(g, 14);
    FAIL("expected an error");
  } catch (const GameError& e) {
    CHECK(e.code() == Errc::StateSpaceTooLarge);
  }
}

TEST_CASE("greedy interval covers") {
  GameInstance g = make_jump_rat({Rational(0), Rational(1, 4), Rational(1, 2), Rational(1, 2),
                                  Rational(5, 4), Rational(7, 4), Rational(9, 4), Rational(3)},
                                 2, CostModel::cutoff(Rational(1)));
  BlockCover cover = lambda_block_cover(g);
  CHECK(cover.count == 3);
  CHECK_FALSE(is_nice(g));
  // every value lies in some block
  for (const Rational& v : g.values) {
    bool covered = false;
    for (const auto& [lo, hi] : cover.blocks) {
      if (lo <= v && v <= hi) covered = true;
    }
    CHECK(covered);
  }
  GameInstance avg = make_jump({1, 2, 3}, 2, CostModel::average());
  try {
    lambda_block_cover(avg);
    FAIL("expected an error");
  } catch (const GameError& e) {
    CHECK(e.code() == Errc::ModelMismatch);
  }
}

TEST_CASE("nice cutoff instances have a zero-cost optimum") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    // place values inside k well-separated unit blocks
    int k = 2 + static_cast<int>(rng() % 2);
    int n = k + 1 + static_cast<int>(rng() % 5);
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i) {
      long long block = static_cast<long long>(rng() % k);
      values.push_back(Rational(10 * block) + Rational(static_cast<long long>(rng() % 5), 4));
    }
    RawInstance raw;
    raw.values = values;
    raw.num_slots = k;
    raw.cost_model = CostModel::cutoff(Rational(5, 4));
    GameInstance g = validate_instance(raw);
    REQUIRE(is_nice(g));
    CHECK(brute_force_optimum(g).opt_cost == Rational(0));
    CHECK(pos(g, StabilityConcept::Jump).is_one());
  }
}

TEST_CASE("the gap decomposition matches the worked coefficients") {
  GameInstance g = make_jump({1, 1, 1, 4, 6, 8, 8}, 2, CostModel::average());
  AlphaDecomposition dec = alpha_decompose(st({0, 0, 0, 1, 0, 1, 1}), g);
  CHECK(dec.m == 3);
  CHECK(dec.gaps == std::vector<Rational>{Rational(0), Rational(0), Rational(3), Rational(2),
                                          Rational(2), Rational(0)});
  CHECK(dec.delta == std::vector<int>{0, 0, 0, 1, 1, 2});
  CHECK(dec.alphas[2] == Rational(2));
  CHECK(dec.alphas[3] == Rational(4));
  CHECK(dec.alphas[4] == Rational(2));
  CHECK(CostValue::finite(dec.weighted_sum()) == social_cost(st({0, 0, 0, 1, 0, 1, 1}), g));
}

TEST_CASE("the weighted gap sum reproduces the social cost on random inputs") {
  std::mt19937_64 rng(113);
  int checked = 0;
  while (checked < 100) {
    int n = 4 + static_cast<int>(rng() % 7);
    GameInstance g = make_jump(random_values(rng, n, 15), 2, CostModel::average());
    CoalitionStructure s = random_structure(rng, g);
    std::vector<int> sizes = slot_sizes(s, 2);
    if (sizes[0] < 2 || sizes[1] < 2) continue;
    AlphaDecomposition dec = alpha_decompose(s, g);
    CHECK(CostValue::finite(dec.weighted_sum()) == social_cost(s, g));
    ++checked;
  }
}

TEST_CASE("the decomposition enforces its preconditions") {
  GameInstance three_slots = make_jump({1, 2, 3, 4}, 3, CostModel::average());
  CHECK_THROWS_AS(alpha_decompose(st({0, 1, 2, 2}), three_slots), GameError);
  GameInstance maxg = make_jump({1, 2, 3, 4}, 2, CostModel::maximum());
  CHECK_THROWS_AS(alpha_decompose(st({0, 0, 1, 1}), maxg), GameError);
  GameInstance avg = make_jump({1, 2, 3, 4}, 2, CostModel::average());
  CHECK_THROWS_AS(alpha_decompose(st({0, 1, 1, 1}), avg), GameError);  // singleton side
}

TEST_CASE("structural checks pass on random distinct-value instances") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    std::set<long long> seen;
    while (static_cast<int>(seen.size()) < n) seen.insert(static_cast<long long>(rng() % (4 * n)));
    std::vector<long long> values(seen.begin(), seen.end());
    GameInstance g = make_jump(values, 2, CostModel::average());
    StructuralReport report = structural_optimum_checks(g);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("structural checks reject unsupported instances") {
  GameInstance maxg = make_jump({1, 2, 3, 4}, 2, CostModel::maximum());
  CHECK_THROWS_AS(structural_optimum_checks(maxg), GameError);
  GameInstance three = make_jump({1, 2, 3, 4}, 3, CostModel::average());
  CHECK_THROWS_AS(structural_optimum_checks(three), GameError);
}
