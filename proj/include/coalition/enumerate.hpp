#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "coalition/core.hpp"

namespace coalition {

/// Default cap on brute-force enumeration (number of agents). Overridable
/// through the COALITION_LAB_CAP environment variable.
inline int default_enumeration_cap() {
  if (const char* env = std::getenv("COALITION_LAB_CAP")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 14;
}

/// Number of partitions of n agents into at most k_max nonempty blocks
/// (sum of Stirling numbers of the second kind).
inline BigInt count_partitions(int n, int k_max) {
  // stirling[j] = S(i, j) while iterating i upward
  std::vector<BigInt> stirling(static_cast<std::size_t>(n) + 1, BigInt(0));
  stirling[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, n); j >= 1; --j) {
      stirling[static_cast<std::size_t>(j)] =
          BigInt(j) * stirling[static_cast<std::size_t>(j)] + stirling[static_cast<std::size_t>(j) - 1];
    }
    stirling[0] = 0;
  }
  BigInt total = 0;
  for (int j = 1; j <= std::min(n, k_max); ++j) total += stirling[static_cast<std::size_t>(j)];
  return total;
}

/// Number of distinct structures realizing a size multiset, i.e. the
/// multinomial coefficient divided by the permutations of equal-sized slots.
inline BigInt count_sized_assignments(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  BigInt result = 1;
  int remaining = n;
  for (int s : sizes) {
    // multiply by C(remaining, s)
    for (int i = 0; i < s; ++i) {
      result *= remaining - i;
      result /= i + 1;
    }
    remaining -= s;
  }
  std::vector<int> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    for (std::size_t c = 2; c <= j - i; ++c) result /= static_cast<int>(c);
    i = j;
  }
  return result;
}

namespace detail {

template <typename Visit>
void partitions_rec(int n, int k_max, int agent, int blocks_used, std::vector<int>& assignment,
                    Visit& visit) {
  if (agent == n) {
    visit(assignment, blocks_used);
    return;
  }
  for (int b = 0; b < blocks_used; ++b) {
    assignment[static_cast<std::size_t>(agent)] = b;
    partitions_rec(n, k_max, agent + 1, blocks_used, assignment, visit);
  }
  if (blocks_used < k_max) {
    assignment[static_cast<std::size_t>(agent)] = blocks_used;
    partitions_rec(n, k_max, agent + 1, blocks_used + 1, assignment, visit);
  }
}

}  // namespace detail

/// Visits every partition of agents 0..n-1 into at most k_max nonempty
/// blocks exactly once, as a restricted growth string (agent -> block index,
/// blocks numbered by first appearance). visit(assignment, block_count).
template <typename Visit>
void for_each_partition(int n, int k_max, Visit visit) {
  if (n == 0) return;
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  detail::partitions_rec(n, k_max, 0, 0, assignment, visit);
}

namespace detail {

struct SizeClass {
  int size = 0;
  int unopened = 0;
  std::vector<int> open_slots;      // slot ids already holding at least one agent
  std::vector<int> remaining;       // remaining capacity per open slot
  std::vector<int> slot_pool;       // slot ids not opened yet
};

template <typename Visit>
void sized_rec(int agent, int n, std::vector<SizeClass>& classes, std::vector<int>& slot_of,
               Visit& visit) {
  if (agent == n) {
    visit(std::as_const(slot_of));
    return;
  }
  for (auto& cls : classes) {
    for (std::size_t i = 0; i < cls.open_slots.size(); ++i) {
      if (cls.remaining[i] == 0) continue;
      slot_of[static_cast<std::size_t>(agent)] = cls.open_slots[i];
      --cls.remaining[i];
      sized_rec(agent + 1, n, classes, slot_of, visit);
      ++cls.remaining[i];
    }
    if (cls.unopened > 0) {
      // slots of equal size are interchangeable; open only one of them
      int slot = cls.slot_pool[static_cast<std::size_t>(cls.unopened) - 1];
      --cls.unopened;
      cls.open_slots.push_back(slot);
      cls.remaining.push_back(cls.size - 1);
      slot_of[static_cast<std::size_t>(agent)] = slot;
      sized_rec(agent + 1, n, classes, slot_of, visit);
      cls.open_slots.pop_back();
      cls.remaining.pop_back();
      ++cls.unopened;
    }
  }
}

}  // namespace detail

/// Visits every structure realizing the given slot sizes exactly once up to
/// relabeling of equal-sized slots. visit(slot_of) receives agent -> slot id,
/// where slot ids refer to positions in `sizes`.
template <typename Visit>
void for_each_sized_assignment(const std::vector<int>& sizes, Visit visit) {
  int n = 0;
  for (int s : sizes) n += s;
  if (n == 0) return;

  std::vector<detail::SizeClass> classes;
  std::vector<int> order(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sizes[static_cast<std::size_t>(a)] < sizes[static_cast<std::size_t>(b)];
  });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    detail::SizeClass cls;
    cls.size = sizes[static_cast<std::size_t>(order[i])];
    while (j < order.size() && sizes[static_cast<std::size_t>(order[j])] == cls.size) {
      cls.slot_pool.push_back(order[j]);
      ++j;
    }
    cls.unopened = static_cast<int>(cls.slot_pool.size());
    classes.push_back(std::move(cls));
    i = j;
  }

  std::vector<int> slot_of(static_cast<std::size_t>(n), 0);
  detail::sized_rec(0, n, classes, slot_of, visit);
}

}  // namespace coalition
