#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalition/rational.hpp"

namespace coalition {

enum class CostVariant { Average, Maximum, Cutoff };

inline const char* cost_variant_name(CostVariant v) {
  switch (v) {
    case CostVariant::Average: return "avg";
    case CostVariant::Maximum: return "max";
    case CostVariant::Cutoff: return "cutoff";
  }
  return "?";
}

/// Cost model of an instance. `lambda` is the friendship threshold and is
/// meaningful only for the cutoff variant, where it must be positive.
struct CostModel {
  CostVariant variant = CostVariant::Average;
  Rational lambda;

  static CostModel average() { return {CostVariant::Average, Rational(0)}; }
  static CostModel maximum() { return {CostVariant::Maximum, Rational(0)}; }
  static CostModel cutoff(Rational lam) { return {CostVariant::Cutoff, std::move(lam)}; }
};

/// Cost of an agent sitting alone in a coalition: zero (happy in isolation)
/// or the distinguished top element (unhappy in isolation).
enum class IsolationMode { Happy, Unhappy };

/// Agent cost: either a finite rational or UNHAPPY, a distinguished top
/// element that compares strictly greater than every finite value. Using a
/// top element instead of a large sentinel keeps it from ever colliding with
/// a legitimate cost.
class CostValue {
 public:
  CostValue() : unhappy_(false), value_(0) {}

  static CostValue finite(Rational v) {
    CostValue c;
    c.value_ = std::move(v);
    return c;
  }
  static CostValue unhappy() {
    CostValue c;
    c.unhappy_ = true;
    return c;
  }

  bool is_unhappy() const { return unhappy_; }
  bool is_finite() const { return !unhappy_; }

  /// Finite value; only meaningful when is_finite().
  const Rational& value() const { return value_; }

  friend bool operator==(const CostValue& a, const CostValue& b) {
    if (a.unhappy_ != b.unhappy_) return false;
    return a.unhappy_ || a.value_ == b.value_;
  }
  friend bool operator!=(const CostValue& a, const CostValue& b) { return !(a == b); }
  friend bool operator<(const CostValue& a, const CostValue& b) {
    if (a.unhappy_) return false;
    if (b.unhappy_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const CostValue& a, const CostValue& b) { return b < a; }
  friend bool operator<=(const CostValue& a, const CostValue& b) { return !(b < a); }
  friend bool operator>=(const CostValue& a, const CostValue& b) { return !(a < b); }

  CostValue& operator+=(const CostValue& other) {
    if (other.unhappy_) unhappy_ = true;
    if (!unhappy_) value_ += other.value_;
    return *this;
  }

  std::string str() const { return unhappy_ ? "unhappy" : format_rational(value_); }

 private:
  bool unhappy_;
  Rational value_;
};

/// A game instance. Agent values are kept sorted non-decreasing; agents are
/// identified by their position in this order (0-based internally). Swap
/// games carry fixed coalition sizes, jump games do not.
struct GameInstance {
  std::vector<Rational> values;
  int num_slots = 1;  // k
  std::optional<std::vector<int>> fixed_sizes;
  CostModel cost_model;
  IsolationMode isolation = IsolationMode::Happy;

  int num_agents() const { return static_cast<int>(values.size()); }
  bool is_swap_game() const { return fixed_sizes.has_value(); }
  const Rational& value(int agent) const { return values[static_cast<std::size_t>(agent)]; }
};

/// Assignment of each agent to one of k labeled coalition slots (0-based).
/// Slots may be empty in jump games. All cost and stability semantics are
/// invariant under relabeling of slots; canonical_key realizes that quotient.
struct CoalitionStructure {
  std::vector<int> slot;

  int slot_of(int agent) const { return slot[static_cast<std::size_t>(agent)]; }
  int num_agents() const { return static_cast<int>(slot.size()); }

  friend bool operator==(const CoalitionStructure& a, const CoalitionStructure& b) {
    return a.slot == b.slot;
  }
};

/// Members of each slot, each list ascending by agent index.
inline std::vector<std::vector<int>> slot_members(const CoalitionStructure& s, int k) {
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(k));
  for (int agent = 0; agent < s.num_agents(); ++agent) {
    groups[static_cast<std::size_t>(s.slot_of(agent))].push_back(agent);
  }
  return groups;
}

inline std::vector<int> slot_sizes(const CoalitionStructure& s, int k) {
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (int slot : s.slot) ++sizes[static_cast<std::size_t>(slot)];
  return sizes;
}

/// Nonempty coalitions as sorted agent-index lists, ordered by smallest
/// member. Two structures have equal canonical blocks iff one is a slot
/// relabeling of the other.
inline std::vector<std::vector<int>> canonical_blocks(const CoalitionStructure& s, int k) {
  auto groups = slot_members(s, k);
  std::erase_if(groups, [](const std::vector<int>& g) { return g.empty(); });
  std::sort(groups.begin(), groups.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return groups;
}

/// Canonical textual key of a structure: the sorted nonempty blocks plus k.
inline std::string canonical_key(const CoalitionStructure& s, const GameInstance& g) {
  std::string key = "k" + std::to_string(g.num_slots) + ":";
  for (const auto& block : canonical_blocks(s, g.num_slots)) {
    for (int agent : block) {
      key += std::to_string(agent);
      key += ',';
    }
    key += '|';
  }
  return key;
}

/// Validates a structure against its instance: every agent in a slot in
/// range, and for swap games the occupancy multiset must match fixed_sizes.
inline void require_valid(const CoalitionStructure& s, const GameInstance& g) {
  if (s.num_agents() != g.num_agents()) {
    throw GameError(Errc::InvalidStructure, "assignment length does not match agent count");
  }
  for (int slot : s.slot) {
    if (slot < 0 || slot >= g.num_slots) {
      throw GameError(Errc::InvalidStructure, "slot index out of range");
    }
  }
  if (g.is_swap_game()) {
    std::vector<int> have = slot_sizes(s, g.num_slots);
    std::vector<int> want = *g.fixed_sizes;
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want) {
      throw GameError(Errc::InvalidStructure, "occupancies do not realize the fixed sizes");
    }
  }
}

/// Instance description as it arrives from an external format, before
/// validation and sorting.
struct RawInstance {
  std::vector<Rational> values;
  int num_slots = 1;
  std::optional<std::vector<int>> fixed_sizes;
  CostModel cost_model;
  IsolationMode isolation = IsolationMode::Happy;
};

/// Stable-sorts agents by value and returns old-position -> new-index, so an
/// assignment given in input order can be carried over to the sorted order.
inline std::vector<int> sorting_permutation(const std::vector<Rational>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
  });
  std::vector<int> new_index(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    new_index[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank);
  }
  return new_index;
}

inline GameInstance validate_instance(const RawInstance& raw) {
  if (raw.values.empty()) throw GameError(Errc::EmptyValues, "instance has no agents");
  const int n = static_cast<int>(raw.values.size());
  if (raw.num_slots < 1) throw GameError(Errc::InvalidInput, "k must be positive");
  if (raw.num_slots > n) {
    throw GameError(Errc::KExceedsN, "k=" + std::to_string(raw.num_slots) +
                                         " exceeds n=" + std::to_string(n));
  }
  if (raw.cost_model.variant == CostVariant::Cutoff && raw.cost_model.lambda <= 0) {
    throw GameError(Errc::NonPositiveLambda, "cutoff threshold must be positive");
  }
  if (raw.fixed_sizes) {
    const auto& sizes = *raw.fixed_sizes;
    if (static_cast<int>(sizes.size()) != raw.num_slots) {
      throw GameError(Errc::SizesSumMismatch, "sizes list must have one entry per slot");
    }
    long long total = 0;
    for (int size : sizes) {
      if (size < 1) throw GameError(Errc::SizesSumMismatch, "every coalition size must be at least 1");
      total += size;
    }
    if (total != n) throw GameError(Errc::SizesSumMismatch, "sizes must sum to n");
  }

  GameInstance g;
  g.values = raw.values;
  std::stable_sort(g.values.begin(), g.values.end());
  g.num_slots = raw.num_slots;
  g.fixed_sizes = raw.fixed_sizes;
  g.cost_model = raw.cost_model;
  g.isolation = raw.isolation;
  return g;
}

}  // namespace coalition
