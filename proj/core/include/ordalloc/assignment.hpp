#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ordalloc/instance.hpp"

namespace ordalloc {

/// Per-agent bundles of item positions, indexed like the instance's agents.
/// A feasible assignment is a partition of the items with every bundle
/// inside its agent's interval.
struct Assignment {
  Mode mode = Mode::MaxMin;
  std::vector<ItemSet> bundles;

  static Assignment empty(Mode mode, std::size_t agents, std::size_t items);

  /// From an owner index per item.
  static Assignment from_owners(Mode mode, std::size_t agents, std::span<const std::size_t> owner);

  std::size_t agent_count() const { return bundles.size(); }
  ItemSet assigned() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// True when bundles are pairwise disjoint, cover every item and respect
/// agent intervals.
bool is_feasible_partition(const ConvexInstance& instance, const Assignment& assignment);

/// Per-agent total of `values` over the agent's bundle.
std::vector<Value> bundle_values(const Assignment& assignment, std::span<const Value> values);

/// Relabels bundles from lexicographic positions back to the instance's
/// agent order (`order[pos]` is the original index at position pos).
Assignment unpermute(const Assignment& sorted, std::span<const std::size_t> order);

/// Inverse of unpermute.
Assignment permute(const Assignment& original, std::span<const std::size_t> order);

}  // namespace ordalloc
