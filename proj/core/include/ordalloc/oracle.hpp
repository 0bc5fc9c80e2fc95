#pragma once

#include <cstddef>

#include "ordalloc/assignment.hpp"
#include "ordalloc/instance.hpp"

namespace ordalloc {

/// Largest number of adjacency-respecting placements (product of item
/// degrees) the oracle accepts: 6^14, the count for 14 items each open to
/// 6 agents.
inline constexpr double kOracleMaxPlacements = 78364164096.0;

/// Product over items of the number of agents covering the item.
double placement_count(const ConvexInstance& instance);

struct OracleResult {
  Value opt;
  /// An optimal partition, agents in instance order.
  Assignment witness;
};

/// Exact max over partitions of the minimum agent value.
/// Throws std::length_error beyond kOracleMaxPlacements placements and
/// std::invalid_argument for invalid input.
OracleResult opt_maxmin(const ConvexInstance& instance);

/// Exact min over partitions of the maximum machine load.
OracleResult opt_minmax(const ConvexInstance& instance);

/// Dispatches on instance.mode.
OracleResult opt(const ConvexInstance& instance);

}  // namespace ordalloc
