#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordalloc/instance.hpp"

namespace ordalloc {

/// A violated interval inequality. For Max-Min the interval ranges over
/// item positions and lhs = val([first,last]) < rhs = d(P[first,last]).
/// For Min-Max it ranges over machine positions in lexicographic order and
/// lhs = w(J([first,last])) > rhs = sum of allowable loads.
struct HallWitness {
  std::size_t first = 0;
  std::size_t last = 0;
  Value lhs;
  Value rhs;

  friend bool operator==(const HallWitness&, const HallWitness&) = default;
};

/// Empty optional means the condition holds.
using HallResult = std::optional<HallWitness>;

/// Every violated item interval of the Max-Min condition
/// val([l,r]) >= d(P[l,r]), ordered by (first, last).
std::vector<HallWitness> hall_violations_maxmin(const ConvexInstance& instance, std::span<const Value> demands);

/// First violation by smallest first, then smallest last.
HallResult check_hall_maxmin(const ConvexInstance& instance, std::span<const Value> demands);

/// Per-job machine range [first, last] in lexicographic machine positions.
/// Throws std::invalid_argument if some job's machine set is not contiguous.
std::vector<std::pair<std::size_t, std::size_t>> job_machine_ranges(const ConvexInstance& instance);

/// Every violated machine interval of w(J([l,r])) <= sum_{i=l..r} a(M_i).
/// `loads` are indexed by agent in instance order; intervals refer to
/// positions in lexicographic machine order.
std::vector<HallWitness> hall_violations_minmax(const ConvexInstance& instance, std::span<const Value> loads);

HallResult check_hall_minmax(const ConvexInstance& instance, std::span<const Value> loads);

/// Subset-enumeration check used to cross-validate the interval checks.
/// Max-Min: all nonempty agent subsets, val(N(P')) >= d(P'), n <= 20.
/// Min-Max: all nonempty job subsets, w(J') <= a(N(J')), jobs <= 20.
/// On violation returns a smallest-cardinality violating subset (agent
/// indices for Max-Min, job indices for Min-Max), ties broken by the
/// lowest bitmask. Throws std::length_error past the size guard.
struct BruteforceHall {
  bool ok = true;
  std::vector<std::size_t> subset;
};
BruteforceHall check_hall_bruteforce(const ConvexInstance& instance, std::span<const Value> bound, Mode mode);

inline constexpr std::size_t kHallBruteforceLimit = 20;

}  // namespace ordalloc
