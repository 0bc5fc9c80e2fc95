#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordalloc/assignment.hpp"
#include "ordalloc/instance.hpp"

namespace ordalloc {

/// Divides every value by the guess t. Max-Min values are first capped at
/// t, so results lie in (0,1]. Min-Max returns std::nullopt when some job
/// exceeds t. Throws std::invalid_argument for t <= 0.
std::optional<ConvexInstance> scale(const ConvexInstance& instance, const Value& t);

/// 1 - 4/(k+1).
Value maxmin_factor(int k);
/// 1 + 4/k + 3/k^2.
Value minmax_factor(int k);

/// Scales by t, rounds with parameter k and runs the dynamic program.
/// On success the assignment (in the instance's own agent order) has
/// original-value objective >= (1 - 4/(k+1)) t for Max-Min, or makespan
/// <= (1 + 4/k + 3/k^2) t for Min-Max. Success is guaranteed whenever a
/// t-assignment exists. Appends the DP trace to `trace` when given.
std::optional<Assignment> decide(const ConvexInstance& instance, const Value& t, int k, std::string* trace = nullptr);

struct SolveOptions {
  /// Binary search stops once the bracket is no wider than delta times the
  /// best certified guess; 0 selects 1/(4k).
  Value delta = 0;
  int max_iterations = 128;
  /// When set, receives a "probe t=<t> result=<success|failure>" line
  /// followed by the DP trace of every decide call.
  std::string* trace = nullptr;
};

struct SolveResult {
  Value t_star;
  Assignment assignment;
  Value objective;
  /// Proven factor relative to OPT for this k and delta.
  Value guarantee;
  int probes = 0;
};

/// Binary search over t in [0, (1/n) sum v]; keeps the largest successful
/// t. Objective >= (1 - 4/(k+1)) (1 - delta) OPT.
/// Throws std::invalid_argument for invalid input and std::domain_error
/// when OPT is zero (the agents cannot all receive an item).
SolveResult solve_maxmin(const ConvexInstance& instance, int k, const SolveOptions& options = {});

/// Binary search over t in [(1/n) sum p, sum p]; keeps the smallest
/// successful t. Makespan <= (1 + 4/k + 3/k^2) (1 + delta) OPT.
SolveResult solve_minmax(const ConvexInstance& instance, int k, const SolveOptions& options = {});

/// Dispatches on instance.mode.
SolveResult solve(const ConvexInstance& instance, int k, const SolveOptions& options = {});

struct VerifyReport {
  bool feasible = false;
  std::vector<std::string> violations;
  /// Original-value total per agent (instance order).
  std::vector<Value> agent_values;
  /// Minimum agent value (Max-Min) or maximum load (Min-Max).
  Value objective;
};

/// Checks bundle count, disjointness, interval membership and that every
/// item is assigned; reports values in original units either way.
VerifyReport verify(const ConvexInstance& instance, const Assignment& assignment);

}  // namespace ordalloc
