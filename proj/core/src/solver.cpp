#include "ordalloc/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordalloc/dp_engine.hpp"
#include "ordalloc/hall.hpp"
#include "ordalloc/rounding.hpp"

namespace ordalloc {

namespace {

void require_valid(const ConvexInstance& instance) {
  const auto report = validate(instance);
  if (!report.ok()) throw std::invalid_argument("invalid instance: " + report.violations.front().message);
}

Value objective_of(const ConvexInstance& instance, const Assignment& assignment) {
  return verify(instance, assignment).objective;
}

struct Probe {
  Value t;
  std::optional<Assignment> assignment;
};

Probe probe(const ConvexInstance& instance, const Value& t, int k, const SolveOptions& options, int& count) {
  ++count;
  std::string table;
  auto result = decide(instance, t, k, options.trace ? &table : nullptr);
  if (options.trace) {
    *options.trace += "probe t=" + format_value(t) + " result=" + (result ? "success" : "failure") + "\n";
    *options.trace += table;
  }
  return {t, std::move(result)};
}

Value effective_delta(const SolveOptions& options, int k) {
  if (options.delta < 0 || options.delta >= 1) throw std::invalid_argument("delta must lie in (0,1)");
  return options.delta == 0 ? Value(1, 4 * k) : options.delta;
}

}  // namespace

std::optional<ConvexInstance> scale(const ConvexInstance& instance, const Value& t) {
  if (t <= 0) throw std::invalid_argument("scale: t must be positive");
  ConvexInstance out = instance;
  for (auto& item : out.items) {
    if (instance.mode == Mode::MaxMin) {
      item.value = std::min(item.value, t) / t;
    } else {
      if (item.value > t) return std::nullopt;
      item.value /= t;
    }
  }
  return out;
}

Value maxmin_factor(int k) { return 1 - Value(4, k + 1); }

Value minmax_factor(int k) { return 1 + Value(4, k) + Value(3, k * k); }

std::optional<Assignment> decide(const ConvexInstance& instance, const Value& t, int k, std::string* trace) {
  const auto order = lexicographic_order(instance);
  const auto scaled = scale(lexicographic_copy(instance), t);
  if (!scaled) return std::nullopt;
  const auto rounded = round_instance(*scaled, scheme(k, direction_for(instance.mode)));
  auto sorted = solve_rounded(rounded, trace);
  if (!sorted) return std::nullopt;
  return unpermute(*sorted, order);
}

SolveResult solve_maxmin(const ConvexInstance& instance, int k, const SolveOptions& options) {
  if (instance.mode != Mode::MaxMin) throw std::invalid_argument("solve_maxmin: instance is not in maxmin mode");
  require_valid(instance);
  if (k < 4) throw std::invalid_argument("k must be >= 4");
  const Value delta = effective_delta(options, k);

  // OPT > 0 iff every agent can receive a distinct item.
  ConvexInstance unit = instance;
  for (auto& item : unit.items) item.value = 1;
  if (check_hall_maxmin(unit, std::vector<Value>(unit.agent_count(), Value(1))))
    throw std::domain_error("solve_maxmin: optimum is zero, the agents cannot all receive an item");

  int count = 0;
  Value hi = instance.total_value() / static_cast<long>(instance.agent_count());
  std::optional<Probe> best;
  if (auto top = probe(instance, hi, k, options, count); top.assignment) best = std::move(top);

  Value lo = best ? hi : Value(0);
  for (int it = 0; !best || (hi - lo > delta * lo); ++it) {
    if (it >= options.max_iterations) break;
    Value mid = (lo + hi) / 2;
    auto p = probe(instance, mid, k, options, count);
    if (p.assignment) {
      lo = mid;
      best = std::move(p);
    } else {
      hi = mid;
    }
  }
  if (!best) throw std::runtime_error("solve_maxmin: no successful guess within the iteration cap");

  SolveResult result{best->t, std::move(*best->assignment), 0, maxmin_factor(k) * (1 - delta), count};
  result.objective = objective_of(instance, result.assignment);
  return result;
}

SolveResult solve_minmax(const ConvexInstance& instance, int k, const SolveOptions& options) {
  if (instance.mode != Mode::MinMax) throw std::invalid_argument("solve_minmax: instance is not in minmax mode");
  require_valid(instance);
  if (k < 4) throw std::invalid_argument("k must be >= 4");
  const Value delta = effective_delta(options, k);

  int count = 0;
  const Value total = instance.total_value();
  Value lo = total / static_cast<long>(instance.agent_count());
  Value hi = total;
  auto best = probe(instance, hi, k, options, count);
  if (!best.assignment) throw std::logic_error("solve_minmax: the total processing time must be a feasible guess");

  if (lo < hi) {
    if (auto bottom = probe(instance, lo, k, options, count); bottom.assignment) {
      best = std::move(bottom);
      hi = lo;
    }
  }
  for (int it = 0; hi - lo > delta * lo && it < options.max_iterations; ++it) {
    Value mid = (lo + hi) / 2;
    auto p = probe(instance, mid, k, options, count);
    if (p.assignment) {
      hi = mid;
      best = std::move(p);
    } else {
      lo = mid;
    }
  }

  SolveResult result{best.t, std::move(*best.assignment), 0, minmax_factor(k) * (1 + delta), count};
  result.objective = objective_of(instance, result.assignment);
  return result;
}

SolveResult solve(const ConvexInstance& instance, int k, const SolveOptions& options) {
  return instance.mode == Mode::MaxMin ? solve_maxmin(instance, k, options) : solve_minmax(instance, k, options);
}

VerifyReport verify(const ConvexInstance& instance, const Assignment& assignment) {
  VerifyReport report;
  const std::size_t m = instance.item_count();
  const std::size_t n = instance.agent_count();
  if (assignment.bundles.size() != n) {
    report.violations.push_back("expected " + std::to_string(n) + " bundles, got " +
                                std::to_string(assignment.bundles.size()));
    return report;
  }
  std::vector<int> times(m, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& bundle = assignment.bundles[a];
    if (bundle.size() != m) {
      report.violations.push_back("bundle of " + instance.agents[a].id + " has the wrong item count");
      report.agent_values.push_back(0);
      continue;
    }
    Value total = 0;
    for (std::size_t i : members(bundle)) {
      ++times[i];
      total += instance.items[i].value;
      if (!instance.agents[a].covers(i))
        report.violations.push_back("item " + instance.items[i].id + " lies outside the interval of " +
                                    instance.agents[a].id);
    }
    report.agent_values.push_back(total);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (times[i] == 0) report.violations.push_back("item " + instance.items[i].id + " is unassigned");
    if (times[i] > 1) report.violations.push_back("item " + instance.items[i].id + " is assigned more than once");
  }
  if (!report.agent_values.empty()) {
    report.objective = instance.mode == Mode::MaxMin
                           ? *std::min_element(report.agent_values.begin(), report.agent_values.end())
                           : *std::max_element(report.agent_values.begin(), report.agent_values.end());
  }
  report.feasible = report.violations.empty();
  return report;
}

}  // namespace ordalloc
