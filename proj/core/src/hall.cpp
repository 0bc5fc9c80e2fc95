#include "ordalloc/hall.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ordalloc {

namespace {

void require_sizes(const ConvexInstance& instance, std::span<const Value> bound) {
  if (bound.size() != instance.agent_count())
    throw std::invalid_argument("hall: one demand/load per agent required");
}

}  // namespace

std::vector<HallWitness> hall_violations_maxmin(const ConvexInstance& instance, std::span<const Value> demands) {
  require_sizes(instance, demands);
  const std::size_t m = instance.item_count();
  std::vector<Value> prefix(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + instance.items[i].value;

  // Agents sorted by (first, last) so that, for a fixed left end l, the
  // agents with first >= l form a suffix and membership in [l,r] only
  // depends on last <= r.
  const auto order = lexicographic_order(instance);

  std::vector<HallWitness> out;
  std::vector<Value> demand_by_last(m);
  for (std::size_t l = 0; l < m; ++l) {
    std::fill(demand_by_last.begin(), demand_by_last.end(), Value(0));
    for (std::size_t a : order) {
      const auto& agent = instance.agents[a];
      if (agent.first >= l) demand_by_last[agent.last] += demands[a];
    }
    Value demand = 0;
    for (std::size_t r = l; r < m; ++r) {
      demand += demand_by_last[r];
      Value val = prefix[r + 1] - prefix[l];
      if (val < demand) out.push_back({l, r, val, demand});
    }
  }
  return out;
}

HallResult check_hall_maxmin(const ConvexInstance& instance, std::span<const Value> demands) {
  auto all = hall_violations_maxmin(instance, demands);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<std::pair<std::size_t, std::size_t>> job_machine_ranges(const ConvexInstance& instance) {
  const auto order = lexicographic_order(instance);
  const std::size_t m = instance.item_count();
  std::vector<std::pair<std::size_t, std::size_t>> ranges(m);
  for (std::size_t job = 0; job < m; ++job) {
    std::optional<std::size_t> lo, hi;
    std::size_t seen = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (instance.agents[order[pos]].covers(job)) {
        if (!lo) lo = pos;
        hi = pos;
        ++seen;
      }
    }
    if (!lo) throw std::invalid_argument("hall: job " + instance.items[job].id + " has no machine");
    if (seen != *hi - *lo + 1)
      throw std::invalid_argument("hall: machines of job " + instance.items[job].id +
                                  " are not contiguous; instance is not inclusion-free");
    ranges[job] = {*lo, *hi};
  }
  return ranges;
}

std::vector<HallWitness> hall_violations_minmax(const ConvexInstance& instance, std::span<const Value> loads) {
  require_sizes(instance, loads);
  const auto order = lexicographic_order(instance);
  const auto ranges = job_machine_ranges(instance);
  const std::size_t n = order.size();

  std::vector<Value> prefix(n + 1, 0);
  for (std::size_t pos = 0; pos < n; ++pos) prefix[pos + 1] = prefix[pos] + loads[order[pos]];

  std::vector<HallWitness> out;
  std::vector<Value> work_by_last(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::fill(work_by_last.begin(), work_by_last.end(), Value(0));
    for (std::size_t job = 0; job < ranges.size(); ++job) {
      if (ranges[job].first >= l) work_by_last[ranges[job].second] += instance.items[job].value;
    }
    Value work = 0;
    for (std::size_t r = l; r < n; ++r) {
      work += work_by_last[r];
      Value capacity = prefix[r + 1] - prefix[l];
      if (work > capacity) out.push_back({l, r, work, capacity});
    }
  }
  return out;
}

HallResult check_hall_minmax(const ConvexInstance& instance, std::span<const Value> loads) {
  auto all = hall_violations_minmax(instance, loads);
  if (all.empty()) return std::nullopt;
  return all.front();
}

BruteforceHall check_hall_bruteforce(const ConvexInstance& instance, std::span<const Value> bound, Mode mode) {
  require_sizes(instance, bound);
  const std::size_t m = instance.item_count();
  const std::size_t n = instance.agent_count();
  const std::size_t universe = mode == Mode::MaxMin ? n : m;
  if (universe > kHallBruteforceLimit) throw std::length_error("hall bruteforce: instance exceeds size guard");

  std::vector<ItemSet> agent_items(n);
  for (std::size_t a = 0; a < n; ++a) agent_items[a] = instance.interval(a);

  // Subsets ordered by cardinality, then by mask value.
  std::vector<std::uint32_t> masks;
  masks.reserve((std::size_t{1} << universe) - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << universe); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  for (std::uint32_t mask : masks) {
    bool violated = false;
    if (mode == Mode::MaxMin) {
      ItemSet nbhd(m);
      Value demand = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (mask & (std::uint32_t{1} << a)) {
          nbhd |= agent_items[a];
          demand += bound[a];
        }
      }
      Value val = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (nbhd.test(i)) val += instance.items[i].value;
      violated = val < demand;
    } else {
      std::vector<bool> machines(n, false);
      Value work = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (!(mask & (std::uint32_t{1} << j))) continue;
        work += instance.items[j].value;
        for (std::size_t a = 0; a < n; ++a)
          if (instance.agents[a].covers(j)) machines[a] = true;
      }
      Value capacity = 0;
      for (std::size_t a = 0; a < n; ++a)
        if (machines[a]) capacity += bound[a];
      violated = work > capacity;
    }
    if (violated) {
      BruteforceHall result{false, {}};
      for (std::size_t e = 0; e < universe; ++e)
        if (mask & (std::uint32_t{1} << e)) result.subset.push_back(e);
      return result;
    }
  }
  return {};
}

}  // namespace ordalloc
