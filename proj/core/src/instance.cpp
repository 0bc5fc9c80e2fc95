#include "ordalloc/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordalloc {

std::string to_string(Mode mode) { return mode == Mode::MaxMin ? "maxmin" : "minmax"; }

Mode parse_mode(std::string_view text) {
  if (text == "maxmin") return Mode::MaxMin;
  if (text == "minmax") return Mode::MinMax;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected maxmin or minmax)");
}

std::vector<Value> ConvexInstance::values() const {
  std::vector<Value> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.value);
  return out;
}

Value ConvexInstance::total_value() const {
  Value total = 0;
  for (const auto& item : items) total += item.value;
  return total;
}

ItemSet ConvexInstance::interval(std::size_t agent) const {
  const auto& a = agents.at(agent);
  return interval_set(items.size(), a.first, a.last);
}

ValidationReport validate(const ConvexInstance& instance) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::string message, std::optional<std::size_t> agent = {},
                 std::optional<std::size_t> other = {}, std::optional<std::size_t> item = {}) {
    report.violations.push_back({kind, std::move(message), agent, other, item});
  };

  const std::size_t m = instance.item_count();
  const std::size_t n = instance.agent_count();
  if (m == 0 || n == 0) {
    add(Violation::Kind::EmptyInstance, "instance needs at least one item and one agent");
    return report;
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (instance.items[i].value <= 0)
      add(Violation::Kind::NonPositiveValue, "item " + instance.items[i].id + " has non-positive value", {}, {}, i);
  }

  bool intervals_ok = true;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& agent = instance.agents[a];
    if (agent.first > agent.last || agent.last >= m) {
      intervals_ok = false;
      add(Violation::Kind::BadInterval,
          "agent " + agent.id + " has interval [" + std::to_string(agent.first + 1) + "," +
              std::to_string(agent.last + 1) + "] outside [1," + std::to_string(m) + "]",
          a);
    }
    if (agent.demand <= 0) add(Violation::Kind::NonPositiveDemand, "agent " + agent.id + " has non-positive demand", a);
  }
  if (!intervals_ok) return report;

  std::vector<int> degree(m, 0);
  for (const auto& agent : instance.agents)
    for (std::size_t i = agent.first; i <= agent.last; ++i) ++degree[i];
  for (std::size_t i = 0; i < m; ++i) {
    if (degree[i] == 0)
      add(Violation::Kind::UncoveredItem, "item " + instance.items[i].id + " is adjacent to no agent", {}, {}, i);
  }

  // In lexicographic order the right endpoints must be non-decreasing; any
  // agent whose right endpoint drops below the running maximum sits strictly
  // inside the agent holding that maximum.
  const auto order = lexicographic_order(instance);
  std::size_t widest = order.front();
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    const std::size_t q = order[pos];
    const auto& outer = instance.agents[widest];
    const auto& inner = instance.agents[q];
    if (inner.last < outer.last) {
      add(Violation::Kind::MarginedInclusion,
          "margined inclusion (" + outer.id + "," + inner.id + ")", widest, q);
    } else {
      widest = q;
    }
  }
  return report;
}

std::vector<std::size_t> lexicographic_order(const ConvexInstance& instance) {
  std::vector<std::size_t> order(instance.agent_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = instance.agents[a];
    const auto& y = instance.agents[b];
    return std::pair(x.first, x.last) < std::pair(y.first, y.last);
  });
  return order;
}

bool is_lexicographic(const ConvexInstance& instance) {
  const auto& agents = instance.agents;
  for (std::size_t a = 1; a < agents.size(); ++a) {
    if (std::pair(agents[a].first, agents[a].last) < std::pair(agents[a - 1].first, agents[a - 1].last)) return false;
  }
  return true;
}

ConvexInstance lexicographic_copy(const ConvexInstance& instance) {
  ConvexInstance out{instance.mode, instance.items, {}};
  for (std::size_t a : lexicographic_order(instance)) out.agents.push_back(instance.agents[a]);
  return out;
}

Subgraph full_graph(const ConvexInstance& instance) {
  ItemSet all(instance.item_count());
  all.set();
  return {std::move(all), instance.agent_count()};
}

Subgraph remainder(const ConvexInstance& instance, const ItemSet& removed, std::size_t j) {
  if (j > instance.agent_count()) throw std::invalid_argument("remainder: agent prefix longer than instance");
  if (removed.size() != instance.item_count()) throw std::invalid_argument("remainder: item set size mismatch");
  if (!is_lexicographic(instance)) throw std::invalid_argument("remainder: agents must be in lexicographic order");
  ItemSet items = ~removed;
  return {std::move(items), j};
}

ItemSet coverage(const ConvexInstance& instance, std::size_t j) {
  ItemSet covered(instance.item_count());
  for (std::size_t a = 0; a < j && a < instance.agent_count(); ++a) {
    const auto& agent = instance.agents[a];
    covered.set(agent.first, agent.last - agent.first + 1, true);
  }
  return covered;
}

ItemSet stranded_items(const ConvexInstance& instance, const Subgraph& sub) {
  return sub.items - coverage(instance, sub.agents);
}

std::map<std::size_t, std::size_t> private_items(const ConvexInstance& instance, const Subgraph& sub) {
  const std::size_t m = instance.item_count();
  std::vector<int> degree(m, 0);
  std::vector<std::size_t> owner(m, 0);
  for (std::size_t a = 0; a < sub.agents; ++a) {
    const auto& agent = instance.agents[a];
    for (std::size_t i = agent.first; i <= agent.last; ++i) {
      ++degree[i];
      owner[i] = a;
    }
  }
  std::map<std::size_t, std::size_t> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (sub.items.test(i) && degree[i] == 1) out.emplace(i, owner[i]);
  }
  return out;
}

}  // namespace ordalloc
