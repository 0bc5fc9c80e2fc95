#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordalloc/value.hpp"

namespace ordalloc {

enum class Mode { MaxMin, MinMax };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// An item (Max-Min) or a job (Min-Max) at a fixed position of the order.
struct Item {
  std::string id;
  Value value;
};

/// A player (Max-Min) or a machine (Min-Max). Its neighbourhood is the
/// closed item interval [first, last], 0-based.
struct Agent {
  std::string id;
  std::size_t first = 0;
  std::size_t last = 0;
  Value demand = 1;

  bool covers(std::size_t item) const { return first <= item && item <= last; }
};

/// Bipartite instance with the item order given explicitly. Treated as
/// immutable once built; algorithms take it by const reference.
struct ConvexInstance {
  Mode mode = Mode::MaxMin;
  std::vector<Item> items;
  std::vector<Agent> agents;

  std::size_t item_count() const { return items.size(); }
  std::size_t agent_count() const { return agents.size(); }
  std::vector<Value> values() const;
  Value total_value() const;
  ItemSet interval(std::size_t agent) const;
};

struct Violation {
  enum class Kind {
    EmptyInstance,
    BadInterval,
    UncoveredItem,
    MarginedInclusion,
    NonPositiveValue,
    NonPositiveDemand,
  };
  Kind kind;
  std::string message;
  std::optional<std::size_t> agent;
  std::optional<std::size_t> other_agent;
  std::optional<std::size_t> item;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks interval bounds, positivity, coverage of every item and the
/// absence of margined inclusions. Violations are returned, never thrown.
ValidationReport validate(const ConvexInstance& instance);

/// Agent indices sorted by (first, last); ties keep input order.
std::vector<std::size_t> lexicographic_order(const ConvexInstance& instance);

bool is_lexicographic(const ConvexInstance& instance);

/// Copy of `instance` with agents permuted into lexicographic order.
ConvexInstance lexicographic_copy(const ConvexInstance& instance);

/// Induced subgraph on the surviving items and the agent prefix p_1..p_j
/// of a lexicographically ordered instance. The parent instance is
/// passed alongside wherever a Subgraph is consumed.
struct Subgraph {
  ItemSet items;
  std::size_t agents = 0;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

Subgraph full_graph(const ConvexInstance& instance);

/// Keeps agents p_1..p_j and every item not in `removed`.
/// Requires a lexicographically ordered instance and j <= n.
Subgraph remainder(const ConvexInstance& instance, const ItemSet& removed, std::size_t j);

/// Union of the intervals of agents p_1..p_j.
ItemSet coverage(const ConvexInstance& instance, std::size_t j);

/// Surviving items adjacent to no surviving agent.
ItemSet stranded_items(const ConvexInstance& instance, const Subgraph& sub);

/// Surviving items adjacent to exactly one surviving agent, with that owner.
std::map<std::size_t, std::size_t> private_items(const ConvexInstance& instance, const Subgraph& sub);

}  // namespace ordalloc
