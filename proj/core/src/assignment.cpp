#include "ordalloc/assignment.hpp"

#include <stdexcept>

namespace ordalloc {

Assignment Assignment::empty(Mode mode, std::size_t agents, std::size_t items) {
  return {mode, std::vector<ItemSet>(agents, ItemSet(items))};
}

Assignment Assignment::from_owners(Mode mode, std::size_t agents, std::span<const std::size_t> owner) {
  Assignment out = empty(mode, agents, owner.size());
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (owner[i] >= agents) throw std::out_of_range("from_owners: owner index out of range");
    out.bundles[owner[i]].set(i);
  }
  return out;
}

ItemSet Assignment::assigned() const {
  if (bundles.empty()) return {};
  ItemSet all(bundles.front().size());
  for (const auto& b : bundles) all |= b;
  return all;
}

bool is_feasible_partition(const ConvexInstance& instance, const Assignment& assignment) {
  const std::size_t m = instance.item_count();
  if (assignment.bundles.size() != instance.agent_count()) return false;
  ItemSet seen(m);
  for (std::size_t a = 0; a < assignment.bundles.size(); ++a) {
    const auto& bundle = assignment.bundles[a];
    if (bundle.size() != m) return false;
    if (seen.intersects(bundle)) return false;
    if (!bundle.is_subset_of(instance.interval(a))) return false;
    seen |= bundle;
  }
  return seen.all();
}

std::vector<Value> bundle_values(const Assignment& assignment, std::span<const Value> values) {
  std::vector<Value> out;
  out.reserve(assignment.bundles.size());
  for (const auto& b : assignment.bundles) out.push_back(sum_over(b, values));
  return out;
}

Assignment unpermute(const Assignment& sorted, std::span<const std::size_t> order) {
  Assignment out{sorted.mode, std::vector<ItemSet>(sorted.bundles.size())};
  for (std::size_t pos = 0; pos < order.size(); ++pos) out.bundles[order[pos]] = sorted.bundles[pos];
  return out;
}

Assignment permute(const Assignment& original, std::span<const std::size_t> order) {
  Assignment out{original.mode, std::vector<ItemSet>(original.bundles.size())};
  for (std::size_t pos = 0; pos < order.size(); ++pos) out.bundles[pos] = original.bundles[order[pos]];
  return out;
}

}  // namespace ordalloc
