#include "ordalloc/dp_engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ordalloc {

namespace {

struct Retrieved {
  ItemSet items;
  Value value;
};

/// Precomputed per-category positions and small-item prefix sums, shared by
/// every retrieve call on one rounded instance.
class Retriever {
 public:
  explicit Retriever(const RoundedInstance& rounded)
      : rounded_(rounded),
        m_(rounded.item_count()),
        k_(rounded.rounding.k()),
        up_(rounded.rounding.direction() == Direction::Up),
        full_(full_vector(rounded)) {
    if (!is_lexicographic(rounded.instance))
      throw std::invalid_argument("retrieve: agents must be in lexicographic order");
    const int categories = rounded.rounding.categories();
    by_category_.resize(static_cast<std::size_t>(categories) + 1);
    small_prefix_.push_back(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const int c = rounded.category[i];
      by_category_[static_cast<std::size_t>(c)].push_back(i);
      if (c == 0) small_prefix_.push_back(small_prefix_.back() + rounded.values[i]);
    }
    for (std::size_t j = 0; j <= rounded.agent_count(); ++j) {
      coverage_.push_back(coverage(rounded.instance, j));
      std::size_t within = 0, forced = 0;
      const std::size_t later_first = j < rounded.agent_count() ? rounded.instance.agents[j].first : m_;
      for (std::size_t i : by_category_[0]) {
        within += coverage_.back().test(i) ? 1 : 0;
        forced += i < later_first ? 1 : 0;
      }
      small_within_.push_back(within);
      small_forced_.push_back(std::min(forced, within));
    }
  }

  const InputVector& full() const { return full_; }

  /// Item set for `nu` and agent prefix p_1..p_j. The small run is clamped
  /// between the small items adjacent to none of p_{j+1}..p_n and those
  /// adjacent to some of p_1..p_j.
  Retrieved build(const InputVector& nu, std::size_t j) const {
    if (nu.size() != full_.size() || !nu.dominated_by(full_))
      throw std::invalid_argument("retrieve: input vector " + nu.to_string() + " exceeds the instance vector");
    Retrieved out{ItemSet(m_), 0};
    for (std::size_t c = 1; c < nu.size(); ++c) {
      const auto& positions = by_category_[c];
      const int count = nu.counts[c];
      for (int t = 0; t < count; ++t) out.items.set(positions[static_cast<std::size_t>(t)]);
      if (count > 0) out.value += rounded_.rounding.category_value(static_cast<int>(c)) * count;
    }
    const std::size_t taken = std::clamp(small_count(nu.small_units()), small_forced_[j], small_within_[j]);
    const auto& small = by_category_[0];
    for (std::size_t t = 0; t < taken; ++t) out.items.set(small[t]);
    out.value += small_prefix_[taken];
    return out;
  }

  bool covered(const ItemSet& items, std::size_t j) const { return items.is_subset_of(coverage_[j]); }

  const ItemSet& coverage_of(std::size_t j) const { return coverage_[j]; }

 private:
  std::size_t small_count(int units) const {
    const std::size_t available = small_prefix_.size() - 1;
    if (up_) {
      // longest prefix with total < (units+1)/k
      const Value bound(units + 1, k_);
      auto it = std::lower_bound(small_prefix_.begin(), small_prefix_.end(), bound);
      return static_cast<std::size_t>(it - small_prefix_.begin()) - 1;
    }
    // shortest prefix with total > (units-1)/k
    const Value bound(units - 1, k_);
    auto it = std::upper_bound(small_prefix_.begin(), small_prefix_.end(), bound);
    return std::min(static_cast<std::size_t>(it - small_prefix_.begin()), available);
  }

  const RoundedInstance& rounded_;
  std::size_t m_;
  int k_;
  bool up_;
  InputVector full_;
  std::vector<std::vector<std::size_t>> by_category_;
  std::vector<Value> small_prefix_;
  std::vector<ItemSet> coverage_;
  std::vector<std::size_t> small_within_;
  std::vector<std::size_t> small_forced_;
};

bool meets_target(const Value& bundle_value, const Value& target, Direction direction) {
  return direction == Direction::Up ? bundle_value >= target : bundle_value <= target;
}

/// Advances `nu` to the next vector <= bound in lexicographic order.
bool next_below(InputVector& nu, const InputVector& bound) {
  for (std::size_t i = nu.size(); i-- > 0;) {
    if (nu.counts[i] < bound.counts[i]) {
      ++nu.counts[i];
      return true;
    }
    nu.counts[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<Subgraph> retrieve(const RoundedInstance& rounded, const InputVector& nu, std::size_t j) {
  if (j > rounded.agent_count()) throw std::invalid_argument("retrieve: agent prefix longer than instance");
  Retriever retriever(rounded);
  Retrieved r = retriever.build(nu, j);
  if (!retriever.covered(r.items, j)) return std::nullopt;
  return Subgraph{std::move(r.items), j};
}

Value bundle_target(const RoundingScheme& rounding) {
  const Value slack(3, rounding.k());
  return rounding.direction() == Direction::Up ? Value(1 - slack) : Value(1 + slack);
}

bool feasible(const RoundedInstance& rounded, const std::optional<Subgraph>& before, const ItemSet& bundle,
              std::size_t agent) {
  if (!before) return false;
  if (agent >= rounded.agent_count()) return false;
  if (!bundle.is_subset_of(rounded.instance.interval(agent))) return false;
  return meets_target(sum_over(bundle, rounded.values), bundle_target(rounded.rounding), rounded.rounding.direction());
}

bool DPTable::success() const {
  if (rows.empty()) return false;
  return rows.front().contains(InputVector::zero(static_cast<int>(full.size()) - 1));
}

std::string DPTable::trace() const {
  std::ostringstream out;
  for (std::size_t a = rows.size(); a-- > 0;) {
    for (const auto& [nu, ptr] : rows[a]) {
      out << "row=" << (a + 1) << " nu=" << nu.to_string() << " ptr=" << ptr.to_string() << '\n';
    }
  }
  return out.str();
}

DPTable forward(const RoundedInstance& rounded) {
  const Retriever retriever(rounded);
  const std::size_t n = rounded.agent_count();
  const Direction direction = rounded.rounding.direction();
  const Value target = bundle_target(rounded.rounding);

  DPTable table;
  table.full = retriever.full();
  table.rows.resize(n);

  // Retrievals for agent prefixes of length a+1 (upper) and a (lower).
  using Cache = std::unordered_map<InputVector, Retrieved, InputVectorHash>;
  Cache upper_cache, lower_cache;
  auto lookup = [&](Cache& cache, const InputVector& nu, std::size_t j) -> const Retrieved& {
    auto it = cache.find(nu);
    if (it == cache.end()) it = cache.emplace(nu, retriever.build(nu, j)).first;
    return it->second;
  };

  std::vector<InputVector> predecessors{table.full};
  for (std::size_t a = n; a-- > 0;) {
    auto& row = table.rows[a];
    std::unordered_set<InputVector, InputVectorHash> marked;
    const ItemSet interval = rounded.instance.interval(a);

    for (const InputVector& upper : predecessors) {
      // predecessors are marked in row a+1 (or nu_in), so retrieve(upper, a+1) is non-null
      const Retrieved& before = lookup(upper_cache, upper, a + 1);
      const ItemSet outside = before.items - interval;
      InputVector nu = InputVector::zero(static_cast<int>(upper.size()) - 1);
      do {
        if (marked.contains(nu)) continue;
        const Retrieved& after = lookup(lower_cache, nu, a);
        if (!retriever.covered(after.items, a)) continue;
        // after is nested in before; the bundle is their difference
        if (!outside.is_subset_of(after.items)) continue;
        if (!meets_target(before.value - after.value, target, direction)) continue;
        marked.insert(nu);
        row.emplace(nu, upper);
      } while (next_below(nu, upper));
    }

    upper_cache = std::move(lower_cache);
    lower_cache.clear();
    predecessors.clear();
    predecessors.reserve(row.size());
    for (const auto& entry : row) predecessors.push_back(entry.first);
    if (predecessors.empty()) break;
  }
  return table;
}

Assignment backward(const DPTable& table, const RoundedInstance& rounded) {
  if (!table.success()) throw std::runtime_error("backward: no marked entry at the zero vector of row 1");
  const Retriever retriever(rounded);
  const std::size_t n = rounded.agent_count();
  Assignment out = Assignment::empty(rounded.mode(), n, rounded.item_count());

  InputVector current = InputVector::zero(static_cast<int>(table.full.size()) - 1);
  for (std::size_t a = 0; a < n; ++a) {
    const InputVector& upper = table.rows[a].at(current);
    const Retrieved before = retriever.build(upper, a + 1);
    const Retrieved after = retriever.build(current, a);
    out.bundles[a] = before.items - after.items;
    if (!feasible(rounded, Subgraph{before.items, a + 1}, out.bundles[a], a))
      throw std::logic_error("backward: reconstructed bundle fails the feasibility check");
    current = upper;
  }
  if (current != table.full) throw std::logic_error("backward: pointer chain does not end at the instance vector");
  return out;
}

std::optional<Assignment> solve_rounded(const RoundedInstance& rounded, std::string* trace) {
  DPTable table = forward(rounded);
  if (trace) *trace = table.trace();
  if (!table.success()) return std::nullopt;
  return backward(table, rounded);
}

}  // namespace ordalloc
