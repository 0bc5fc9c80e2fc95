#include "ordalloc/alignment.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace ordalloc {

namespace {

void require_structure(const RoundedInstance& rounded, const Assignment& assignment) {
  if (!is_lexicographic(rounded.instance))
    throw std::invalid_argument("alignment: agents must be in lexicographic order");
  const std::size_t m = rounded.item_count();
  if (assignment.bundles.size() != rounded.agent_count())
    throw std::invalid_argument("alignment: one bundle per agent required");
  ItemSet seen(m);
  for (std::size_t a = 0; a < assignment.bundles.size(); ++a) {
    const auto& bundle = assignment.bundles[a];
    if (bundle.size() != m) throw std::invalid_argument("alignment: bundle size mismatch");
    if (seen.intersects(bundle)) throw std::invalid_argument("alignment: bundles overlap");
    if (!bundle.is_subset_of(rounded.instance.interval(a)))
      throw std::invalid_argument("alignment: bundle of " + rounded.instance.agents[a].id + " leaves its interval");
    seen |= bundle;
  }
}

ItemSet class_mask(const RoundedInstance& rounded, int category) {
  ItemSet mask(rounded.item_count());
  for (std::size_t i = 0; i < rounded.item_count(); ++i)
    if (rounded.category[i] == category) mask.set(i);
  return mask;
}

/// Items left after removing the bundles of agents >= from.
ItemSet remaining_after(const Assignment& assignment, std::size_t from, std::size_t m) {
  ItemSet left(m);
  left.set();
  for (std::size_t a = from; a < assignment.bundles.size(); ++a) left -= assignment.bundles[a];
  return left;
}

/// The `count` highest positions of `pool`.
ItemSet rightmost(const ItemSet& pool, std::size_t count) {
  ItemSet out(pool.size());
  const auto positions = members(pool);
  for (std::size_t t = positions.size() - std::min(count, positions.size()); t < positions.size(); ++t)
    out.set(positions[t]);
  return out;
}

void align_big(const RoundedInstance& rounded, Assignment& out) {
  const std::size_t m = rounded.item_count();
  const std::size_t n = rounded.agent_count();
  const int categories = rounded.rounding.categories();
  std::vector<ItemSet> classes;
  for (int c = 0; c <= categories; ++c) classes.push_back(class_mask(rounded, c));

  std::vector<std::optional<std::size_t>> owner(m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i : members(out.bundles[a])) owner[i] = a;

  for (std::size_t j = n; j-- > 0;) {
    const ItemSet interval = rounded.instance.interval(j);
    for (int c = 1; c <= categories; ++c) {
      const ItemSet& cls = classes[static_cast<std::size_t>(c)];
      const ItemSet pool = remaining_after(out, j + 1, m) & interval & cls;
      const ItemSet held = out.bundles[j] & cls;
      const ItemSet target = rightmost(pool, held.count());
      const auto give = members(held - target);
      const auto take = members(target - held);
      for (std::size_t t = 0; t < give.size(); ++t) {
        const std::size_t x_left = give[t];
        const std::size_t x_right = take[t];
        out.bundles[j].reset(x_left);
        out.bundles[j].set(x_right);
        if (auto other = owner[x_right]) {
          // other < j and x_left lies between its left end and x_right
          out.bundles[*other].reset(x_right);
          out.bundles[*other].set(x_left);
          owner[x_left] = *other;
        } else {
          owner[x_left].reset();
        }
        owner[x_right] = j;
      }
    }
  }
}

/// Depth-first search over per-agent small counts, p_n down to p_1.
class SmallRepacker {
 public:
  SmallRepacker(const RoundedInstance& rounded, const Assignment& big_aligned, const AssignmentVector& alpha,
                std::vector<Value> small_before)
      : rounded_(rounded),
        alpha_(alpha),
        small_before_(std::move(small_before)),
        up_(rounded.rounding.direction() == Direction::Up),
        small_mask_(class_mask(rounded, 0)) {
    const std::size_t n = rounded.agent_count();
    for (std::size_t a = 0; a < n; ++a) {
      big_value_.push_back(sum_over(big_aligned.bundles[a] - small_mask_, rounded.values));
      coverage_.push_back(coverage(rounded.instance, a));
    }
    picks_.resize(n);
  }

  std::optional<std::vector<ItemSet>> run() {
    const std::size_t n = rounded_.agent_count();
    if (!search(n - 1, small_mask_)) return std::nullopt;
    return picks_;
  }

 private:
  bool search(std::size_t j, const ItemSet& available) {
    if (failed_.contains({j, available})) return false;
    const ItemSet interval = rounded_.instance.interval(j);
    const auto pool = members(available & interval);
    const Value unit(1, rounded_.rounding.k());

    // suffix sums: value of the rightmost c items of pool
    std::vector<Value> suffix(pool.size() + 1, 0);
    for (std::size_t c = 1; c <= pool.size(); ++c) suffix[c] = suffix[c - 1] + rounded_.values[pool[pool.size() - c]];

    // Rounding up: the smallest count clearing w - 1/k first, then larger
    // ones. Rounding down: the largest count first.
    std::vector<std::size_t> counts;
    if (up_) {
      const Value floor = small_before_[j] - unit;
      std::size_t first = 0;
      while (first < pool.size() && suffix[first] <= floor) ++first;
      for (std::size_t c = first; c <= pool.size(); ++c) counts.push_back(c);
    } else {
      for (std::size_t c = pool.size() + 1; c-- > 0;) counts.push_back(c);
    }

    const Value available_value = sum_over(available, rounded_.values);
    for (std::size_t c : counts) {
      const Value& taken = suffix[c];
      if (up_) {
        if (!(taken > small_before_[j] - unit)) continue;
      } else {
        if (!(big_value_[j] + taken < 1 + unit)) continue;
      }
      ItemSet pick(available.size());
      for (std::size_t t = pool.size() - c; t < pool.size(); ++t) pick.set(pool[t]);
      const ItemSet rest = available - pick;
      if (j == 0) {
        if (rest.any()) continue;
        picks_[0] = std::move(pick);
        return true;
      }
      if (!rest.is_subset_of(coverage_[j])) continue;
      const int units = small_units(available_value - taken, rounded_.rounding.k(), rounded_.rounding.direction());
      if (units != alpha_[j - 1].small_units()) continue;
      picks_[j] = std::move(pick);
      if (search(j - 1, rest)) return true;
    }
    failed_.insert({j, available});
    return false;
  }

  const RoundedInstance& rounded_;
  const AssignmentVector& alpha_;
  std::vector<Value> small_before_;
  bool up_;
  ItemSet small_mask_;
  std::vector<Value> big_value_;
  std::vector<ItemSet> coverage_;
  std::vector<ItemSet> picks_;
  std::set<std::pair<std::size_t, ItemSet>> failed_;
};

}  // namespace

AssignmentVector assignment_vector(const RoundedInstance& rounded, const Assignment& assignment) {
  require_structure(rounded, assignment);
  const std::size_t n = rounded.agent_count();
  const std::size_t m = rounded.item_count();
  AssignmentVector alpha(n);
  ItemSet left(m);
  left.set();
  for (std::size_t j = n; j-- > 0;) {
    alpha[j] = input_vector(rounded, left);
    left -= assignment.bundles[j];
  }
  return alpha;
}

bool is_right_aligned(const RoundedInstance& rounded, const Assignment& assignment) {
  require_structure(rounded, assignment);
  const std::size_t m = rounded.item_count();
  const int categories = rounded.rounding.categories();
  std::vector<ItemSet> classes;
  for (int c = 0; c <= categories; ++c) classes.push_back(class_mask(rounded, c));

  ItemSet left(m);
  left.set();
  for (std::size_t j = rounded.agent_count(); j-- > 0;) {
    const ItemSet interval = rounded.instance.interval(j);
    for (const ItemSet& cls : classes) {
      const ItemSet held = assignment.bundles[j] & cls;
      if (held != rightmost(left & interval & cls, held.count())) return false;
    }
    left -= assignment.bundles[j];
  }
  return true;
}

bool is_non_wasteful(const RoundedInstance& rounded, const Assignment& assignment) {
  require_structure(rounded, assignment);
  const std::size_t m = rounded.item_count();
  ItemSet left(m);
  left.set();
  for (std::size_t j = rounded.agent_count(); j-- > 1;) {
    left -= assignment.bundles[j];
    // left is H^j with agents p_1..p_j (j agents kept)
    if (!left.is_subset_of(coverage(rounded.instance, j))) return false;
  }
  return true;
}

Assignment align(const RoundedInstance& rounded, const Assignment& one_assignment) {
  require_structure(rounded, one_assignment);
  if (!one_assignment.assigned().all()) throw std::invalid_argument("align: input must assign every item");
  const bool up = rounded.rounding.direction() == Direction::Up;
  const auto values = bundle_values(one_assignment, rounded.values);
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (up ? values[a] < 1 : values[a] > 1)
      throw std::invalid_argument("align: input is not a 1-assignment (agent " + rounded.instance.agents[a].id + ")");
  }

  const AssignmentVector alpha = assignment_vector(rounded, one_assignment);
  const ItemSet small = class_mask(rounded, 0);
  std::vector<Value> small_before;
  for (const auto& bundle : one_assignment.bundles) small_before.push_back(sum_over(bundle & small, rounded.values));

  Assignment out = one_assignment;
  align_big(rounded, out);

  SmallRepacker repacker(rounded, out, alpha, std::move(small_before));
  auto picks = repacker.run();
  if (!picks) throw std::runtime_error("align: no vector-preserving small repacking exists");
  for (std::size_t a = 0; a < out.bundles.size(); ++a) out.bundles[a] = (out.bundles[a] - small) | (*picks)[a];
  return out;
}

}  // namespace ordalloc
