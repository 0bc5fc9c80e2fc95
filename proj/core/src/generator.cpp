#include "ordalloc/generator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ordalloc {

namespace {

void check_sizes(std::size_t n, std::size_t m) {
  if (n == 0 || m < n) throw std::invalid_argument("generator: need n >= 1 and m >= n");
}

ConvexInstance skeleton(std::size_t n, std::size_t m, Mode mode) {
  ConvexInstance instance;
  instance.mode = mode;
  const std::string agent_prefix = mode == Mode::MaxMin ? "p" : "m";
  const std::string item_prefix = mode == Mode::MaxMin ? "x" : "j";
  for (std::size_t i = 0; i < m; ++i) instance.items.push_back({item_prefix + std::to_string(i + 1), Value(1)});
  for (std::size_t a = 0; a < n; ++a) instance.agents.push_back({agent_prefix + std::to_string(a + 1), 0, 0, Value(1)});
  return instance;
}

// Raises right endpoints so consecutive intervals leave no gap.
void close_gaps(std::vector<std::size_t>& first, std::vector<std::size_t>& last) {
  for (std::size_t a = 0; a + 1 < first.size(); ++a)
    if (last[a] + 1 < first[a + 1]) last[a] = first[a + 1] - 1;
}

}  // namespace

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t size = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % size;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % size;
}

Value draw_value(Rng& rng, const ValueRange& range) {
  std::vector<Value> support;
  for (int den = 1; den <= range.max_denominator; ++den) {
    for (long num = 1;; ++num) {
      Value v(num, den);
      if (v > range.hi) break;
      if (v >= range.lo && gcd(mpz_class(num), mpz_class(den)) == 1) support.push_back(v);
    }
  }
  if (support.empty()) throw std::invalid_argument("generator: value range contains no admissible rational");
  std::sort(support.begin(), support.end());
  return support[rng.index(support.size())];
}

ConvexInstance gen_inclusion_free(Rng& rng, std::size_t n, std::size_t m, Mode mode, const ValueRange& range) {
  check_sizes(n, m);
  auto instance = skeleton(n, m, mode);
  std::vector<std::size_t> first(n), last(n);
  for (auto& l : first) l = rng.index(m);
  for (auto& r : last) r = rng.index(m);
  std::sort(first.begin(), first.end());
  std::sort(last.begin(), last.end());
  for (std::size_t a = 0; a < n; ++a) last[a] = std::max(last[a], first[a]);
  first.front() = 0;
  last.back() = m - 1;
  close_gaps(first, last);
  for (std::size_t a = 0; a < n; ++a) {
    instance.agents[a].first = first[a];
    instance.agents[a].last = last[a];
  }
  for (auto& item : instance.items) item.value = draw_value(rng, range);
  return instance;
}

ConvexInstance gen_inclusion_free(std::uint64_t seed, std::size_t n, std::size_t m, Mode mode,
                                  const ValueRange& range) {
  Rng rng(seed);
  return gen_inclusion_free(rng, n, m, mode, range);
}

Planted gen_planted(Rng& rng, std::size_t n, std::size_t m, const Value& t, Mode mode, const ValueRange& range) {
  check_sizes(n, m);
  if (t <= 0) throw std::invalid_argument("generator: planted target must be positive");
  auto instance = skeleton(n, m, mode);

  // One representative item per agent, increasing left to right.
  std::vector<std::size_t> positions(m);
  for (std::size_t i = 0; i < m; ++i) positions[i] = i;
  for (std::size_t i = 0; i < n; ++i) std::swap(positions[i], positions[i + rng.index(m - i)]);
  std::vector<std::size_t> rep(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(rep.begin(), rep.end());

  std::vector<std::size_t> first(n), last(n);
  for (std::size_t a = 0; a < n; ++a) {
    first[a] = static_cast<std::size_t>(rng.uniform(0, rep[a]));
    last[a] = static_cast<std::size_t>(rng.uniform(rep[a], m - 1));
    if (a > 0) {
      first[a] = std::max(first[a], first[a - 1]);
      last[a] = std::max(last[a], last[a - 1]);
    }
  }
  first.front() = 0;
  last.back() = m - 1;
  for (std::size_t a = 0; a + 1 < n; ++a)
    if (last[a] + 1 < first[a + 1]) first[a + 1] = last[a] + 1;
  for (std::size_t a = 0; a < n; ++a) {
    instance.agents[a].first = first[a];
    instance.agents[a].last = last[a];
  }

  std::vector<std::size_t> owner(m, n);
  for (std::size_t a = 0; a < n; ++a) owner[rep[a]] = a;
  for (std::size_t i = 0; i < m; ++i) {
    if (owner[i] != n) continue;
    std::vector<std::size_t> candidates;
    for (std::size_t a = 0; a < n; ++a)
      if (instance.agents[a].covers(i)) candidates.push_back(a);
    owner[i] = candidates[rng.index(candidates.size())];
  }

  for (auto& item : instance.items) item.value = draw_value(rng, range) * t;
  for (std::size_t a = 0; a < n; ++a) {
    Value total = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (owner[i] == a) total += instance.items[i].value;
    const bool short_of = mode == Mode::MaxMin ? total < t : total > t;
    if (!short_of) continue;
    const Value factor = t / total;
    for (std::size_t i = 0; i < m; ++i)
      if (owner[i] == a) instance.items[i].value *= factor;
  }
  return {std::move(instance), Assignment::from_owners(mode, n, owner)};
}

Planted gen_planted(std::uint64_t seed, std::size_t n, std::size_t m, const Value& t, Mode mode,
                    const ValueRange& range) {
  Rng rng(seed);
  return gen_planted(rng, n, m, t, mode, range);
}

}  // namespace ordalloc
