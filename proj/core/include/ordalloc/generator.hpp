#pragma once

#include <cstdint>
#include <random>

#include "ordalloc/assignment.hpp"
#include "ordalloc/instance.hpp"

namespace ordalloc {

/// mt19937_64 with portable bounded draws (rejection sampling), so a seed
/// yields the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, size - 1)); }

 private:
  std::mt19937_64 engine_;
};

struct ValueRange {
  Value lo{1, 12};
  Value hi{1};
  int max_denominator = 12;
};

/// Uniform over the rationals in [lo, hi] with denominator <= max_denominator.
/// Throws std::invalid_argument if the set is empty.
Value draw_value(Rng& rng, const ValueRange& range);

/// n intervals over m items, both endpoint sequences non-decreasing and
/// covering [1,m]. Items are x1..xm, agents p1..pn (m1..mn in minmax mode).
ConvexInstance gen_inclusion_free(Rng& rng, std::size_t n, std::size_t m, Mode mode = Mode::MaxMin,
                                  const ValueRange& range = {});
ConvexInstance gen_inclusion_free(std::uint64_t seed, std::size_t n, std::size_t m, Mode mode = Mode::MaxMin,
                                  const ValueRange& range = {});

struct Planted {
  ConvexInstance instance;
  Assignment assignment;
};

/// Every agent receives a non-empty bundle inside its interval, worth at
/// least t (maxmin) or at most t (minmax). Hence OPT >= t, resp. OPT <= t.
Planted gen_planted(Rng& rng, std::size_t n, std::size_t m, const Value& t, Mode mode = Mode::MaxMin,
                    const ValueRange& range = {});
Planted gen_planted(std::uint64_t seed, std::size_t n, std::size_t m, const Value& t, Mode mode = Mode::MaxMin,
                    const ValueRange& range = {});

}  // namespace ordalloc
