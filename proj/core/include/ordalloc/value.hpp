#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <gmpxx.h>

namespace ordalloc {

/// Exact rational number. Every value, threshold and comparison in a
/// decision path goes through this type; there is no floating point.
using Value = mpq_class;

/// Set of item positions (0-based) within an instance's item order.
using ItemSet = boost::dynamic_bitset<std::uint64_t>;

/// Parses "num/den", "num" or a plain decimal such as "0.6".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Value parse_value(std::string_view text);

/// Canonical "num/den" text; integers are written with a "/1" suffix.
std::string format_value(const Value& v);

/// Builds num/den in lowest terms.
Value make_value(long num, long den = 1);

/// Sum of values[i] over all i in `items`.
Value sum_over(const ItemSet& items, std::span<const Value> values);

/// Item positions of `items` in increasing order.
std::vector<std::size_t> members(const ItemSet& items);

/// Item set of size `m` holding exactly the positions [first, last].
ItemSet interval_set(std::size_t m, std::size_t first, std::size_t last);

}  // namespace ordalloc
