#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordalloc/assignment.hpp"
#include "ordalloc/rounding.hpp"

namespace ordalloc {

/// Reconstructs the remainder graph for input vector `nu` and agent prefix
/// p_1..p_j of a lexicographically ordered rounded instance:
///  - big items: the leftmost nu_c items of each category c;
///  - small items, rounding up: the longest leftmost run of small items
///    whose total stays below (nu_0+1)/k;
///  - small items, rounding down: the shortest leftmost run whose total
///    exceeds (nu_0-1)/k;
/// the run is then clamped so that it keeps every small item adjacent to
/// none of p_{j+1}..p_n and no small item adjacent to none of p_1..p_j.
/// Returns std::nullopt when some chosen big item is adjacent to none of
/// p_1..p_j. Throws std::invalid_argument unless nu <= nu_in.
std::optional<Subgraph> retrieve(const RoundedInstance& rounded, const InputVector& nu, std::size_t j);

/// True iff `before` exists, `bundle` lies inside the interval of `agent`,
/// and the rounded bundle value is >= 1 - 3/k (rounding up) or
/// <= 1 + 3/k (rounding down).
bool feasible(const RoundedInstance& rounded, const std::optional<Subgraph>& before, const ItemSet& bundle,
              std::size_t agent);

/// Bundle value target of `feasible`: 1 - 3/k or 1 + 3/k.
Value bundle_target(const RoundingScheme& rounding);

/// Marked entries only. rows[a] holds the row of agent p_{a+1}; each
/// marked vector maps to its back-pointer into row a+1 (row n points at
/// the full instance vector).
struct DPTable {
  InputVector full;
  std::vector<std::map<InputVector, InputVector>> rows;

  bool success() const;

  /// One line per marked entry, rows n..1, vectors ascending:
  ///   row=<j> nu=<nu_0,...,nu_C> ptr=<...>
  std::string trace() const;
};

/// Forward phase. For every marked nu' of row j+1 (ascending) and every
/// unmarked nu <= nu' (ascending), marks nu in row j with ptr nu' when the
/// difference of retrieve(nu', j) and retrieve(nu, j-1) is feasible for p_j.
/// The first successful predecessor is kept, so ptr is the
/// lexicographically smallest one.
DPTable forward(const RoundedInstance& rounded);

/// Backward phase: follows ptr from row 1's zero vector up to nu_in.
/// Throws std::runtime_error when the table has no success entry.
Assignment backward(const DPTable& table, const RoundedInstance& rounded);

/// forward + backward; std::nullopt on failure.
std::optional<Assignment> solve_rounded(const RoundedInstance& rounded, std::string* trace = nullptr);

}  // namespace ordalloc
