#pragma once

#include <vector>

#include "ordalloc/assignment.hpp"
#include "ordalloc/rounding.hpp"

namespace ordalloc {

/// alpha[j-1] is the input vector of the remainder graph H^j obtained by
/// removing the bundles of p_{j+1}..p_n (so alpha[n-1] is the full vector).
using AssignmentVector = std::vector<InputVector>;

/// Requires a lexicographically ordered rounded instance and pairwise
/// disjoint bundles inside their intervals; unassigned items are allowed
/// and stay in every remainder. Throws std::invalid_argument otherwise.
AssignmentVector assignment_vector(const RoundedInstance& rounded, const Assignment& assignment);

/// Peeling p_n..p_1, each agent's items of every class (small, and each big
/// category) are the rightmost items of that class left in its interval.
bool is_right_aligned(const RoundedInstance& rounded, const Assignment& assignment);

/// No remainder graph H^j, 1 <= j < n, holds an item adjacent to none of
/// p_1..p_j.
bool is_non_wasteful(const RoundedInstance& rounded, const Assignment& assignment);

/// Turns a feasible 1-assignment of the rounded instance (every bundle
/// >= 1 when rounding up, <= 1 when rounding down) into a right-aligned,
/// non-wasteful partition with the same assignment vector.
///
/// Big items are aligned first: from p_n down to p_1 and category by
/// category, each misaligned item is swapped with the aligned item it
/// should hold; the holder of that item precedes the agent, so the swap
/// stays inside both intervals. Small items are then repacked from p_n
/// down to p_1: each agent takes the rightmost c available small items,
/// where c is the smallest count keeping its value above w - 1/k (rounding
/// up; w is the agent's original small value) or the largest count keeping
/// its load below 1 + 1/k (rounding down), subject to reproducing the
/// original small coordinate of every remainder vector and leaving no item
/// stranded. If the preferred count breaks a later agent, other counts are
/// tried in order.
///
/// Throws std::invalid_argument when the input is not a 1-assignment and
/// std::runtime_error if no admissible small repacking exists.
Assignment align(const RoundedInstance& rounded, const Assignment& one_assignment);

}  // namespace ordalloc
