#include <gtest/gtest.h>

#include "ordalloc/alignment.hpp"
#include "ordalloc/dp_engine.hpp"
#include "ordalloc/generator.hpp"
#include "ordalloc/oracle.hpp"
#include "ordalloc/solver.hpp"
#include "support/fixtures.hpp"

namespace ordalloc {
namespace {

RoundedInstance e1_rounded() { return round_instance(testing::e1(), scheme(10, Direction::Up)); }

RoundedInstance scaled_rounded(const ConvexInstance& inst, const Value& t, int k) {
  return round_instance(*scale(inst, t), scheme(k, direction_for(inst.mode)));
}

InputVector e1_vector(int small, int squares) {
  auto nu = InputVector::zero(25);
  nu.counts[0] = small;
  nu.counts[10] = squares;
  return nu;
}

ItemSet ids(const ConvexInstance& inst, const std::vector<std::string>& names) {
  return testing::bundles_by_id(inst, {names}).bundles[0];
}

TEST(Retrieve, ExampleVector) {
  const auto rounded = e1_rounded();
  const auto sub = retrieve(rounded, e1_vector(5, 2), 1);
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->agents, 1u);
  EXPECT_EQ(sub->items, ids(rounded.instance, testing::concat({{"s1", "s2"}, testing::range_ids("c", 1, 5)})));
}

TEST(Retrieve, StrandedItemsGiveNull) {
  const auto rounded = e1_rounded();
  EXPECT_FALSE(retrieve(rounded, e1_vector(5, 4), 1));
  EXPECT_TRUE(retrieve(rounded, e1_vector(5, 4), 2));
}

TEST(Retrieve, FullVectorIsWholeInstance) {
  const auto rounded = e1_rounded();
  const auto sub = retrieve(rounded, full_vector(rounded), 3);
  ASSERT_TRUE(sub);
  EXPECT_EQ(*sub, full_graph(rounded.instance));
  EXPECT_THROW(retrieve(rounded, e1_vector(16, 0), 3), std::invalid_argument);
}

TEST(Retrieve, MonotoneNesting) {
  const auto rounded = e1_rounded();
  for (int s = 0; s <= 15; ++s) {
    for (int b = 0; b <= 6; ++b) {
      const auto small = retrieve(rounded, e1_vector(s, b), 3);
      if (!small) continue;
      for (int s2 = s; s2 <= 15; ++s2) {
        for (int b2 = b; b2 <= 6; ++b2) {
          const auto big = retrieve(rounded, e1_vector(s2, b2), 3);
          if (big) EXPECT_TRUE(small->items.is_subset_of(big->items));
        }
      }
    }
  }
}

TEST(Feasible, ExampleBundle) {
  const auto rounded = e1_rounded();
  const auto before = retrieve(rounded, full_vector(rounded), 3);
  const auto bundle = testing::e1_assignment_one(rounded.instance).bundles[0];
  EXPECT_TRUE(feasible(rounded, before, bundle, 0));
  EXPECT_FALSE(feasible(rounded, std::nullopt, bundle, 0));
  EXPECT_FALSE(feasible(rounded, before, ids(rounded.instance, {"s1", "s2", "s3"}), 0));
  EXPECT_EQ(bundle_target(rounded.rounding), Value(7, 10));
}

TEST(Forward, ExampleSucceeds) {
  const auto rounded = e1_rounded();
  const auto table = forward(rounded);
  EXPECT_TRUE(table.success());
  EXPECT_EQ(table.rows.size(), 3u);
  const auto a = backward(table, rounded);
  EXPECT_TRUE(is_feasible_partition(rounded.instance, a));
  for (const auto& v : bundle_values(a, rounded.values)) EXPECT_GE(v, Value(7, 10));
}

TEST(Forward, SingleItem) {
  const auto rounded = round_instance(testing::t0(), scheme(4, Direction::Up));
  const auto table = forward(rounded);
  ASSERT_TRUE(table.success());
  EXPECT_EQ(backward(table, rounded), testing::bundles_by_id(rounded.instance, {{"x1"}}));
}

TEST(SolveRounded, FailsBelowTarget) {
  auto inst = testing::t0();
  inst.items[0].value = Value(1, 5);
  const auto rounded = round_instance(inst, scheme(4, Direction::Up));
  EXPECT_FALSE(solve_rounded(rounded));
  EXPECT_THROW(backward(forward(rounded), rounded), std::runtime_error);
}

TEST(SolveRounded, TwoAgentFixtures) {
  const auto t1 = scaled_rounded(testing::t1(), Value(11, 10), 8);
  const auto a = solve_rounded(t1);
  ASSERT_TRUE(a);
  for (const auto& v : bundle_values(*a, t1.values)) EXPECT_GE(v, Value(5, 8));

  const auto m1 = scaled_rounded(testing::m1(), Value(11, 10), 8);
  const auto b = solve_rounded(m1);
  ASSERT_TRUE(b);
  EXPECT_TRUE(is_feasible_partition(m1.instance, *b));
  for (const auto& v : bundle_values(*b, m1.values)) EXPECT_LE(v, Value(11, 8));
}

TEST(SolveRounded, TraceIsDeterministic) {
  const auto rounded = e1_rounded();
  std::string first, second;
  const auto a = solve_rounded(rounded, &first);
  const auto b = solve_rounded(rounded, &second);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(first, second);
  EXPECT_EQ(first.rfind("row=3 nu=", 0), 0u);
  EXPECT_NE(first.find("row=1 nu=" + InputVector::zero(25).to_string() + " ptr="), std::string::npos);
}

// The remainder vectors of an aligned 1-assignment reconstruct the true
// remainders: identical big items, small surplus (deficit) below 2/k.
TEST(Retrieve, ReconstructsAlignedRemainders) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Mode mode = seed % 2 ? Mode::MaxMin : Mode::MinMax;
    const auto planted = gen_planted(seed, 3, 9, Value(1), mode);
    const auto rounded = scaled_rounded(planted.instance, Value(1), 8);
    const auto aligned = align(rounded, planted.assignment);
    const auto alpha = assignment_vector(rounded, aligned);
    ItemSet removed(rounded.item_count());
    for (std::size_t j = rounded.agent_count(); j >= 1; --j) {
      const auto truth = remainder(rounded.instance, removed, j);
      const auto got = retrieve(rounded, alpha[j - 1], j);
      ASSERT_TRUE(got) << "seed " << seed << " j " << j;
      ItemSet big_truth = truth.items, big_got = got->items;
      Value small_truth = 0, small_got = 0;
      for (std::size_t i = 0; i < rounded.item_count(); ++i) {
        if (!rounded.is_small(i)) continue;
        big_truth.reset(i);
        big_got.reset(i);
        if (truth.items.test(i)) small_truth += rounded.values[i];
        if (got->items.test(i)) small_got += rounded.values[i];
      }
      EXPECT_EQ(big_got, big_truth);
      const Value eps(2, 8);
      if (mode == Mode::MaxMin) {
        EXPECT_TRUE(small_got >= small_truth && small_got - small_truth <= eps);
      } else {
        EXPECT_TRUE(small_got <= small_truth && small_truth - small_got <= eps);
      }
      removed |= aligned.bundles[j - 1];
    }
  }
}

}  // namespace
}  // namespace ordalloc
