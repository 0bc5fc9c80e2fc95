#include <gtest/gtest.h>

#include "ordalloc/oracle.hpp"
#include "ordalloc/solver.hpp"
#include "support/fixtures.hpp"

namespace ordalloc {
namespace {

TEST(Scale, ClampsMaxMinAndRejectsLargeJobs) {
  const auto t1 = scale(testing::t1(), Value(11, 10));
  ASSERT_TRUE(t1);
  EXPECT_EQ(t1->items[0].value, Value(6, 11));
  EXPECT_EQ(t1->items[1].value, Value(5, 11));

  const auto clamped = scale(testing::t1(), Value(1, 2));
  EXPECT_EQ(clamped->items[0].value, Value(1));

  EXPECT_FALSE(scale(testing::m1(), Value(1, 2)));
  EXPECT_EQ(scale(testing::t0(), Value(1))->items[0].value, Value(1));
  EXPECT_THROW(scale(testing::t0(), Value(0)), std::invalid_argument);
}

TEST(Decide, ExampleAtOptimum) {
  const auto inst = testing::e1();
  const auto a = decide(inst, Value(1), 10);
  ASSERT_TRUE(a);
  const auto report = verify(inst, *a);
  EXPECT_TRUE(report.feasible);
  EXPECT_GE(report.objective, Value(7, 11));
}

TEST(Decide, SingleItem) {
  const auto inst = testing::t0();
  const auto a = decide(inst, Value(1), 4);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, testing::bundles_by_id(inst, {{"x1"}}));
}

TEST(Decide, AboveOptimumEitherFailsOrCertifies) {
  const auto inst = testing::t1();
  const auto a = decide(inst, Value(6, 5), 8);
  if (a) EXPECT_GE(verify(inst, *a).objective, maxmin_factor(8) * Value(6, 5));
}

TEST(Decide, KeepsInstanceAgentOrder) {
  auto inst = testing::e1();
  std::swap(inst.agents[0], inst.agents[2]);
  const auto a = decide(inst, Value(1), 10);
  ASSERT_TRUE(a);
  EXPECT_TRUE(verify(inst, *a).feasible);
}

TEST(SolveMaxMin, Fixtures) {
  const auto t0 = solve_maxmin(testing::t0(), 4);
  EXPECT_EQ(t0.objective, 1);
  EXPECT_EQ(t0.t_star, 1);

  SolveOptions e1_opts;
  e1_opts.delta = Value(1, 40);
  const auto e1 = solve_maxmin(testing::e1(), 10, e1_opts);
  EXPECT_GE(e1.objective, Value(7, 11) * Value(39, 40));
  EXPECT_EQ(e1.guarantee, Value(7, 11) * Value(39, 40));
  EXPECT_TRUE(verify(testing::e1(), e1.assignment).feasible);

  SolveOptions t1_opts;
  t1_opts.delta = Value(1, 32);
  const auto t1 = solve_maxmin(testing::t1(), 8, t1_opts);
  EXPECT_GE(t1.objective, Value(5, 9) * Value(31, 32) * Value(11, 10));
}

TEST(SolveMaxMin, ZeroOptimum) {
  auto inst = testing::make_instance(Mode::MaxMin, {{"x1", "1"}}, {{"p1", 1, 1}, {"p2", 1, 1}});
  EXPECT_THROW(solve_maxmin(inst, 4), std::domain_error);
}

TEST(SolveMaxMin, RejectsBadInput) {
  auto inst = testing::make_instance(Mode::MaxMin, {{"x1", "1"}, {"x2", "1"}, {"x3", "1"}}, {{"p", 1, 3}, {"q", 2, 2}});
  EXPECT_THROW(solve_maxmin(inst, 4), std::invalid_argument);
  EXPECT_THROW(solve_maxmin(testing::t0(), 3), std::invalid_argument);
  EXPECT_THROW(solve_minmax(testing::t0(), 4), std::invalid_argument);
}

TEST(SolveMinMax, Fixtures) {
  SolveOptions opts;
  opts.delta = Value(1, 32);
  const auto m1 = solve_minmax(testing::m1(), 8, opts);
  EXPECT_LE(m1.objective, (1 + Value(1, 2) + Value(3, 64)) * Value(33, 32) * Value(11, 10));
  EXPECT_TRUE(verify(testing::m1(), m1.assignment).feasible);

  auto wide = testing::m1();
  for (auto& machine : wide.agents) {
    machine.first = 0;
    machine.last = 3;
  }
  const auto w = solve_minmax(wide, 8, opts);
  EXPECT_LE(w.objective, minmax_factor(8) * Value(33, 32) * opt_minmax(wide).opt);
}

TEST(SolveMinMax, SingleMachineTakesEverything) {
  auto inst = testing::m1();
  inst.agents = {{"m1", 0, 3, Value(1)}};
  const auto r = solve_minmax(inst, 4);
  EXPECT_EQ(r.t_star, Value(11, 5));
  EXPECT_EQ(r.objective, Value(11, 5));
  EXPECT_EQ(r.assignment.bundles[0].count(), 4u);
}

TEST(Solve, TraceListsProbes) {
  std::string trace;
  SolveOptions opts;
  opts.trace = &trace;
  solve(testing::t1(), 8, opts);
  EXPECT_EQ(trace.rfind("probe t=11/10 result=", 0), 0u);
  EXPECT_NE(trace.find("row=2 nu="), std::string::npos);
}

TEST(Verify, ExampleAssignments) {
  const auto inst = testing::e1();
  const auto one = verify(inst, testing::e1_assignment_one(inst));
  EXPECT_TRUE(one.feasible);
  EXPECT_EQ(one.objective, 1);

  // Assignment two leaves c11..c15 with nobody.
  const auto two = verify(inst, testing::e1_assignment_two(inst));
  EXPECT_EQ(two.objective, Value(1, 2));
  EXPECT_FALSE(two.feasible);
  EXPECT_EQ(two.violations.size(), 5u);

  // Giving c11..c15 to p3 completes it without changing the minimum.
  auto completed = testing::e1_assignment_two(inst);
  for (const auto& id : testing::range_ids("c", 11, 15)) completed.bundles[2].set(testing::e1_index(id));
  const auto full = verify(inst, completed);
  EXPECT_TRUE(full.feasible);
  EXPECT_EQ(full.objective, Value(1, 2));
}

TEST(Verify, NamesOutOfIntervalItems) {
  const auto inst = testing::t1();
  const auto report = verify(inst, testing::bundles_by_id(inst, {{"x1", "x4"}, {"x2", "x3"}}));
  EXPECT_FALSE(report.feasible);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0], "item x4 lies outside the interval of p1");
}

}  // namespace
}  // namespace ordalloc
