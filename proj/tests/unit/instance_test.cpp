#include <gtest/gtest.h>

#include <random>

#include "ordalloc/instance.hpp"
#include "support/fixtures.hpp"

namespace ordalloc {
namespace {

using testing::e1;
using testing::make_instance;
using testing::t0;
using testing::t1;

bool has_kind(const ValidationReport& r, Violation::Kind kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

TEST(Validate, AcceptsFixtures) {
  EXPECT_TRUE(validate(t0()).ok());
  EXPECT_TRUE(validate(t1()).ok());
  EXPECT_TRUE(validate(e1()).ok());
}

TEST(Validate, FlagsMarginedInclusion) {
  auto inst = make_instance(Mode::MaxMin, {{"x1", "1"}, {"x2", "1"}, {"x3", "1"}, {"x4", "1"}, {"x5", "1"}},
                            {{"p", 1, 5}, {"q", 2, 4}});
  const auto report = validate(inst);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].kind, Violation::Kind::MarginedInclusion);
  EXPECT_EQ(report.violations[0].message, "margined inclusion (p,q)");
}

TEST(Validate, SharedEndpointIsNotMargined) {
  auto inst = make_instance(Mode::MaxMin, {{"x1", "1"}, {"x2", "1"}, {"x3", "1"}}, {{"p", 1, 3}, {"q", 1, 2}});
  EXPECT_TRUE(validate(inst).ok());
}

TEST(Validate, FlagsStructuralProblems) {
  auto uncovered = make_instance(Mode::MaxMin, {{"x1", "1"}, {"x2", "1"}}, {{"p", 1, 1}});
  EXPECT_TRUE(has_kind(validate(uncovered), Violation::Kind::UncoveredItem));

  auto bad = make_instance(Mode::MaxMin, {{"x1", "1"}}, {{"p", 1, 2}});
  EXPECT_TRUE(has_kind(validate(bad), Violation::Kind::BadInterval));

  auto zero = make_instance(Mode::MaxMin, {{"x1", "0"}}, {{"p", 1, 1}});
  EXPECT_TRUE(has_kind(validate(zero), Violation::Kind::NonPositiveValue));

  EXPECT_TRUE(has_kind(validate(ConvexInstance{}), Violation::Kind::EmptyInstance));
}

TEST(Lexicographic, SortsByEndpoints) {
  auto inst = e1();
  std::swap(inst.agents[0], inst.agents[2]);  // p3, p2, p1
  std::swap(inst.agents[1], inst.agents[2]);  // p3, p1, p2
  EXPECT_FALSE(is_lexicographic(inst));
  const auto order = lexicographic_order(inst);
  EXPECT_EQ(inst.agents[order[0]].id, "p1");
  EXPECT_EQ(inst.agents[order[1]].id, "p2");
  EXPECT_EQ(inst.agents[order[2]].id, "p3");
  EXPECT_TRUE(is_lexicographic(lexicographic_copy(inst)));
}

TEST(Lexicographic, TiesKeepInputOrder) {
  auto inst = make_instance(Mode::MaxMin, {{"x1", "1"}, {"x2", "1"}}, {{"b", 1, 2}, {"a", 1, 2}});
  EXPECT_EQ(lexicographic_order(inst), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(lexicographic_order(t1()), (std::vector<std::size_t>{0, 1}));
}

TEST(Remainder, DropsItemsAndAgents) {
  const auto inst = t1();
  ItemSet removed(4);
  removed.set(1);
  removed.set(2);
  removed.set(3);
  const auto sub = remainder(inst, removed, 1);
  EXPECT_EQ(sub.agents, 1u);
  EXPECT_EQ(members(sub.items), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(stranded_items(inst, sub).none());
}

TEST(Remainder, FindsStrandedItems) {
  const auto inst = t1();
  ItemSet removed(4);
  removed.set(0);
  const auto sub = remainder(inst, removed, 1);  // x2..x4 with p1 only
  EXPECT_EQ(members(stranded_items(inst, sub)), (std::vector<std::size_t>{3}));
}

TEST(PrivateItems, SingleNeighbourInSubgraph) {
  const auto inst = t1();
  const auto owners = private_items(inst, full_graph(inst));
  ASSERT_EQ(owners.size(), 2u);
  EXPECT_EQ(owners.at(0), 0u);
  EXPECT_EQ(owners.at(3), 1u);

  auto complete = make_instance(Mode::MaxMin, {{"x1", "1"}, {"x2", "1"}}, {{"a", 1, 2}, {"b", 1, 2}});
  EXPECT_TRUE(private_items(complete, full_graph(complete)).empty());
}

ConvexInstance random_intervals(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  ConvexInstance inst;
  for (std::size_t i = 0; i < m; ++i) inst.items.push_back({"x" + std::to_string(i + 1), Value(1)});
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t l = rng() % m, r = rng() % m;
    if (l > r) std::swap(l, r);
    inst.agents.push_back({"p" + std::to_string(a + 1), l, r, Value(1)});
  }
  return inst;
}

bool pairwise_margined(const ConvexInstance& inst) {
  for (const auto& p : inst.agents)
    for (const auto& q : inst.agents)
      if (p.first < q.first && q.last < p.last) return true;
  return false;
}

TEST(Validate, MonotoneCheckAgreesWithPairwiseDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto inst = random_intervals(rng, 1 + rng() % 6, 1 + rng() % 10);
    const bool flagged = has_kind(validate(inst), Violation::Kind::MarginedInclusion);
    EXPECT_EQ(flagged, pairwise_margined(inst)) << "trial " << trial;
  }
}

TEST(Lexicographic, AgentsCoveringAnItemAreContiguous) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = random_intervals(rng, 1 + rng() % 6, 1 + rng() % 10);
    if (!validate(raw).ok()) continue;
    ++checked;
    const auto inst = lexicographic_copy(raw);
    for (std::size_t i = 0; i < inst.item_count(); ++i) {
      std::vector<std::size_t> cover;
      for (std::size_t a = 0; a < inst.agent_count(); ++a)
        if (inst.agents[a].covers(i)) cover.push_back(a);
      ASSERT_FALSE(cover.empty());
      EXPECT_EQ(cover.back() - cover.front() + 1, cover.size());
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace ordalloc
