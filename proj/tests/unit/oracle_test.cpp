#include <gtest/gtest.h>

#include <cmath>

#include "ordalloc/generator.hpp"
#include "ordalloc/hall.hpp"
#include "ordalloc/oracle.hpp"
#include "ordalloc/solver.hpp"
#include "support/fixtures.hpp"

namespace ordalloc {
namespace {

TEST(Oracle, MaxMinFixtures) {
  EXPECT_EQ(opt_maxmin(testing::t0()).opt, 1);
  EXPECT_EQ(opt_maxmin(testing::t1()).opt, Value(11, 10));
  const auto e1 = opt_maxmin(testing::e1());
  EXPECT_EQ(e1.opt, 1);
  EXPECT_TRUE(verify(testing::e1(), e1.witness).feasible);
  EXPECT_EQ(verify(testing::e1(), e1.witness).objective, 1);
}

TEST(Oracle, MinMaxFixtures) {
  const auto m1 = opt_minmax(testing::m1());
  EXPECT_EQ(m1.opt, Value(11, 10));
  EXPECT_EQ(verify(testing::m1(), m1.witness).objective, Value(11, 10));

  auto single = testing::m1();
  single.agents = {{"m1", 0, 3, Value(1)}};
  EXPECT_EQ(opt_minmax(single).opt, Value(11, 5));

  auto widened = testing::m1();
  widened.agents[0].last = 3;  // j4 may also run on m1
  EXPECT_EQ(opt_minmax(widened).opt, Value(11, 10));
}

// Plain enumeration of every placement, independent of the pruned search.
Value enumerate(const ConvexInstance& inst) {
  const std::size_t m = inst.item_count(), n = inst.agent_count();
  std::vector<std::size_t> owner(m, 0);
  bool have = false;
  Value best;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) ok = ok && inst.agents[owner[i]].covers(i);
    if (ok) {
      std::vector<Value> load(n, Value(0));
      for (std::size_t i = 0; i < m; ++i) load[owner[i]] += inst.items[i].value;
      const Value obj = inst.mode == Mode::MaxMin ? *std::min_element(load.begin(), load.end())
                                                  : *std::max_element(load.begin(), load.end());
      if (!have || (inst.mode == Mode::MaxMin ? obj > best : obj < best)) best = obj;
      have = true;
    }
    std::size_t i = 0;
    while (i < m && ++owner[i] == n) owner[i++] = 0;
    if (i == m) break;
  }
  return best;
}

TEST(Oracle, MatchesPlainEnumeration) {
  Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Mode mode = trial % 2 ? Mode::MinMax : Mode::MaxMin;
    const std::size_t m = 1 + rng.index(7);
    const std::size_t n = 1 + rng.index(std::min<std::size_t>(m, 4));
    const auto inst = gen_inclusion_free(rng, n, m, mode);
    const auto got = opt(inst);
    EXPECT_EQ(got.opt, enumerate(inst)) << "trial " << trial;
    const auto report = verify(inst, got.witness);
    EXPECT_TRUE(report.feasible);
    EXPECT_EQ(report.objective, got.opt);
  }
}

TEST(Oracle, HallHoldsBelowOptimum) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = gen_inclusion_free(seed, 3, 9);
    const Value t = opt_maxmin(inst).opt;
    if (t == 0) continue;
    EXPECT_FALSE(check_hall_maxmin(*scale(inst, t), std::vector<Value>(3, Value(1)))) << "seed " << seed;
  }
}

TEST(Oracle, SizeGuard) {
  std::vector<std::pair<std::string, std::string>> items;
  for (int i = 1; i <= 15; ++i) items.emplace_back("x" + std::to_string(i), "1");
  std::vector<testing::AgentSpec> agents;
  for (int a = 1; a <= 6; ++a) agents.push_back({"p" + std::to_string(a), 1, 15});
  const auto wide = testing::make_instance(Mode::MaxMin, items, agents);
  EXPECT_EQ(placement_count(wide), std::pow(6.0, 15));
  EXPECT_THROW(opt_maxmin(wide), std::length_error);
  EXPECT_EQ(placement_count(testing::e1()), 4096.0);
}

}  // namespace
}  // namespace ordalloc
