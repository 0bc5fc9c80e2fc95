#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "ordalloc/assignment.hpp"
#include "ordalloc/instance.hpp"

namespace ordalloc::testing {

struct AgentSpec {
  std::string id;
  std::size_t l;  // 1-based
  std::size_t r;
};

inline ConvexInstance make_instance(Mode mode, const std::vector<std::pair<std::string, std::string>>& items,
                                    const std::vector<AgentSpec>& agents) {
  ConvexInstance inst;
  inst.mode = mode;
  for (const auto& [id, v] : items) inst.items.push_back({id, parse_value(v)});
  for (const auto& a : agents) inst.agents.push_back({a.id, a.l - 1, a.r - 1, Value(1)});
  return inst;
}

inline ConvexInstance t0() { return make_instance(Mode::MaxMin, {{"x1", "1"}}, {{"p1", 1, 1}}); }

inline ConvexInstance t1(Mode mode = Mode::MaxMin) {
  return make_instance(mode, {{"x1", "3/5"}, {"x2", "1/2"}, {"x3", "1/2"}, {"x4", "3/5"}},
                       {{"p1", 1, 3}, {"p2", 2, 4}});
}

/// Jobs j1=0.6 on m1, j2 and j3 on both machines, j4=0.6 on m2.
inline ConvexInstance m1() {
  return make_instance(Mode::MinMax, {{"j1", "3/5"}, {"j2", "1/2"}, {"j3", "1/2"}, {"j4", "3/5"}},
                       {{"m1", 1, 3}, {"m2", 2, 4}});
}

inline const std::vector<std::string>& e1_ids() {
  static const std::vector<std::string> ids = {"s1", "s2", "c1", "c2",  "c3",  "c4",  "c5",
                                               "c6", "s3", "c7", "c8",  "s4",  "c9",  "c10",
                                               "s5", "c11", "s6", "c12", "c13", "c14", "c15"};
  return ids;
}

inline ConvexInstance e1() {
  std::vector<std::pair<std::string, std::string>> items;
  for (const auto& id : e1_ids()) items.emplace_back(id, id[0] == 's' ? "1/4" : "1/10");
  return make_instance(Mode::MaxMin, items, {{"p1", 1, 7}, {"p2", 3, 14}, {"p3", 8, 21}});
}

inline std::size_t e1_index(const std::string& id) {
  const auto& ids = e1_ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return i;
  throw std::out_of_range(id);
}

/// Bundles given by item ids, one list per agent in instance order.
inline Assignment bundles_by_id(const ConvexInstance& inst, const std::vector<std::vector<std::string>>& ids) {
  Assignment out = Assignment::empty(inst.mode, inst.agent_count(), inst.item_count());
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (const auto& id : ids[a]) {
      bool found = false;
      for (std::size_t i = 0; i < inst.item_count(); ++i) {
        if (inst.items[i].id == id) {
          out.bundles[a].set(i);
          found = true;
        }
      }
      if (!found) throw std::out_of_range(id);
    }
  }
  return out;
}

inline std::vector<std::string> range_ids(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// p1 = {s1,s2,c1..c5}, p2 = {c6..c10,s3,s4}, p3 = {c11..c15,s5,s6}.
inline Assignment e1_assignment_one(const ConvexInstance& inst) {
  return bundles_by_id(inst, {concat({{"s1", "s2"}, range_ids("c", 1, 5)}),
                              concat({range_ids("c", 6, 10), {"s3", "s4"}}),
                              concat({range_ids("c", 11, 15), {"s5", "s6"}})});
}

/// p1 = {s1,s2}, p2 = {c1..c10}, p3 = {s3..s6}; c11..c15 left out.
inline Assignment e1_assignment_two(const ConvexInstance& inst) {
  return bundles_by_id(inst, {{"s1", "s2"}, range_ids("c", 1, 10), range_ids("s", 3, 6)});
}

}  // namespace ordalloc::testing
