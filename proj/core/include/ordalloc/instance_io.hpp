#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ordalloc/assignment.hpp"
#include "ordalloc/instance.hpp"
#include "ordalloc/solver.hpp"

namespace ordalloc {

/// Parses the JSON instance format:
///   {"mode": "maxmin"|"minmax",
///    "items":  [{"id": str, "value": "num/den"}, ...],
///    "agents": [{"id": str, "l": int, "r": int, "demand": "num/den"?}, ...]}
/// Interval endpoints are 1-based in the file and 0-based in memory.
/// Throws std::invalid_argument on malformed input; semantic checks are
/// left to validate().
ConvexInstance instance_from_json(std::string_view text);

/// Serializes with a fixed key order; equal instances give equal bytes.
std::string instance_to_json(const ConvexInstance& instance);

/// {"t_star": "num/den", "objective": ..., "guarantee": ...,
///  "assignment": {agent id: [item ids]}}, agents in instance order.
std::string result_to_json(const ConvexInstance& instance, const SolveResult& result);

/// {agent id: [item ids]} in instance order.
std::string assignment_to_json(const ConvexInstance& instance, const Assignment& assignment);

ConvexInstance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const ConvexInstance& instance);

}  // namespace ordalloc
