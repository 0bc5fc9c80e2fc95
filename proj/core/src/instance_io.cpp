#include "ordalloc/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ordalloc {

using json = nlohmann::ordered_json;

namespace {

Value value_field(const json& node, const char* key) {
  const auto& v = node.at(key);
  if (v.is_string()) return parse_value(v.get<std::string>());
  if (v.is_number_integer()) return Value(v.get<long>());
  throw std::invalid_argument(std::string("field '") + key + "' must be a rational string");
}

std::size_t index_field(const json& node, const char* key) {
  const auto& v = node.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  const long long raw = v.get<long long>();
  if (raw < 1) throw std::invalid_argument(std::string("field '") + key + "' must be >= 1");
  // Endpoints beyond the item count are kept so validate() can report them.
  return static_cast<std::size_t>(raw - 1);
}

}  // namespace

ConvexInstance instance_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
  try {
    ConvexInstance inst;
    inst.mode = parse_mode(doc.at("mode").get<std::string>());
    for (const auto& node : doc.at("items")) {
      inst.items.push_back({node.at("id").get<std::string>(), value_field(node, "value")});
    }
    for (const auto& node : doc.at("agents")) {
      Agent agent;
      agent.id = node.at("id").get<std::string>();
      agent.first = index_field(node, "l");
      agent.last = index_field(node, "r");
      if (node.contains("demand")) agent.demand = value_field(node, "demand");
      inst.agents.push_back(std::move(agent));
    }
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
}

std::string instance_to_json(const ConvexInstance& instance) {
  json doc;
  doc["mode"] = to_string(instance.mode);
  doc["items"] = json::array();
  for (const auto& item : instance.items) {
    doc["items"].push_back({{"id", item.id}, {"value", format_value(item.value)}});
  }
  doc["agents"] = json::array();
  for (const auto& agent : instance.agents) {
    json node{{"id", agent.id}, {"l", agent.first + 1}, {"r", agent.last + 1}};
    if (agent.demand != 1) node["demand"] = format_value(agent.demand);
    doc["agents"].push_back(std::move(node));
  }
  return doc.dump(2) + "\n";
}

namespace {

json bundles_json(const ConvexInstance& instance, const Assignment& assignment) {
  json out = json::object();
  for (std::size_t a = 0; a < assignment.agent_count(); ++a) {
    json ids = json::array();
    for (std::size_t i : members(assignment.bundles[a])) ids.push_back(instance.items[i].id);
    out[instance.agents[a].id] = std::move(ids);
  }
  return out;
}

}  // namespace

std::string result_to_json(const ConvexInstance& instance, const SolveResult& result) {
  json doc;
  doc["t_star"] = format_value(result.t_star);
  doc["objective"] = format_value(result.objective);
  doc["guarantee"] = format_value(result.guarantee);
  doc["assignment"] = bundles_json(instance, result.assignment);
  return doc.dump(2) + "\n";
}

std::string assignment_to_json(const ConvexInstance& instance, const Assignment& assignment) {
  return bundles_json(instance, assignment).dump(2) + "\n";
}

ConvexInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const std::filesystem::path& path, const ConvexInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file " + path.string());
  out << instance_to_json(instance);
}

}  // namespace ordalloc
