// ordalloc command-line front end.
//
// Exit codes: 0 success, 1 solver failure (or Hall violation for `check`),
// 2 invalid input or usage.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordalloc/generator.hpp"
#include "ordalloc/hall.hpp"
#include "ordalloc/instance_io.hpp"
#include "ordalloc/oracle.hpp"
#include "ordalloc/solver.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace ordalloc;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

ConvexInstance load_valid(const std::string& path, const std::string& mode_override = "") {
  ConvexInstance inst = load_instance(path);
  if (!mode_override.empty()) inst.mode = parse_mode(mode_override);
  const auto report = validate(inst);
  if (!report.ok()) {
    std::string msg = path + ": invalid instance";
    for (const auto& v : report.violations) msg += "\n  " + v.message;
    throw std::invalid_argument(msg);
  }
  return inst;
}

std::string bundles_text(const ConvexInstance& inst, const Assignment& a) {
  std::string out;
  for (std::size_t p = 0; p < a.agent_count(); ++p) {
    out += inst.agents[p].id + ":";
    for (std::size_t i : members(a.bundles[p])) out += " " + inst.items[i].id;
    out += "\n";
  }
  return out;
}

struct SolveArgs {
  std::string mode;
  int k = 8;
  std::string delta;
  std::string input;
  std::string output;
  std::string trace;
  bool json = false;
};

int run_solve(const SolveArgs& args) {
  const auto inst = load_valid(args.input, args.mode);
  std::string trace;
  SolveOptions options;
  if (!args.delta.empty()) options.delta = parse_value(args.delta);
  if (!args.trace.empty()) options.trace = &trace;

  SolveResult result;
  try {
    result = solve(inst, args.k, options);
  } catch (const std::domain_error& e) {
    if (!args.trace.empty()) write_output(args.trace, trace);
    std::cerr << "solve: " << e.what() << "\n";
    return kFailure;
  } catch (const std::runtime_error& e) {
    if (!args.trace.empty()) write_output(args.trace, trace);
    std::cerr << "solve: " << e.what() << "\n";
    return kFailure;
  }
  if (!args.trace.empty()) write_output(args.trace, trace);

  // The reported objective is always the verifier's.
  const auto report = verify(inst, result.assignment);
  if (!report.feasible) {
    std::cerr << "solve: internal error, assignment fails verification: " << report.violations.front() << "\n";
    return kFailure;
  }
  result.objective = report.objective;

  if (args.json) {
    write_output(args.output, result_to_json(inst, result));
  } else {
    std::string text = "t_star: " + format_value(result.t_star) + "\n";
    text += std::string(inst.mode == Mode::MaxMin ? "objective (min value): " : "objective (makespan): ") +
            format_value(result.objective) + "\n";
    text += "guarantee: " + format_value(result.guarantee) + " x OPT\n";
    text += "probes: " + std::to_string(result.probes) + "\n";
    text += bundles_text(inst, result.assignment);
    write_output(args.output, text);
  }
  return kOk;
}

int run_check(const std::string& input, bool as_json) {
  const ConvexInstance inst = load_instance(input);
  const auto report = validate(inst);
  std::vector<std::string> structural, inclusion;
  for (const auto& v : report.violations)
    (v.kind == Violation::Kind::MarginedInclusion ? inclusion : structural).push_back(v.message);

  std::optional<HallWitness> witness;
  if (structural.empty() && inclusion.empty()) {
    std::vector<Value> bound;
    for (const auto& agent : inst.agents) bound.push_back(agent.demand);
    witness = inst.mode == Mode::MaxMin ? check_hall_maxmin(inst, bound) : check_hall_minmax(inst, bound);
  }

  const bool checked = structural.empty() && inclusion.empty();
  if (as_json) {
    json doc;
    doc["valid"] = report.ok();
    doc["violations"] = json::array();
    for (const auto& v : report.violations) doc["violations"].push_back(v.message);
    doc["inclusion_free"] = inclusion.empty();
    if (checked) {
      doc["hall"] = !witness;
      if (witness)
        doc["hall_witness"] = {{"l", witness->first + 1},
                               {"r", witness->last + 1},
                               {"lhs", format_value(witness->lhs)},
                               {"rhs", format_value(witness->rhs)}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& msg : structural) std::cout << "invalid: " << msg << "\n";
    std::string hall = "not checked";
    if (checked) {
      hall = witness ? "violated on [" + std::to_string(witness->first + 1) + "," + std::to_string(witness->last + 1) +
                           "] (lhs " + format_value(witness->lhs) + ", rhs " + format_value(witness->rhs) + ")"
                     : "ok";
    }
    std::cout << "hall: " << hall << "; inclusion-free: " << (inclusion.empty() ? "ok" : "violated") << "\n";
    for (const auto& msg : inclusion) std::cout << "  " << msg << "\n";
  }
  if (!report.ok()) return kInvalid;
  return witness ? kFailure : kOk;
}

int run_oracle(const std::string& input, bool as_json) {
  const auto inst = load_valid(input);
  OracleResult result;
  try {
    result = opt(inst);
  } catch (const std::length_error& e) {
    std::cerr << "oracle: " << e.what() << "\n";
    return kInvalid;
  }
  if (as_json) {
    json doc;
    doc["opt"] = format_value(result.opt);
    doc["assignment"] = json::parse(assignment_to_json(inst, result.witness));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "opt: " << format_value(result.opt) << "\n" << bundles_text(inst, result.witness);
  }
  return kOk;
}

struct GenArgs {
  std::uint64_t seed = 1;
  std::size_t agents = 3;
  std::size_t items = 9;
  std::string plant;
  std::string mode = "maxmin";
  std::string output;
  std::string witness;
};

int run_gen(const GenArgs& args) {
  const Mode mode = parse_mode(args.mode);
  if (args.plant.empty()) {
    write_output(args.output, instance_to_json(gen_inclusion_free(args.seed, args.agents, args.items, mode)));
    return kOk;
  }
  const auto planted = gen_planted(args.seed, args.agents, args.items, parse_value(args.plant), mode);
  write_output(args.output, instance_to_json(planted.instance));
  if (!args.witness.empty()) write_output(args.witness, assignment_to_json(planted.instance, planted.assignment));
  return kOk;
}

int run_bench(const std::string& dir, int k, const std::string& delta, bool as_json) {
  if (!fs::is_directory(dir)) throw UsageError(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  json rows = json::array();
  std::ostringstream table;
  table << "instance\tmode\tn\tm\tobjective\topt\tratio\tguarantee\tms\n";
  int worst = kOk;
  for (const auto& path : files) {
    json row;
    row["instance"] = path.filename().string();
    try {
      const auto inst = load_valid(path.string());
      SolveOptions options;
      if (!delta.empty()) options.delta = parse_value(delta);
      const auto start = std::chrono::steady_clock::now();
      const auto result = solve(inst, k, options);
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      row["mode"] = to_string(inst.mode);
      row["agents"] = inst.agent_count();
      row["items"] = inst.item_count();
      row["objective"] = format_value(verify(inst, result.assignment).objective);
      row["guarantee"] = format_value(result.guarantee);
      row["ms"] = static_cast<long>(ms);
      if (placement_count(inst) <= kOracleMaxPlacements) {
        const Value best = opt(inst).opt;
        row["opt"] = format_value(best);
        if (best != 0) row["ratio"] = format_value(verify(inst, result.assignment).objective / best);
      }
    } catch (const std::exception& e) {
      row["error"] = e.what();
      worst = kFailure;
    }
    auto field = [&](const char* key) {
      if (!row.contains(key)) return std::string("-");
      const auto& v = row[key];
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    table << field("instance") << '\t' << field("mode") << '\t' << field("agents") << '\t' << field("items") << '\t'
          << field("objective") << '\t' << field("opt") << '\t' << field("ratio") << '\t' << field("guarantee") << '\t'
          << field("ms");
    if (row.contains("error")) table << "\terror: " << row["error"].get<std::string>();
    table << '\n';
    rows.push_back(std::move(row));
  }
  std::cout << (as_json ? rows.dump(2) + "\n" : table.str());
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate Max-Min and Min-Max allocation on inclusion-free convex instances"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Run the approximation scheme on an instance");
  solve_cmd->add_option("--mode", solve_args.mode, "Override the instance mode")
      ->check(CLI::IsMember({"maxmin", "minmax"}));
  solve_cmd->add_option("-k", solve_args.k, "Accuracy parameter (k >= 4)")->check(CLI::Range(4, 1000));
  solve_cmd->add_option("--delta", solve_args.delta, "Binary search tolerance as a rational (default 1/(4k))");
  solve_cmd->add_option("-i,--input", solve_args.input, "Instance file")->required();
  solve_cmd->add_option("-o,--output", solve_args.output, "Result file (default stdout)");
  solve_cmd->add_option("--trace", solve_args.trace, "Write the probe and DP trace here");
  solve_cmd->add_flag("--json", solve_args.json, "Machine-readable result");

  std::string check_input;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "Validate an instance and test Hall's condition");
  check_cmd->add_option("-i,--input", check_input, "Instance file")->required();
  check_cmd->add_flag("--json", check_json);

  std::string oracle_input;
  bool oracle_json = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search (small instances)");
  oracle_cmd->add_option("-i,--input", oracle_input, "Instance file")->required();
  oracle_cmd->add_flag("--json", oracle_json);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random inclusion-free instance");
  gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed");
  gen_cmd->add_option("-n", gen_args.agents, "Number of agents")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-m", gen_args.items, "Number of items")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--plant", gen_args.plant, "Plant an assignment reaching this target");
  gen_cmd->add_option("--mode", gen_args.mode)->check(CLI::IsMember({"maxmin", "minmax"}));
  gen_cmd->add_option("-o,--output", gen_args.output, "Instance file (default stdout)");
  gen_cmd->add_option("--witness", gen_args.witness, "Write the planted assignment here");

  std::string bench_dir, bench_delta;
  int bench_k = 8;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every instance in a directory and compare with the oracle");
  bench_cmd->add_option("dir", bench_dir, "Directory of *.json instances")->required();
  bench_cmd->add_option("-k", bench_k)->check(CLI::Range(4, 1000));
  bench_cmd->add_option("--delta", bench_delta);
  bench_cmd->add_flag("--json", bench_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*check_cmd) return run_check(check_input, check_json);
    if (*oracle_cmd) return run_oracle(oracle_input, oracle_json);
    if (*gen_cmd) return run_gen(gen_args);
    if (*bench_cmd) return run_bench(bench_dir, bench_k, bench_delta, bench_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInvalid;
}
