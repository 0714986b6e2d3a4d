#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rsd/dataset.hpp"
#include "rsd/selection.hpp"

namespace rsd {

enum class RunMode { mine, bench, sweep };

std::string_view to_string(RunMode mode) noexcept;
RunMode parse_mode(std::string_view name);

inline constexpr int kOutputVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitData = 2, kExitBudget = 3 };

struct RunConfig {
  std::string input;
  std::string target;
  std::string control;
  int bins = 4;
  double weight = 0.5;
  std::size_t topk = 5;
  double alpha = 1.0;
  int max_depth = 3;
  // One kind for mine and sweep; a comma-separated list in bench mode.
  std::string estimator = "rawr";
  std::uint64_t seed = 0;
  std::uint64_t budget = 50'000'000;
  std::string out;  // empty writes to stdout
  RunMode mode = RunMode::mine;
  bool timing = false;  // report wall_ms; off keeps output byte-stable
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

struct Prepared {
  Population population;
  std::vector<Proposition> propositions;
};

/// Load, infer column kinds, discretize, stratify, build, generate propositions.
Prepared prepare(const RunConfig& config);

/// Executes one run and returns the output document. Throws rsd::Error.
/// `budget_hit` is set when any search stopped on the node budget.
nlohmann::json execute(const RunConfig& config, bool& budget_hit);

/// execute() plus output and error mapping. Diagnostics go to `diag`.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Parses flags and calls run(). Returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace rsd
