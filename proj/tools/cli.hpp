#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gonlab::cli {

enum class Format { human, json, tsv };

// Parsed command line. Fields that a subcommand does not use keep their
// defaults.
struct CommandConfig {
  std::string subcommand;
  std::string graph;
  std::string divisor;
  Format format = Format::human;
  int threads = 1;
  std::optional<double> budget_seconds;
  std::optional<std::uint64_t> budget_steps;
  std::uint64_t seed = 42;

  int max_degree = 0;
  int exact_max_n = 24;
  bool all_subsets = false;
  std::string u;
  double tol = 1e-9;
  int at = 0;
  int at_least = 1;
  std::uint64_t max_subtrahends = 10'000'000;

  int k = 3;
  int n = 100;
  std::uint64_t samples = 50;
  std::string mode = "simple";
  int gonality_cap = 12;
  int cheeger_cap = 20;
  std::string emit_graphs;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBudget = 2;

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_env(const std::string& name);

struct ParseOutcome {
  std::optional<CommandConfig> config;
  int exit_code = kExitOk;  // meaningful when config is empty (help or error)
};

// args excludes the program name. Environment defaults (GONLAB_THREADS,
// GONLAB_BUDGET_SECONDS, GONLAB_BUDGET_STEPS) apply unless a flag overrides.
ParseOutcome parse_command_line(const std::vector<std::string>& args, std::ostream& out,
                                std::ostream& err, const EnvLookup& env = process_env);

// 0 on success, 2 when a budget ran out (partial output still written),
// 1 on input errors.
int dispatch(const CommandConfig& config, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

}  // namespace gonlab::cli
