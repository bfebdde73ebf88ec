#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "koszul/field.hpp"
#include "koszul/rng.hpp"

namespace koszul {

enum class OutputFormat { json, text };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<FieldSpec> field;  // explicit --field; otherwise the input file's, else prime:32003
  int cutoff = 4;                  // internal-degree cutoff N
  int hom_cutoff = 4;              // homological cutoff
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output;
  int distributivity_degree = 4;
  // theorem4
  int d = 3;
  int e = 2;
  int depth = 4;
  // regularity
  int m = 2;
  // strata
  int gh_min = 2;
  int gh_max = 3;
  int i_max = 4;

  /// Rejects cutoffs below 2 and other out-of-range settings.
  void validate() const;
  nlohmann::json to_json(const FieldSpec& resolved_field) const;
};

inline const FieldSpec kDefaultFieldSpec = FieldSpec::prime(32003);

nlohmann::json cmd_check_presentation(const RunConfig& cfg);
nlohmann::json cmd_points(const RunConfig& cfg);
nlohmann::json cmd_theorem4(const RunConfig& cfg);
nlohmann::json cmd_regularity(const RunConfig& cfg);
nlohmann::json cmd_strata(const RunConfig& cfg);

/// Dispatches on cfg.command (without timing).
nlohmann::json run_command(const RunConfig& cfg);

/// 2 for input errors, 3 for internal failures, 1 otherwise.
int exit_code_for(const std::exception& e);

/// Full command-line entry point: parses arguments, runs, writes the report.
/// Exit code 0 iff the run completed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace koszul
