#pragma once

#include <string>
#include <vector>

#include "hcl/lie_spaces.hpp"
#include "hcl/report.hpp"

namespace hcl {

/// Batch-run configuration. Identical configs produce byte-identical JSON
/// reports: every check derives its randomness from subseed(seed, name).
struct SuiteConfig {
  std::vector<HermitianFamily> families;
  long samples = 10000;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::vector<std::string> checks;  // empty = all
  std::string output_path;          // empty = no JSON file
};

const std::vector<std::string>& all_check_names();

SuiteConfig default_config();

/// "su:3,2", "sp:3", "so:5,2", "sostar:4". Throws ConfigParse.
HermitianFamily parse_family(const std::string& spec);

/// Flat key=value config file; unknown keys are rejected. Throws ConfigParse.
SuiteConfig load_config_file(const std::string& path);

/// Throws ConfigParse on invalid field values (samples < 1, tol <= 0, ...).
void validate_config(const SuiteConfig& cfg);

/// Runs the selected checks concurrently (one sub-seed per check) and
/// returns reports in configured order.
std::vector<LemmaReport> run_suite(const SuiteConfig& cfg);

}  // namespace hcl
