// hcl: batch verification of the curvature, trace, Youla, Levi-form,
// representation-table and Higgs-density identities for the four classical
// Hermitian families. Text report on stdout, deterministic JSON via --out.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcl/report.hpp"
#include "hcl/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical verification suite for classical Hermitian symmetric spaces"};

  std::string config_path;
  std::vector<std::string> family_specs;
  long samples = -1;
  std::string seed_str;
  double tol = -1.0;
  std::string checks_csv;
  std::string out_path;

  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--families", family_specs,
                 "family specs, e.g. su:3,2 sp:3 so:5,2 sostar:4")
      ->expected(-1);
  app.add_option("--samples", samples, "random samples per check");
  app.add_option("--seed", seed_str, "master seed (HCL_SEED overrides)");
  app.add_option("--tol", tol, "base tolerance");
  app.add_option("--checks", checks_csv,
                 "comma-separated subset of: curvature,trace,youla,levi,reps,higgs");
  app.add_option("--out", out_path, "write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    hcl::SuiteConfig cfg =
        config_path.empty() ? hcl::default_config() : hcl::load_config_file(config_path);

    if (!family_specs.empty()) {
      cfg.families.clear();
      for (const auto& spec : family_specs) cfg.families.push_back(hcl::parse_family(spec));
    }
    if (samples >= 0) cfg.samples = samples;
    if (!seed_str.empty()) cfg.seed = std::stoull(seed_str);
    if (tol > 0.0) cfg.tol = tol;
    if (!checks_csv.empty()) {
      cfg.checks.clear();
      std::string item;
      std::stringstream ss(checks_csv);
      while (std::getline(ss, item, ','))
        if (!item.empty()) cfg.checks.push_back(item);
    }
    if (!out_path.empty()) cfg.output_path = out_path;
    if (const char* env_seed = std::getenv("HCL_SEED")) cfg.seed = std::stoull(env_seed);

    hcl::validate_config(cfg);
    const std::vector<hcl::LemmaReport> reports = hcl::run_suite(cfg);

    std::cout << hcl::reports_to_text(reports);
    if (!cfg.output_path.empty()) {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!out) throw hcl::Error(hcl::errc::write_failure, "cannot open " + cfg.output_path);
      out << hcl::reports_to_json(reports);
      if (!out) throw hcl::Error(hcl::errc::write_failure, "short write to " + cfg.output_path);
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    std::cout << (all_pass ? "ALL CHECKS PASS\n" : "CHECK FAILURES PRESENT\n");
    return all_pass ? 0 : 1;
  } catch (const hcl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == hcl::errc::config_parse || e.code() == hcl::errc::write_failure) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
