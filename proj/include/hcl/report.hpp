#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcl {

struct SubCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Machine-readable pass/fail record for one verification check.
/// status is pass iff every sub-check residual is within its tolerance.
struct LemmaReport {
  std::string check_name;
  std::string paper_anchor;
  bool pass = true;
  double max_residual = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<SubCheck> details;

  void add(const std::string& name, double residual, double tolerance,
           const std::string& note = "");
  /// Sub-check with an externally decided outcome (counts, flags).
  void add_flag(const std::string& name, bool ok, const std::string& note = "");
};

/// Deterministic JSON: fixed key order, floats printed with 17 significant
/// digits, no locale dependence. Identical reports give identical bytes.
std::string reports_to_json(const std::vector<LemmaReport>& reports);

std::string reports_to_text(const std::vector<LemmaReport>& reports);

}  // namespace hcl
