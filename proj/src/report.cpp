#include "hcl/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hcl {

void LemmaReport::add(const std::string& name, double residual, double tolerance,
                      const std::string& note) {
  SubCheck c;
  c.name = name;
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.note = note;
  if (!c.pass) pass = false;
  if (std::isfinite(residual)) max_residual = std::max(max_residual, residual);
  details.push_back(std::move(c));
}

void LemmaReport::add_flag(const std::string& name, bool ok, const std::string& note) {
  SubCheck c;
  c.name = name;
  c.residual = ok ? 0.0 : 1.0;
  c.tolerance = 0.5;
  c.pass = ok;
  c.note = note;
  if (!ok) pass = false;
  max_residual = std::max(max_residual, c.residual);
  details.push_back(std::move(c));
}

namespace {

std::string json_escape(const std::string& value) {
  std::string out;
  out.reserve(value.size());
  for (const char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string reports_to_json(const std::vector<LemmaReport>& reports) {
  std::ostringstream out;
  out << "[";
  for (size_t r = 0; r < reports.size(); ++r) {
    const LemmaReport& rep = reports[r];
    if (r) out << ",";
    out << "\n  {";
    out << "\"check_name\":\"" << json_escape(rep.check_name) << "\",";
    out << "\"paper_anchor\":\"" << json_escape(rep.paper_anchor) << "\",";
    out << "\"status\":\"" << (rep.pass ? "pass" : "fail") << "\",";
    out << "\"max_residual\":" << fmt_double(rep.max_residual) << ",";
    out << "\"samples\":" << rep.samples << ",";
    out << "\"seed\":" << rep.seed << ",";
    out << "\"details\":[";
    for (size_t d = 0; d < rep.details.size(); ++d) {
      const SubCheck& c = rep.details[d];
      if (d) out << ",";
      out << "\n    {\"name\":\"" << json_escape(c.name) << "\","
          << "\"residual\":" << fmt_double(c.residual) << ","
          << "\"tolerance\":" << fmt_double(c.tolerance) << ","
          << "\"status\":\"" << (c.pass ? "pass" : "fail") << "\","
          << "\"note\":\"" << json_escape(c.note) << "\"}";
    }
    if (!rep.details.empty()) out << "\n  ";
    out << "]}";
  }
  out << "\n]\n";
  return out.str();
}

std::string reports_to_text(const std::vector<LemmaReport>& reports) {
  std::ostringstream out;
  for (const LemmaReport& rep : reports) {
    out << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.check_name << "  (" << rep.paper_anchor
        << ")\n";
    out << "       samples=" << rep.samples << " seed=" << rep.seed
        << " max_residual=" << fmt_double(rep.max_residual) << "\n";
    for (const SubCheck& c : rep.details) {
      out << "       " << (c.pass ? "ok   " : "FAIL ") << c.name << ": residual "
          << fmt_double(c.residual) << " (tol " << fmt_double(c.tolerance) << ")";
      if (!c.note.empty()) out << "  -- " << c.note;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace hcl
