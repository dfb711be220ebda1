#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace fdosc::harness {

/// Parameters a check ran against.
struct ModelParams {
  double omega0 = 0.0;
  double g0 = 0.0;
  int n_max = 0;
  double alpha = 0.0;
  double nu = 0.0;
  double d = 0.0;
};

/// Hard checks gate the verdict; report-only checks record a measurement
/// against a formula whose printed form is in doubt.
enum class CheckKind { kHard, kReportOnly };

inline std::string_view to_string(CheckKind k) { return k == CheckKind::kHard ? "hard" : "report-only"; }

struct CheckResult {
  std::string check_id;
  ModelParams params;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  CheckKind kind = CheckKind::kHard;
  std::string note;
};

/// passed iff residual <= tolerance; NaN never passes.
inline CheckResult make_result(std::string id, const ModelParams& p, double residual, double tol, CheckKind kind,
                               std::string note = {}) {
  const bool ok = !std::isnan(residual) && residual <= tol;
  return {std::move(id), p, residual, tol, ok, kind, std::move(note)};
}

struct VerificationReport {
  ModelParams params;
  std::string grid;
  std::vector<CheckResult> results;
  std::vector<std::string> discrepancies;

  bool all_hard_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.kind != CheckKind::kHard || r.passed; });
  }

  const CheckResult* find(std::string_view id) const {
    for (const auto& r : results) {
      if (r.check_id == id) return &r;
    }
    return nullptr;
  }
};

enum class Format { kText, kCsv, kJson };

/// Round-trip decimal text for a double ("inf"/"nan" spelled out).
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_short(double v) {
  if (!std::isfinite(v)) return format_number(v);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

/// RFC 4180 field quoting.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace detail {

inline nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

inline nlohmann::json params_json(const ModelParams& p) {
  return {{"omega0", json_number(p.omega0)}, {"g0", json_number(p.g0)}, {"n_max", p.n_max},
          {"alpha", json_number(p.alpha)},   {"nu", json_number(p.nu)}, {"d", json_number(p.d)}};
}

}  // namespace detail

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : r.results) {
    results.push_back({{"check_id", c.check_id},
                       {"kind", std::string(to_string(c.kind))},
                       {"params", detail::params_json(c.params)},
                       {"max_residual", detail::json_number(c.max_residual)},
                       {"tolerance", detail::json_number(c.tolerance)},
                       {"passed", c.passed},
                       {"note", c.note}});
  }
  return {{"params", detail::params_json(r.params)},
          {"grid", r.grid},
          {"results", std::move(results)},
          {"discrepancies", r.discrepancies},
          {"all_hard_passed", r.all_hard_passed()}};
}

inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "check_id,kind,omega0,g0,n_max,alpha,nu,d,max_residual,tolerance,passed,note\r\n";
  for (const auto& c : r.results) {
    const auto& p = c.params;
    os << csv_field(c.check_id) << ',' << to_string(c.kind) << ',' << format_number(p.omega0) << ','
       << format_number(p.g0) << ',' << p.n_max << ',' << format_number(p.alpha) << ',' << format_number(p.nu)
       << ',' << format_number(p.d) << ',' << format_number(c.max_residual) << ',' << format_number(c.tolerance)
       << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.note) << "\r\n";
  }
  return os.str();
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << "verification  omega0=" << format_number(p.omega0) << "  g0=" << format_number(p.g0)
     << "  n_max=" << p.n_max << "  alpha=" << format_number(p.alpha) << "  nu=" << format_number(p.nu)
     << "  d=" << format_number(p.d) << "\n";
  os << "grid: " << r.grid << "\n\n";
  std::size_t width = 8;
  for (const auto& c : r.results) width = std::max(width, c.check_id.size());
  int hard = 0;
  int hard_ok = 0;
  int report_only = 0;
  for (const auto& c : r.results) {
    const char* status = c.passed ? "PASS" : (c.kind == CheckKind::kHard ? "FAIL" : "DIFF");
    os << status << "  " << c.check_id << std::string(width - c.check_id.size() + 2, ' ')
       << "residual " << format_short(c.max_residual) << "  tol " << format_short(c.tolerance) << "  ["
       << to_string(c.kind) << "]";
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
    if (c.kind == CheckKind::kHard) {
      ++hard;
      hard_ok += c.passed ? 1 : 0;
    } else {
      ++report_only;
    }
  }
  if (!r.discrepancies.empty()) {
    os << "\ndiscrepancies:\n";
    for (const auto& d : r.discrepancies) os << "  - " << d << "\n";
  }
  os << "\n" << hard_ok << "/" << hard << " hard checks passed, " << report_only << " report-only\n";
  return os.str();
}

inline std::string render(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::kJson:
      return to_json(r).dump(2) + "\n";
    case Format::kCsv:
      return to_csv(r);
    case Format::kText:
      break;
  }
  return to_text(r);
}

}  // namespace fdosc::harness
