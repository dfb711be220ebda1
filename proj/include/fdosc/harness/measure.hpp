#pragma once

// Shared plumbing for checks: context, measurement record, ratio helpers.

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fdosc/analytic_function.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/harness/report.hpp"
#include "fdosc/nonrel.hpp"
#include "fdosc/rel.hpp"
#include "fdosc/sample_grid.hpp"

namespace fdosc::harness {

struct SuiteContext {
  rel::RelModel rel;
  nonrel::NonRelModel nonrel;
  SampleGrid grid;
  int n_max;
  ModelParams params;
};

/// What a check measured. `discrepancy` is copied into the report's
/// discrepancy list when non-empty.
struct Measurement {
  Measurement(double r, std::string n, std::string d = {})
      : residual(r), note(std::move(n)), discrepancy(std::move(d)) {}

  double residual;
  std::string note;
  std::string discrepancy;
};

struct CheckSpec {
  std::string id;
  CheckKind kind;
  double tolerance;
  std::function<Measurement(const SuiteContext&)> run;
};

template <class F>
std::vector<Complex> sample(const F& f, const SampleGrid& grid) {
  std::vector<Complex> out;
  out.reserve(grid.size());
  for (double x : grid) out.emplace_back(f(x));
  return out;
}

/// Least-squares c with f ~ c g on the grid.
template <class F, class G>
Complex projected_ratio(const F& f, const G& g, const SampleGrid& grid) {
  const auto fv = sample(f, grid);
  const auto gv = sample(g, grid);
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < fv.size(); ++i) {
    num += std::conj(gv[i]) * fv[i];
    den += std::norm(gv[i]);
  }
  if (!(den > 0.0)) throw EvaluationError("projected_ratio: reference vanishes on the grid");
  return num / den;
}

struct RatioStats {
  Complex mean;
  double spread;  ///< rms deviation of f/g from its mean, over |mean|
};

/// Pointwise f/g, ignoring points where |g| is below 1e-8 of its peak.
template <class F, class G>
RatioStats ratio_stats(const F& f, const G& g, const SampleGrid& grid) {
  const auto fv = sample(f, grid);
  const auto gv = sample(g, grid);
  double peak = 0.0;
  for (auto v : gv) peak = std::max(peak, std::abs(v));
  std::vector<Complex> r;
  for (std::size_t i = 0; i < fv.size(); ++i) {
    if (std::abs(gv[i]) >= 1e-8 * peak) r.push_back(fv[i] / gv[i]);
  }
  if (r.empty()) throw EvaluationError("ratio_stats: reference vanishes on the grid");
  Complex mean = 0.0;
  for (auto v : r) mean += v;
  mean /= static_cast<double>(r.size());
  double var = 0.0;
  for (auto v : r) var += std::norm(v - mean);
  var /= static_cast<double>(r.size());
  return {mean, std::sqrt(var) / std::abs(mean)};
}

inline double relative_gap(double measured, double expected) {
  return std::abs(measured - expected) / std::max(1e-300, std::abs(expected));
}

inline std::string num(double v) { return format_short(v); }

inline std::string num(Complex v) {
  if (v.imag() == 0.0) return format_short(v.real());
  return "(" + format_short(v.real()) + (v.imag() < 0 ? " - " : " + ") + format_short(std::abs(v.imag())) + " i)";
}

}  // namespace fdosc::harness
