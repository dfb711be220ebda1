#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdosc {

/// Strictly positive real sample points at which operator identities are checked.
class SampleGrid {
 public:
  SampleGrid(std::vector<double> points, std::string description)
      : points_(std::move(points)), description_(std::move(description)) {
    if (points_.empty()) throw std::invalid_argument("SampleGrid: no points");
    for (double p : points_) {
      if (!(p > 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("SampleGrid: points must be finite and strictly positive");
      }
    }
  }

  static SampleGrid log_spaced(double lo, double hi, int count) {
    if (count < 1 || !(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("SampleGrid: bad log-spaced range");
    std::vector<double> pts(static_cast<std::size_t>(count));
    const double step = count > 1 ? std::log(hi / lo) / (count - 1) : 0.0;
    for (int i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    if (count > 1) pts.back() = hi;
    return SampleGrid(std::move(pts), "log-spaced [" + std::to_string(lo) + ", " + std::to_string(hi) + "] x" +
                                          std::to_string(count));
  }

  static SampleGrid linear(double lo, double hi, int count) {
    if (count < 1 || !(hi >= lo)) throw std::invalid_argument("SampleGrid: bad linear range");
    std::vector<double> pts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = count > 1 ? lo + (hi - lo) * i / (count - 1) : lo;
    return SampleGrid(std::move(pts),
                      "linear [" + std::to_string(lo) + ", " + std::to_string(hi) + "] x" + std::to_string(count));
  }

  /// 32 log-spaced points in [0.25, 8].
  static SampleGrid default_grid() { return log_spaced(0.25, 8.0, 32); }

  const std::vector<double>& points() const { return points_; }
  const std::string& description() const { return description_; }
  std::size_t size() const { return points_.size(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<double> points_;
  std::string description_;
};

}  // namespace fdosc
