#pragma once

// Spectrum, wavefunction and non-relativistic-limit tables with text, CSV
// and JSON renderers.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fdosc/errors.hpp"
#include "fdosc/harness/report.hpp"
#include "fdosc/nonrel.hpp"
#include "fdosc/rel.hpp"
#include "fdosc/sample_grid.hpp"

namespace fdosc::harness {

enum class ModelKind { kNonRel, kRel };

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

namespace detail {

inline std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

inline nlohmann::json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) return detail::json_number(*d);
  return std::get<std::string>(c);
}

inline std::string title_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

inline std::string to_text(const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].size();
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) {
      width[j] = std::max(width[j], detail::cell_text(row[j]).size());
    }
  }
  std::ostringstream os;
  if (!t.title.empty()) os << "# " << t.title << "\n";
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) os << "  ";
      os << cells[j] << std::string(width[j] > cells[j].size() ? width[j] - cells[j].size() : 0, ' ');
    }
    os << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(detail::cell_text(c));
    line(cells);
  }
  return os.str();
}

inline std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << csv_field(t.columns[j]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_field(detail::cell_text(row[j]));
    os << "\r\n";
  }
  return os.str();
}

inline nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t j = 0; j < row.size() && j < t.columns.size(); ++j) obj[t.columns[j]] = detail::cell_json(row[j]);
    rows.push_back(std::move(obj));
  }
  return {{"title", t.title}, {"columns", t.columns}, {"rows", std::move(rows)}};
}

inline std::string render(const Table& t, Format f) {
  switch (f) {
    case Format::kJson:
      return to_json(t).dump(2) + "\n";
    case Format::kCsv:
      return to_csv(t);
    case Format::kText:
      break;
  }
  return to_text(t);
}

/// Levels n = 0..n_max. Non-relativistic energies in hbar omega; relativistic
/// ones in both mc^2 and hbar omega. omega0 is ignored for the non-relativistic model.
inline Table spectrum_table(ModelKind kind, double omega0, double g0, int n_max) {
  if (n_max < 0) throw ParameterError("spectrum_table: n_max must be non-negative");
  Table t;
  if (kind == ModelKind::kNonRel) {
    const auto m = nonrel::make_model(g0);
    t.title = "non-relativistic spectrum, g0 = " + detail::title_number(g0) + ", d = " + detail::title_number(m.d);
    t.columns = {"n", "E_hbar_omega"};
    for (int n = 0; n <= n_max; ++n) t.rows.push_back({std::int64_t{n}, m.energy(n)});
  } else {
    const auto m = rel::make_rel_model(omega0, g0);
    t.title = "relativistic spectrum, omega0 = " + detail::title_number(omega0) + ", g0 = " + detail::title_number(g0) +
              ", alpha = " + detail::title_number(m.alpha) + ", nu = " + detail::title_number(m.nu);
    t.columns = {"n", "E_mc2", "E_hbar_omega"};
    for (int n = 0; n <= n_max; ++n) t.rows.push_back({std::int64_t{n}, m.energy(n), 2.0 * n + m.alpha + m.nu});
  }
  return t;
}

/// psi_n on the grid points. Points where evaluation fails get a status
/// column naming the error instead of values.
inline Table wavefunction_table(ModelKind kind, double omega0, double g0, int n, const std::vector<double>& points) {
  if (n < 0) throw ParameterError("wavefunction_table: n must be non-negative");
  Table t;
  t.columns = {kind == ModelKind::kNonRel ? "xi" : "rho", "re", "im", "abs", "status"};
  const auto row_for = [&](double x, const auto& eval) {
    try {
      const Complex v = eval(x);
      t.rows.push_back({x, v.real(), v.imag(), std::abs(v), std::string("ok")});
    } catch (const EvaluationError& e) {
      t.rows.push_back({x, std::string(), std::string(), std::string(), std::string("EvaluationError: ") + e.what()});
    }
  };
  if (kind == ModelKind::kNonRel) {
    const auto m = nonrel::make_model(g0);
    const auto psi = nonrel::eigenfunction(m, n).wavefunction;
    t.title = "non-relativistic psi_" + std::to_string(n) + " (unit norm), g0 = " + detail::title_number(g0);
    for (double x : points) row_for(x, [&](double v) { return Complex(psi(v)); });
  } else {
    const auto m = rel::make_rel_model(omega0, g0);
    const auto phi = rel::eigenfunction_rel(m, n).wavefunction;
    t.title = "relativistic phi_" + std::to_string(n) + " (closed form, unnormalised), omega0 = " +
              detail::title_number(omega0) + ", g0 = " + detail::title_number(g0);
    for (double x : points) row_for(x, [&](double v) { return phi(v); });
  }
  return t;
}

/// Deviation of alpha + nu - 1/omega0 from d + 1 as omega0 shrinks.
inline Table limit_table(double g0, const std::vector<double>& omega0s) {
  const auto nr = nonrel::make_model(g0);
  Table t;
  t.title = "non-relativistic limit, g0 = " + detail::title_number(g0) + ", d = " + detail::title_number(nr.d);
  t.columns = {"omega0", "alpha", "nu", "alpha_plus_nu_minus_inv_omega0", "d_plus_1", "deviation", "alpha_minus_d_half"};
  for (double w : omega0s) {
    const auto m = rel::make_rel_model(w, g0);
    const double shifted = m.alpha + m.nu - 1.0 / w;
    t.rows.push_back({w, m.alpha, m.nu, shifted, nr.d + 1.0, std::abs(shifted - (nr.d + 1.0)), m.alpha - (nr.d + 0.5)});
  }
  return t;
}

}  // namespace fdosc::harness
