// Command-line front end: spectra, wavefunction tables, the verification
// suite and the non-relativistic limit table.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "fdosc/fdosc.hpp"

namespace {

using fdosc::harness::Format;
using fdosc::harness::ModelKind;

const std::map<std::string, Format> kFormats{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
const std::map<std::string, ModelKind> kModels{{"nonrel", ModelKind::kNonRel}, {"rel", ModelKind::kRel}};

struct Options {
  ModelKind model = ModelKind::kRel;
  Format format = Format::kText;
  double omega0 = 0.5;
  double g0 = 0.1;
  int n_max = 6;
  int n = 0;
  double grid_min = 0.25;
  double grid_max = 8.0;
  int grid_points = 32;
  std::string spacing = "log";
  double tol = 0.0;
  std::vector<std::string> tol_check;
  std::vector<double> omega0_list;
};

void add_model(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.model, "nonrel or rel")->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--omega0", o.omega0, "hbar omega / mc^2 (relativistic model)");
  cmd->add_option("--g0", o.g0, "inverse-square coupling");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text, csv or json")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

std::vector<double> grid_points(const Options& o) {
  if (o.grid_points < 1) throw fdosc::ParameterError("--grid-points must be positive");
  if (!(o.grid_max >= o.grid_min)) throw fdosc::ParameterError("--grid-max must not be below --grid-min");
  std::vector<double> pts(static_cast<std::size_t>(o.grid_points));
  if (o.spacing == "log") {
    if (!(o.grid_min > 0.0)) throw fdosc::ParameterError("log spacing needs --grid-min > 0");
    return fdosc::SampleGrid::log_spaced(o.grid_min, o.grid_max, o.grid_points).points();
  }
  for (int i = 0; i < o.grid_points; ++i) {
    pts[static_cast<std::size_t>(i)] =
        o.grid_points > 1 ? o.grid_min + (o.grid_max - o.grid_min) * i / (o.grid_points - 1) : o.grid_min;
  }
  return pts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-difference (relativistic) and singular non-relativistic oscillators"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "energy levels n = 0..nmax");
  add_model(spectrum, o);
  add_params(spectrum, o);
  spectrum->add_option("--nmax", o.n_max, "highest level")->check(CLI::NonNegativeNumber);
  add_format(spectrum, o);

  auto* wave = app.add_subcommand("wavefunction", "eigenfunction values on a grid");
  add_model(wave, o);
  add_params(wave, o);
  wave->add_option("--n", o.n, "level")->check(CLI::NonNegativeNumber);
  wave->add_option("--grid-min", o.grid_min, "first grid point");
  wave->add_option("--grid-max", o.grid_max, "last grid point");
  wave->add_option("--grid-points", o.grid_points, "number of points");
  wave->add_option("--grid-spacing", o.spacing, "log or linear")->check(CLI::IsMember({"log", "linear"}));
  add_format(wave, o);

  auto* verify = app.add_subcommand("verify", "run every check; exit status 0 iff all hard checks pass");
  add_params(verify, o);
  verify->add_option("--nmax", o.n_max, "highest level probed")->check(CLI::PositiveNumber);
  auto* tol_opt = verify->add_option("--tol", o.tol, "tolerance for every hard check")->check(CLI::NonNegativeNumber);
  verify->add_option("--tol-check", o.tol_check, "per-check tolerance, id=value (repeatable)");
  verify->add_option("--grid-min", o.grid_min, "first grid point");
  verify->add_option("--grid-max", o.grid_max, "last grid point");
  verify->add_option("--grid-points", o.grid_points, "number of log-spaced points");
  add_format(verify, o);

  auto* limit = app.add_subcommand("limit", "approach of alpha + nu - 1/omega0 to d + 1");
  limit->add_option("--g0", o.g0, "inverse-square coupling");
  limit->add_option("--omega0-list", o.omega0_list, "comma-separated omega0 values")
      ->delimiter(',')
      ->required();
  add_format(limit, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) {
      std::cout << render(fdosc::harness::spectrum_table(o.model, o.omega0, o.g0, o.n_max), o.format);
      return 0;
    }
    if (wave->parsed()) {
      std::cout << render(fdosc::harness::wavefunction_table(o.model, o.omega0, o.g0, o.n, grid_points(o)), o.format);
      return 0;
    }
    if (limit->parsed()) {
      std::cout << render(fdosc::harness::limit_table(o.g0, o.omega0_list), o.format);
      return 0;
    }
    fdosc::harness::ToleranceOverrides tol;
    if (tol_opt->count() > 0) tol.all_hard = o.tol;
    for (const auto& entry : o.tol_check) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos) throw fdosc::ParameterError("--tol-check expects id=value, got " + entry);
      tol.by_check[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    }
    const auto grid = fdosc::SampleGrid::log_spaced(o.grid_min, o.grid_max, o.grid_points);
    const auto report = fdosc::harness::run_suite(o.omega0, o.g0, o.n_max, grid, tol);
    std::cout << render(report, o.format);
    return report.all_hard_passed() ? 0 : 1;
  } catch (const fdosc::CouplingError& e) {
    std::cerr << "CouplingError: " << e.what() << "\n";
  } catch (const fdosc::ParameterError& e) {
    std::cerr << "ParameterError: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
