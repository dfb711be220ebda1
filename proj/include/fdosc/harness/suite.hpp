#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fdosc/errors.hpp"
#include "fdosc/harness/checks_core.hpp"
#include "fdosc/harness/checks_nonrel.hpp"
#include "fdosc/harness/checks_rel.hpp"
#include "fdosc/harness/measure.hpp"
#include "fdosc/harness/report.hpp"
#include "fdosc/nonrel.hpp"
#include "fdosc/rel.hpp"
#include "fdosc/sample_grid.hpp"

namespace fdosc::harness {

struct ToleranceOverrides {
  std::optional<double> all_hard;           ///< replaces every hard tolerance
  std::map<std::string, double> by_check;   ///< wins over all_hard
};

/// Every check the suite runs, in catalogue order.
inline std::vector<CheckSpec> check_catalogue() {
  using K = CheckKind;
  namespace c = checks;
  return {
      {"specfun_gamma_recurrence", K::kHard, 1e-12, c::gamma_recurrence},
      {"specfun_gamma_reflection", K::kHard, 1e-11, c::gamma_reflection},
      {"specfun_generalized_degree_recurrence", K::kHard, 1e-12, c::generalized_degree_recurrence},
      {"specfun_laguerre_recurrence", K::kHard, 1e-12, c::laguerre_recurrence},
      {"specfun_cdhahn_symmetry", K::kHard, 1e-12, c::cdhahn_symmetry},
      {"opcore_shift_exactness", K::kHard, 1e-13, c::shift_exactness},
      {"opcore_algebra", K::kHard, 1e-12, c::operator_algebra},
      {"opcore_commutator_antisymmetry", K::kHard, 1e-13, c::commutator_antisymmetry},
      {"planewave_eigen", K::kHard, 1e-13, c::plane_wave_eigen},
      {"planewave_forms_agree", K::kHard, 1e-13, c::plane_wave_forms},
      {"planewave_mass_shell", K::kHard, 1e-13, c::plane_wave_mass_shell},
      {"planewave_free_hamiltonian", K::kHard, 1e-13, c::free_limit_hamiltonian},
      {"nonrel_eigen", K::kHard, 1e-10, c::nonrel_eigen},
      {"nonrel_factorization", K::kHard, 1e-9, c::nonrel_factorization},
      {"nonrel_c_commutator", K::kHard, 1e-9, c::nonrel_c_commutator},
      {"nonrel_xi_c_commutator", K::kHard, 1e-9, c::nonrel_xi_c_commutator},
      {"nonrel_lowering_forms_agree", K::kHard, 1e-9, c::nonrel_lowering_forms},
      {"nonrel_ladder_commutators", K::kHard, 1e-9, c::nonrel_ladder_commutators},
      {"nonrel_su11_closure", K::kHard, 1e-9, c::nonrel_su11_closure},
      {"nonrel_casimir", K::kHard, 1e-9, c::nonrel_casimir},
      {"nonrel_ground_annihilation", K::kHard, 1e-12, c::nonrel_ground_annihilation},
      {"nonrel_ladder_coefficients", K::kHard, 1e-9, c::nonrel_ladder_coefficients},
      {"nonrel_ladder_reconstruction", K::kHard, 1e-8, c::nonrel_ladder_reconstruction},
      {"nonrel_normalization", K::kHard, 1e-8, c::nonrel_normalization},
      {"nonrel_matrix_spectrum", K::kHard, 1e-3, c::nonrel_matrix_spectrum},
      {"nonrel_spectrum_printed_form", K::kReportOnly, 1e-3, c::nonrel_printed_spectrum},
      {"rel_eigen", K::kHard, 1e-8, c::rel_eigen},
      {"rel_factorization_eigen", K::kHard, 1e-8, c::rel_factorization_eigen},
      {"rel_factorization_random", K::kHard, 1e-7, c::rel_factorization_random},
      {"rel_b_adjoint", K::kHard, 1e-12, c::rel_b_adjoint},
      {"rel_b_ground_annihilation", K::kHard, 1e-10, c::rel_b_ground},
      {"rel_b_commutator_printed_form", K::kReportOnly, 1e-8, c::rel_b_commutator_printed},
      {"rel_lowering_commutator", K::kHard, 1e-8, c::rel_lowering_commutator},
      {"rel_raising_commutator", K::kHard, 1e-8, c::rel_raising_commutator},
      {"rel_ladder_commutators_random", K::kHard, 1e-7, c::rel_ladder_commutators_random},
      {"rel_lowering_ground_annihilation", K::kHard, 1e-10, c::rel_lowering_ground},
      {"rel_raising_is_adjoint", K::kHard, 1e-11, c::rel_raising_adjoint},
      {"rel_lowering_factorized_form", K::kHard, 1e-10, c::rel_lowering_factorized},
      {"rel_lowering_factorized_printed_form", K::kReportOnly, 1e-10, c::rel_lowering_factorized_printed},
      {"rel_momentum_commutator", K::kHard, 1e-10, c::rel_momentum_commutator},
      {"rel_momentum_free_limit", K::kHard, 1e-13, c::rel_momentum_free_limit},
      {"rel_free_mass_shell", K::kHard, 1e-12, c::rel_free_mass_shell},
      {"rel_ladder_bracket", K::kHard, 1e-7, c::rel_ladder_bracket},
      {"rel_ladder_coefficients", K::kHard, 1e-8, c::rel_ladder_coefficients},
      {"rel_ladder_coefficient_recursion", K::kHard, 1e-8, c::rel_ladder_coefficient_recursion},
      {"rel_ladder_coefficient_printed_form", K::kReportOnly, 1e-6, c::rel_ladder_coefficient_printed},
      {"rel_kappa", K::kHard, 1e-6, c::rel_kappa},
      {"rel_ladder_reconstruction", K::kHard, 1e-6, c::rel_ladder_reconstruction},
      {"rel_su11_closure", K::kHard, 1e-6, c::rel_su11_closure},
      {"rel_casimir", K::kHard, 1e-8, c::rel_casimir},
      {"rel_spectrum_above_rest", K::kHard, 0.0, c::rel_spectrum_above_rest},
      {"rel_nonrel_limit_linear", K::kHard, 0.2, c::rel_limit_linear},
      {"rel_nonrel_limit_quadratic_rate", K::kHard, 0.2, c::rel_limit_quadratic_rate},
      {"rel_nonrel_limit_quadratic_size", K::kHard, 1.0, c::rel_limit_quadratic_size},
      {"rel_nonrel_limit_alpha", K::kHard, 1e-3, c::rel_limit_alpha},
  };
}

/// Validates parameters and builds both models; throws CouplingError.
inline SuiteContext make_context(double omega0, double g0, int n_max, const SampleGrid& grid) {
  if (n_max < 1) throw ParameterError("run_suite: n_max must be at least 1");
  const auto rel = rel::make_rel_model(omega0, g0);
  const auto nonrel = nonrel::make_model(g0);
  return {rel, nonrel, grid, n_max, ModelParams{omega0, g0, n_max, rel.alpha, rel.nu, nonrel.d}};
}

inline CheckResult run_check(const CheckSpec& spec, const SuiteContext& ctx, const ToleranceOverrides& tol,
                             std::string* discrepancy) {
  double tolerance = spec.tolerance;
  if (spec.kind == CheckKind::kHard && tol.all_hard) tolerance = *tol.all_hard;
  if (auto it = tol.by_check.find(spec.id); it != tol.by_check.end()) tolerance = it->second;
  try {
    auto m = spec.run(ctx);
    *discrepancy = std::move(m.discrepancy);
    return make_result(spec.id, ctx.params, m.residual, tolerance, spec.kind, std::move(m.note));
  } catch (const std::exception& e) {
    return make_result(spec.id, ctx.params, std::numeric_limits<double>::infinity(), tolerance, spec.kind,
                       std::string("error: ") + e.what());
  }
}

/// Runs every check (concurrently) and merges the results in check_id order.
/// Parameter errors surface before any check starts; per-check failures are
/// recorded in the report.
inline VerificationReport run_suite(double omega0, double g0, int n_max,
                                    const SampleGrid& grid = SampleGrid::default_grid(),
                                    const ToleranceOverrides& tol = {}) {
  const auto ctx = make_context(omega0, g0, n_max, grid);
  const auto catalogue = check_catalogue();
  std::vector<CheckResult> results(catalogue.size());
  std::vector<std::string> notes(catalogue.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < catalogue.size(); i = next++) {
      results[i] = run_check(catalogue[i], ctx, tol, &notes[i]);
    }
  };
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  VerificationReport report{ctx.params, grid.description(), {}, {}};
  std::vector<std::size_t> order(catalogue.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return results[a].check_id < results[b].check_id; });
  for (auto i : order) {
    report.results.push_back(std::move(results[i]));
    if (!notes[i].empty()) report.discrepancies.push_back(notes[i]);
  }
  return report;
}

}  // namespace fdosc::harness
