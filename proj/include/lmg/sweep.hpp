#pragma once

// Parameter sweeps with parallel execution and figure-data emission.

#include <span>
#include <string>
#include <vector>

#include "lmg/config.hpp"
#include "lmg/result_table.hpp"
#include "lmg/waiting_times.hpp"

namespace lmg {

// Evenly spaced grid with `steps` points from start to stop inclusive.
std::vector<double> linspace(double start, double stop, int steps);

struct SweepSpec {
    enum class Variable { GammaX, Temperature, Tau };
    Variable variable{Variable::GammaX};
    double start{0.0};
    double stop{1.0};
    int steps{2};
    std::vector<std::string> outputs; // observable names, see run_sweep
    // the fixed parameter record and frame selection live in RunConfig
};

struct SweepOptions {
    int n_threads{1};
    bool with_timestamp{true};
};

// Lowest-k exact and oscillator energies vs gamma_x (figure-1 style data).
ResultTable run_spectrum(const RunConfig& cfg, int k, std::span<const double> gammas,
                         bool exact, bool bosonic, const SweepOptions& opt = {});

// <Jz>/N over a (gamma_x, beta) grid from the exact Gibbs state and from the
// closed-form bosonic route (figure-2 style data).
ResultTable run_magnetization_grid(const RunConfig& cfg, std::span<const double> betas,
                                   std::span<const double> gammas, bool exact,
                                   bool bosonic, const SweepOptions& opt = {});

// omega, <d^dag d>, <a^dag a> per frame vs gamma_x (figure-3 style data).
ResultTable run_occupation(const RunConfig& cfg, std::span<const double> gammas,
                           const SweepOptions& opt = {});

// Waiting-time densities vs tau at fixed gamma_x; analytic and optionally the
// truncated-Fock numeric route (figure-4a style data).
ResultTable run_wtd_tau(const RunConfig& cfg, std::span<const WtdKind> kinds,
                        std::span<const double> taus, bool numeric,
                        const SweepOptions& opt = {});

// w_ee(tau_fixed) vs gamma_x per frame (figure-4b style data).
ResultTable run_wtd_gamma(const RunConfig& cfg, double tau_fixed,
                          std::span<const double> gammas, const SweepOptions& opt = {});

// Trajectory-histogram waiting-time densities against the analytic curves.
ResultTable run_wtd_trajectory(const RunConfig& cfg, Frame frame,
                               std::span<const WtdKind> kinds, std::int64_t n_jumps,
                               double bin_width, double max_tau,
                               const SweepOptions& opt = {});

// Generic one-variable sweep; recognised outputs per variable:
//   gamma_x:     omega, n_diag, n_mode, f_emit, f_absorb, jz_bosonic, jz_exact,
//                wtd_ee_tau0
//   temperature: n_diag, n_mode, jz_bosonic, jz_exact
//   tau:         wtd_ee, wtd_ae, wtd_ea, wtd_aa
// Frame-dependent outputs are emitted once per selected frame with a
// _bms/_polaron suffix.
ResultTable run_sweep(const RunConfig& cfg, const SweepSpec& spec,
                      const SweepOptions& opt = {});

} // namespace lmg
