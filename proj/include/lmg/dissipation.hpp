#pragma once

// Both master equations as rate models: Born-Markov-secular rates at the
// renormalized coupling, polaron rates at the bare coupling, thermal steady
// states, mode occupations and transient relaxation.

#include <vector>

#include "lmg/bosonic.hpp"
#include "lmg/core_model.hpp"

namespace lmg {

enum class Frame { Bms, Polaron };

struct RatePair {
    double f_emit{0.0};   // spontaneous + stimulated emission rate
    double f_absorb{0.0}; // absorption rate
    Frame frame{Frame::Polaron};
    double omega_used{0.0}; // transition frequency the rates were evaluated at

    // A^2 Gamma(omega) (or Abar^2 Gamma(omega)), the net relaxation rate.
    double gamma_eff() const { return f_emit - f_absorb; }
};

// F_e = A^2(h,gt) Gamma(omega(h,gt)) [1 + n_B], F_a likewise with n_B, all
// evaluated at the renormalized coupling gt. Throws CriticalPointError when
// |gt - h| < kRateGuardRelTol * h.
RatePair rates_bms(double h, double gamma_x, const BathParams& bath);

// Polaron-frame rates at the bare coupling with Abar and Gammabar ~ Gamma.
RatePair rates_polaron(double h, double gamma_x, const BathParams& bath);

// Thermal fixed point of the rate equation, f_absorb/(f_emit - f_absorb).
double steady_occupation_diagonal(const RatePair& rates);

// Same quantity directly from the oscillator frequency at the supplied
// in-frame coupling, n_B(omega(h,gamma)); usable arbitrarily close to the
// critical point (oscillator guard radius only).
double steady_occupation_diagonal(double h, double gamma_frame, double beta);

// Non-diagonal-basis occupation <a^dag a> = sinh^2(phi) +
// (cosh^2(phi) + sinh^2(phi)) n_B(omega) at the supplied in-frame coupling.
double steady_occupation_mode(double h, double gamma_frame, double beta);

// Frame-resolved steady-state summary; resolves the in-frame coupling
// (renormalized for Bms, bare for Polaron) internally.
struct SteadyState {
    double coupling_used{0.0}; // in-frame coupling the quantities refer to
    double omega{0.0};
    double n_diagonal{0.0}; // <d^dag d>
    double n_mode{0.0};     // <a^dag a>
};
SteadyState steady_state(double h, double gamma_x, double beta, const BathParams& bath,
                         Frame frame);

// Closed-form relaxation n(t) = n_ss + (n0 - n_ss) e^{-(f_e - f_a) t}.
double evolve_occupation(double n0, double t, const RatePair& rates);

// Geometric Fock-state weights of a thermal oscillator state,
// P_n = (n_B/(1+n_B))^n / (1+n_B) for n = 0..n_max.
struct FockDistribution {
    std::vector<double> probabilities;
    double tail_mass{0.0}; // analytic mass beyond n_max

    int n_max() const { return static_cast<int>(probabilities.size()) - 1; }
    bool tail_ok(double tol = 1e-10) const { return tail_mass <= tol; }
};

FockDistribution thermal_fock_distribution(double omega, double beta, int n_max);

// Smallest n_max with geometric tail mass below tail_tol; throws
// TruncationError if the cap cannot satisfy the bound.
int fock_truncation_for_tail(double n_b, double tail_tol = 1e-10, int cap = 10000);

} // namespace lmg
