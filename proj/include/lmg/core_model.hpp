#pragma once

// Shared parameter types, phase classification, spectral density, Bose
// function and coupling renormalization. Everything here is a pure function
// of immutable values and safe to call from any thread.

#include "lmg/errors.hpp"

namespace lmg {

// Collective-spin system: H = -h Jz - (gamma_x/N) Jx^2 in the j = N/2 sector.
struct LmgParams {
    double h{1.0};       // transverse field strength (energy)
    double gamma_x{0.5}; // spin-spin coupling (energy)
    int n_spins{1000};   // particle number N

    void validate() const; // throws ValidationError
};

// Bosonic reservoir with cubic spectral density
//   Gamma(w) = eta * w^3 / omega_c^2 * exp(-w/omega_c).
struct BathParams {
    double eta{0.6283185307179586}; // dimensionless coupling, 2*pi*0.1
    double omega_c{0.5};            // cutoff frequency (energy)
    double beta{1.79};              // inverse temperature (1/energy)

    void validate() const; // throws ValidationError
};

enum class Phase { Normal, SymmetryBroken };

// Relative guard radius around gamma = h inside which the closed-form
// oscillator quantities are singular.
inline constexpr double kCriticalRelTol = 1e-9;

// Relative guard radius for master-equation rate evaluation (the rates are
// themselves well defined closer in, but the perturbative expansion is not).
inline constexpr double kRateGuardRelTol = 1e-6;

// Normal for gamma < h, SymmetryBroken for gamma > h.
// Throws CriticalPointError when |gamma - h| < rel_tol * h.
Phase classify_phase(double h, double gamma, double rel_tol = kCriticalRelTol);

// Cubic reservoir spectral density, zero at omega = 0.
// Throws std::domain_error for omega < 0.
double spectral_density(double omega, const BathParams& bath);

// gamma_x - eta*omega_c/pi, the continuum evaluation of sum_k g_k^2/nu_k.
double renormalized_coupling(double gamma_x, const BathParams& bath);

// Location of the shifted critical point seen by the Born-Markov-secular
// treatment: h + eta*omega_c/pi.
double bms_critical_coupling(double h, const BathParams& bath);

// Bose distribution 1/(e^{beta w} - 1). Throws std::domain_error for
// omega <= 0 or beta <= 0.
double bose_occupation(double omega, double beta);

} // namespace lmg
