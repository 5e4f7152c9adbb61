#pragma once

// Thermodynamic-limit machinery: mean-field displacement, Bogoliubov
// diagonalization of the Holstein-Primakoff Hamiltonian, interaction
// dressing factors in both frames, polaron field renormalization and the
// closed-form magnetization.

#include <vector>

#include "lmg/core_model.hpp"

namespace lmg {

// Effective-oscillator data for one phase:
//   normal (gamma < h):  phi = ln(h/(h-gamma))/4, alpha = 0,
//                        omega = sqrt(h(h-gamma)), C1 = h/2,
//                        C2 = (omega - h)/2
//   broken (gamma > h):  phi = ln((gamma+h)/(4(gamma-h)))/4,
//                        alpha = sqrt((1 - h/gamma)/2),
//                        omega = sqrt(gamma^2 - h^2),
//                        C1 = (h^2+gamma^2)/(4 gamma), C2 = (omega - gamma)/2
struct OscillatorSolution {
    Phase phase{Phase::Normal};
    double alpha{0.0}; // mean-field displacement, >= 0
    double phi{0.0};   // squeezing angle
    double omega{0.0}; // excitation frequency
    double c1{0.0};    // extensive ground-energy density constant
    double c2{0.0};    // intensive ground-energy offset
};

// Interaction dressing factors evaluated at the coupling the caller supplies
// (pass the renormalized coupling for a Born-Markov-secular rate, the bare
// one for a polaron rate).
struct CouplingFactors {
    double a_bms{0.0};     // A = (C3/2) e^{+phi}
    double q_shift{0.0};   // Q = alpha sqrt(1 - alpha^2), zero in the normal phase
    double a_polaron{0.0}; // Abar = (C3bar/2) e^{-phi}
};

// Closed-form h-derivatives of the Table-type oscillator quantities.
struct OscillatorHDerivatives {
    double domega_dh{0.0};
    double dc1_dh{0.0};
    double dc2_dh{0.0};

    double de0_dh(double n_spins) const { return dc2_dh - n_spins * dc1_dh; }
};

// Throws CriticalPointError when |gamma - h| < kCriticalRelTol * h.
OscillatorSolution solve_oscillator(double h, double gamma);

// E_n = -N C1 + C2 + n omega for n = 0..n_levels-1.
std::vector<double> oscillator_energies(const OscillatorSolution& sol, int n_levels,
                                        double n_spins);

CouplingFactors coupling_factors(double h, double gamma);

OscillatorHDerivatives oscillator_h_derivatives(double h, double gamma);

// Exponent delta of the polaron field renormalization D = exp(-delta/N):
// delta = (1/2pi) int_0^inf Gamma(w)/w^2 (n_B(w) + 1/2) dw, by adaptive
// quadrature on [0, 40 omega_c] (the exponential tail beyond is bounded and
// negligible for the cubic density).
double field_renormalization_exponent(const BathParams& bath);

// D = exp(-delta/N); identically 1 for eta = 0.
double field_renormalization(const BathParams& bath, double n_spins);

// Location of the polaron-frame critical point, h * D.
double critical_point_polaron(double h, const BathParams& bath, double n_spins);

// <Jz> = -dE0/dh - n_B(omega) domega/dh with closed-form derivatives.
double magnetization_polaron(double h, double gamma, double beta, double n_spins);

// Thermodynamic-limit magnetization density: 1/2 for h > gamma, h/(2 gamma)
// for gamma > h.
double magnetization_density_limit(double h, double gamma);

} // namespace lmg
