#include "lmg/bosonic.hpp"

#include <cmath>
#include <numbers>

#include "lmg/quadrature.hpp"

namespace lmg {

OscillatorSolution solve_oscillator(double h, double gamma) {
    const Phase phase = classify_phase(h, gamma);
    OscillatorSolution sol;
    sol.phase = phase;
    if (phase == Phase::Normal) {
        sol.alpha = 0.0;
        sol.phi = 0.25 * std::log(h / (h - gamma));
        sol.omega = std::sqrt(h * (h - gamma));
        sol.c1 = 0.5 * h;
        sol.c2 = 0.5 * (sol.omega - h);
    } else {
        sol.alpha = std::sqrt(0.5 * (1.0 - h / gamma));
        sol.phi = 0.25 * std::log((gamma + h) / (4.0 * (gamma - h)));
        sol.omega = std::sqrt(gamma * gamma - h * h);
        sol.c1 = (h * h + gamma * gamma) / (4.0 * gamma);
        sol.c2 = 0.5 * (sol.omega - gamma);
    }
    return sol;
}

std::vector<double> oscillator_energies(const OscillatorSolution& sol, int n_levels,
                                        double n_spins) {
    if (n_levels < 0)
        throw ValidationError("oscillator_energies: n_levels must be >= 0");
    std::vector<double> e(static_cast<std::size_t>(n_levels));
    const double e0 = -n_spins * sol.c1 + sol.c2;
    for (int n = 0; n < n_levels; ++n)
        e[static_cast<std::size_t>(n)] = e0 + n * sol.omega;
    return e;
}

CouplingFactors coupling_factors(double h, double gamma) {
    const OscillatorSolution sol = solve_oscillator(h, gamma);
    CouplingFactors f;
    double c3, c3bar;
    if (sol.phase == Phase::Normal) {
        c3 = 1.0;
        c3bar = h;
    } else {
        c3 = std::numbers::sqrt2 * h / std::sqrt(gamma * (gamma + h));
        c3bar = h * std::sqrt(0.5 * (1.0 + h / gamma));
    }
    f.a_bms = 0.5 * c3 * std::exp(sol.phi);
    f.q_shift = sol.alpha * std::sqrt(1.0 - sol.alpha * sol.alpha);
    f.a_polaron = 0.5 * c3bar * std::exp(-sol.phi);
    return f;
}

OscillatorHDerivatives oscillator_h_derivatives(double h, double gamma) {
    const OscillatorSolution sol = solve_oscillator(h, gamma);
    OscillatorHDerivatives d;
    if (sol.phase == Phase::Normal) {
        d.domega_dh = (2.0 * h - gamma) / (2.0 * sol.omega);
        d.dc1_dh = 0.5;
        d.dc2_dh = 0.5 * (d.domega_dh - 1.0);
    } else {
        d.domega_dh = -h / sol.omega;
        d.dc1_dh = h / (2.0 * gamma);
        d.dc2_dh = 0.5 * d.domega_dh;
    }
    return d;
}

double field_renormalization_exponent(const BathParams& bath) {
    bath.validate();
    if (bath.eta == 0.0)
        return 0.0;
    // Gamma(w)/w^2 (n_B + 1/2) = eta w e^{-w/wc}/wc^2 (n_B + 1/2), with the
    // finite w -> 0 limit eta/(beta wc^2).
    const double wc2 = bath.omega_c * bath.omega_c;
    auto integrand = [&](double w) {
        if (w <= 0.0)
            return bath.eta / (bath.beta * wc2);
        const double occ = 1.0 / std::expm1(bath.beta * w);
        return bath.eta * w * std::exp(-w / bath.omega_c) / wc2 * (occ + 0.5);
    };
    const double upper = 40.0 * bath.omega_c;
    return quad::integrate(integrand, 0.0, upper) / (2.0 * std::numbers::pi);
}

double field_renormalization(const BathParams& bath, double n_spins) {
    if (!(n_spins >= 1.0))
        throw ValidationError("field_renormalization: n_spins must be >= 1");
    if (bath.eta == 0.0)
        return 1.0;
    return std::exp(-field_renormalization_exponent(bath) / n_spins);
}

double critical_point_polaron(double h, const BathParams& bath, double n_spins) {
    return h * field_renormalization(bath, n_spins);
}

double magnetization_polaron(double h, double gamma, double beta, double n_spins) {
    const OscillatorSolution sol = solve_oscillator(h, gamma);
    const OscillatorHDerivatives d = oscillator_h_derivatives(h, gamma);
    return -d.de0_dh(n_spins) - bose_occupation(sol.omega, beta) * d.domega_dh;
}

double magnetization_density_limit(double h, double gamma) {
    return classify_phase(h, gamma) == Phase::Normal ? 0.5 : h / (2.0 * gamma);
}

} // namespace lmg
