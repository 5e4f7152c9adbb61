#include "lmg/core_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lmg {

void LmgParams::validate() const {
    if (!(h > 0.0) || !std::isfinite(h))
        throw ValidationError("h must be positive, got " + std::to_string(h));
    if (!(gamma_x >= 0.0) || !std::isfinite(gamma_x))
        throw ValidationError("gamma_x must be non-negative, got " + std::to_string(gamma_x));
    if (n_spins < 1)
        throw ValidationError("n_spins must be >= 1, got " + std::to_string(n_spins));
}

void BathParams::validate() const {
    if (!(eta >= 0.0) || !std::isfinite(eta))
        throw ValidationError("eta must be non-negative, got " + std::to_string(eta));
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
        throw ValidationError("omega_c must be positive, got " + std::to_string(omega_c));
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ValidationError("beta must be positive, got " + std::to_string(beta));
}

Phase classify_phase(double h, double gamma, double rel_tol) {
    if (!(h > 0.0))
        throw ValidationError("classify_phase: h must be positive");
    if (std::abs(gamma - h) < rel_tol * h)
        throw CriticalPointError(h, gamma);
    return gamma < h ? Phase::Normal : Phase::SymmetryBroken;
}

double spectral_density(double omega, const BathParams& bath) {
    if (omega < 0.0)
        throw std::domain_error("spectral_density: omega must be >= 0");
    const double x = omega / bath.omega_c;
    return bath.eta * omega * x * x * std::exp(-x);
}

double renormalized_coupling(double gamma_x, const BathParams& bath) {
    return gamma_x - bath.eta * bath.omega_c / std::numbers::pi;
}

double bms_critical_coupling(double h, const BathParams& bath) {
    return h + bath.eta * bath.omega_c / std::numbers::pi;
}

double bose_occupation(double omega, double beta) {
    if (!(omega > 0.0))
        throw std::domain_error("bose_occupation: omega must be > 0");
    if (!(beta > 0.0))
        throw std::domain_error("bose_occupation: beta must be > 0");
    return 1.0 / std::expm1(beta * omega);
}

} // namespace lmg
