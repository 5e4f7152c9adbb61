#include "lmg/dissipation.hpp"

#include <cmath>
#include <string>

namespace lmg {

namespace {

RatePair rates_at(double h, double coupling, const BathParams& bath, Frame frame) {
    bath.validate();
    if (std::abs(coupling - h) < kRateGuardRelTol * h)
        throw CriticalPointError(h, coupling);

    const OscillatorSolution sol = solve_oscillator(h, coupling);
    const CouplingFactors f = coupling_factors(h, coupling);
    const double a = (frame == Frame::Bms) ? f.a_bms : f.a_polaron;
    const double gw = a * a * spectral_density(sol.omega, bath);
    const double nb = bose_occupation(sol.omega, bath.beta);

    RatePair r;
    r.f_emit = gw * (1.0 + nb);
    r.f_absorb = gw * nb;
    r.frame = frame;
    r.omega_used = sol.omega;
    return r;
}

} // namespace

RatePair rates_bms(double h, double gamma_x, const BathParams& bath) {
    return rates_at(h, renormalized_coupling(gamma_x, bath), bath, Frame::Bms);
}

RatePair rates_polaron(double h, double gamma_x, const BathParams& bath) {
    return rates_at(h, gamma_x, bath, Frame::Polaron);
}

double steady_occupation_diagonal(const RatePair& rates) {
    return rates.f_absorb / (rates.f_emit - rates.f_absorb);
}

double steady_occupation_diagonal(double h, double gamma_frame, double beta) {
    return bose_occupation(solve_oscillator(h, gamma_frame).omega, beta);
}

double steady_occupation_mode(double h, double gamma_frame, double beta) {
    const OscillatorSolution sol = solve_oscillator(h, gamma_frame);
    const double s = std::sinh(sol.phi);
    const double c = std::cosh(sol.phi);
    return s * s + (c * c + s * s) * bose_occupation(sol.omega, beta);
}

SteadyState steady_state(double h, double gamma_x, double beta, const BathParams& bath,
                         Frame frame) {
    SteadyState st;
    st.coupling_used =
        (frame == Frame::Bms) ? renormalized_coupling(gamma_x, bath) : gamma_x;
    st.omega = solve_oscillator(h, st.coupling_used).omega;
    st.n_diagonal = steady_occupation_diagonal(h, st.coupling_used, beta);
    st.n_mode = steady_occupation_mode(h, st.coupling_used, beta);
    return st;
}

double evolve_occupation(double n0, double t, const RatePair& rates) {
    const double k = rates.gamma_eff();
    if (k == 0.0)
        return n0;
    const double n_ss = rates.f_absorb / k;
    return n_ss + (n0 - n_ss) * std::exp(-k * t);
}

FockDistribution thermal_fock_distribution(double omega, double beta, int n_max) {
    if (n_max < 0)
        throw ValidationError("thermal_fock_distribution: n_max must be >= 0");
    const double nb = bose_occupation(omega, beta); // validates omega, beta
    const double q = nb / (1.0 + nb);
    FockDistribution dist;
    dist.probabilities.resize(static_cast<std::size_t>(n_max) + 1);
    double p = 1.0 / (1.0 + nb);
    for (int n = 0; n <= n_max; ++n) {
        dist.probabilities[static_cast<std::size_t>(n)] = p;
        p *= q;
    }
    dist.tail_mass = std::pow(q, n_max + 1);
    return dist;
}

int fock_truncation_for_tail(double n_b, double tail_tol, int cap) {
    if (n_b < 0.0)
        throw ValidationError("fock_truncation_for_tail: n_b must be >= 0");
    if (n_b == 0.0)
        return 1;
    const double q = n_b / (1.0 + n_b);
    // tail after n_max is q^{n_max+1}
    const int needed = static_cast<int>(std::ceil(std::log(tail_tol) / std::log(q)));
    if (needed > cap)
        throw TruncationError("Fock truncation for n_b=" + std::to_string(n_b) +
                              " needs n_max=" + std::to_string(needed) +
                              " > cap=" + std::to_string(cap));
    return std::max(needed, 1);
}

} // namespace lmg
