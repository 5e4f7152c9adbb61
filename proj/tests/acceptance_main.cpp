// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "lmg/bosonic.hpp"
#include "lmg/dissipation.hpp"
#include "lmg/exact_lmg.hpp"
#include "lmg/quadrature.hpp"
#include "lmg/rng.hpp"
#include "lmg/waiting_times.hpp"

#include "oracles.hpp"

using namespace lmg;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s  (%s)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), detail.c_str());
    if (!pass)
        ++g_failures;
}

const BathParams kFigBath{2.0 * std::numbers::pi * 0.1, 0.5, 1.79};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Spectrum agreement at N=1000 over the off-critical coupling ranges.
void criterion_1() {
    const double t_start = now_seconds();
    const int n_spins = 1000;
    const double h = 1.0;
    std::vector<double> grid;
    for (double g = 0.0; g <= 0.8 + 1e-9; g += 0.1)
        grid.push_back(g);
    for (double g = 1.2; g <= 2.0 + 1e-9; g += 0.1)
        grid.push_back(g);

    double worst_level = 0.0, worst_gap = 0.0;
    bool pass = true;
    for (double g : grid) {
        const bool broken = g > 1.0;
        const SpectrumResult sp = lowest_eigenvalues(
            build_lmg_hamiltonian(LmgParams{h, g, n_spins}), broken ? 5 : 3);
        std::vector<double> exact;
        if (broken)
            exact = {sp.eigenvalues[0], sp.eigenvalues[2], sp.eigenvalues[4]};
        else
            exact = {sp.eigenvalues[0], sp.eigenvalues[1], sp.eigenvalues[2]};

        std::vector<double> bos;
        if (g == 0.0) {
            for (int n = 0; n < 3; ++n)
                bos.push_back(-n_spins * h / 2.0 + n * h);
        } else {
            bos = oscillator_energies(solve_oscillator(h, g), 3, n_spins);
        }
        for (int n = 0; n < 3; ++n) {
            const double lvl = std::abs(exact[static_cast<std::size_t>(n)] -
                                        bos[static_cast<std::size_t>(n)]) /
                               std::abs(exact[static_cast<std::size_t>(n)]);
            worst_level = std::max(worst_level, lvl);
            pass = pass && lvl < 0.01;
            if (n > 0 && g > 0.0) {
                const double ge = exact[static_cast<std::size_t>(n)] - exact[0];
                const double gb = bos[static_cast<std::size_t>(n)] - bos[0];
                worst_gap = std::max(worst_gap, std::abs(ge - gb) / gb);
            }
        }
    }

    // parity degeneracy at gamma = 2h
    const SpectrumResult sp2 =
        lowest_eigenvalues(build_lmg_hamiltonian(LmgParams{h, 2.0, n_spins}), 2);
    const double split = sp2.eigenvalues[1] - sp2.eigenvalues[0];
    const double omega2 = solve_oscillator(h, 2.0).omega;
    pass = pass && split < 0.02 * omega2;

    const double elapsed = now_seconds() - t_start;
    pass = pass && elapsed < 60.0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "max level err %.2e, parity split %.1e < 0.02w, %0.1f s; gap-err "
                  "diagnostic %.2e",
                  worst_level, split, elapsed, worst_gap);
    report(1, "spectrum agreement, N=1000", pass, detail);
}

// ---------------------------------------------------------------------------
// 2. Divergence of steady occupations localized at the respective QPT.
void criterion_2() {
    const double h = 1.0, beta = kFigBath.beta;
    const double shifted = bms_critical_coupling(h, kFigBath); // 1.1 h
    bool pass = true;
    double max_outside = 0.0;
    for (double g = 0.8; g <= 1.3 + 1e-12; g += 0.002) {
        for (int frame = 0; frame < 2; ++frame) {
            const double crit = frame == 0 ? h : shifted;
            if (std::abs(g - crit) < 0.01 * h)
                continue; // inside the allowed divergence window
            const double coupling = frame == 0 ? g : renormalized_coupling(g, kFigBath);
            const double nd = steady_occupation_diagonal(h, coupling, beta);
            const double nm = steady_occupation_mode(h, coupling, beta);
            max_outside = std::max({max_outside, nd, nm});
            pass = pass && nd <= 1e3 && nm <= 1e3;
        }
    }
    // inside the windows the occupations do exceed 1e3 (probe both sides)
    double min_inside = 1e300;
    for (double d : {-1e-7, 1e-7}) {
        min_inside = std::min(min_inside,
                              steady_occupation_diagonal(h, h + d, beta));
        min_inside = std::min(min_inside,
                              steady_occupation_mode(h, h + d, beta));
        const double gt = renormalized_coupling(shifted + d, kFigBath);
        min_inside = std::min(min_inside, steady_occupation_diagonal(h, gt, beta));
        min_inside = std::min(min_inside, steady_occupation_mode(h, gt, beta));
    }
    pass = pass && min_inside > 1e3;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "max occupation outside windows %.3g <= 1e3, min at +-1e-7 probes "
                  "%.3g > 1e3",
                  max_outside, min_inside);
    report(2, "QPT position robustness (grid step 0.002h)", pass, detail);
}

// ---------------------------------------------------------------------------
// 3. Magnetization limits at beta = 50/h for both routes.
void criterion_3() {
    const int n = 1000;
    const double beta = 50.0;
    const double ex05 = thermal_expectation_jz(LmgParams{1.0, 0.5, n}, beta) / n;
    const double ex20 = thermal_expectation_jz(LmgParams{1.0, 2.0, n}, beta) / n;
    const double bo05 = magnetization_polaron(1.0, 0.5, beta, n) / n;
    const double bo20 = magnetization_polaron(1.0, 2.0, beta, n) / n;
    const bool pass = std::abs(ex05 - 0.5) / 0.5 < 0.01 &&
                      std::abs(bo05 - 0.5) / 0.5 < 0.01 &&
                      std::abs(ex20 - 0.25) / 0.25 < 0.01 &&
                      std::abs(bo20 - 0.25) / 0.25 < 0.01;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "gamma=0.5h: exact %.5f bosonic %.5f (target 0.5); gamma=2h: exact "
                  "%.5f bosonic %.5f (target 0.25)",
                  ex05, bo05, ex20, bo20);
    report(3, "magnetization limits, both routes", pass, detail);
}

// ---------------------------------------------------------------------------
// 4. Rate-scaling identities at random points.
void criterion_4() {
    Rng rng(777);
    bool pass = true;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double h = 0.5 + 1.5 * rng.uniform();
        const double gn = (0.02 + 0.93 * rng.uniform()) * h;
        const OscillatorSolution sn = solve_oscillator(h, gn);
        const CouplingFactors fn = coupling_factors(h, gn);
        const double r1 = std::abs(fn.a_polaron * fn.a_polaron / sn.omega - h / 4.0);
        const double r2 = std::abs(fn.a_bms * fn.a_bms * sn.omega - h / 4.0);

        const double gb = h * (1.05 + 2.5 * rng.uniform());
        const OscillatorSolution sb = solve_oscillator(h, gb);
        const CouplingFactors fb = coupling_factors(h, gb);
        const double r3 =
            std::abs(fb.a_polaron * fb.a_polaron / sb.omega - h * h / (4.0 * gb));
        worst = std::max({worst, r1, r2, r3});
        pass = pass && r1 < 1e-10 && r2 < 1e-10 && r3 < 1e-10;
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "max deviation %.2e < 1e-10", worst);
    report(4, "rate-scaling identities at 100 random points", pass, detail);
}

// ---------------------------------------------------------------------------
// 5. Triple agreement of the waiting-time routes.
void criterion_5() {
    const double t_start = now_seconds();
    const RatePair rates = rates_polaron(1.0, 0.5, kFigBath); // figure-4 working point
    const double geff = rates.gamma_eff();
    const double nb = steady_occupation_diagonal(rates);

    bool pass = std::abs(geff - 0.038188687343163404) < 1e-12 &&
                std::abs(nb - 0.39282717725370887) < 1e-12;

    const WtdKind kinds[] = {WtdKind::EE, WtdKind::AE, WtdKind::EA, WtdKind::AA};
    double worst_rel = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double tau = 20.0 / geff * i / 199.0;
        for (WtdKind k : kinds) {
            const double a = wtd_analytic(k, tau, geff, nb);
            const double n = wtd_numeric(k, tau, geff, nb, 500);
            const double rel = std::abs(a - n) / std::max(a, 1e-300);
            worst_rel = std::max(worst_rel, rel);
        }
    }
    pass = pass && worst_rel < 1e-8;

    const JumpRecord rec = sample_trajectory(rates, 1000000, 123456789);
    const double bin = 0.05 / geff;
    double worst_l1 = 0.0;
    for (WtdKind k : kinds) {
        const WtdHistogram hist = wtd_histogram(rec, k, bin, 60.0 / geff);
        double l1 = 0.0;
        for (std::size_t b = 0; b < hist.density.size(); ++b)
            l1 += std::abs(hist.density[b] -
                           wtd_analytic(k, hist.center(static_cast<int>(b)), geff, nb)) *
                  bin;
        worst_l1 = std::max(worst_l1, l1);
    }
    pass = pass && worst_l1 < 0.02;

    const double elapsed = now_seconds() - t_start;
    pass = pass && elapsed < 300.0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "analytic-vs-numeric max rel %.2e < 1e-8; trajectory max L1 %.4f < "
                  "0.02 (1e6 jumps); %.1f s",
                  worst_rel, worst_l1, elapsed);
    report(5, "WTD triple agreement", pass, detail);
}

// ---------------------------------------------------------------------------
// 6. Structural properties of the waiting-time distributions.
void criterion_6() {
    const double geff = 0.038188687343163404;
    const double nb = 0.39282717725370887;
    bool pass = true;

    for (double n_b : {0.1, nb, 1.5}) {
        const double ie = quad::integrate(
            [&](double t) {
                return wtd_analytic(WtdKind::AE, t, geff, n_b) +
                       wtd_analytic(WtdKind::EE, t, geff, n_b);
            },
            0.0, 2000.0 / geff, {1e-13, 1e-11, 48});
        const double ia = quad::integrate(
            [&](double t) {
                return wtd_analytic(WtdKind::AA, t, geff, n_b) +
                       wtd_analytic(WtdKind::EA, t, geff, n_b);
            },
            0.0, 2000.0 / geff, {1e-13, 1e-11, 48});
        pass = pass && std::abs(ie - 1.0) < 1e-8 && std::abs(ia - 1.0) < 1e-8;
    }

    // w_ee == w_aa identically
    for (int i = 0; i <= 100; ++i) {
        const double tau = 10.0 / geff * i / 100.0;
        pass = pass && wtd_analytic(WtdKind::EE, tau, geff, nb) ==
                           wtd_analytic(WtdKind::AA, tau, geff, nb);
    }

    // low-temperature limit, sup norm over tau in [0, 30] with Gamma = 1
    double sup = 0.0;
    for (int i = 0; i <= 3000; ++i) {
        const double tau = 30.0 * i / 3000.0;
        sup = std::max(sup, std::abs(wtd_analytic(WtdKind::EA, tau, 1.0, 1e-6) -
                                     std::exp(-tau)));
    }
    pass = pass && sup < 1e-4;

    // rescaling covariance
    double worst = 0.0;
    for (double alpha : {2.0, 0.5, 3.7}) {
        for (int i = 0; i <= 50; ++i) {
            const double tau = 6.0 / geff * i / 50.0;
            for (WtdKind k : {WtdKind::EE, WtdKind::AE, WtdKind::EA, WtdKind::AA}) {
                const double lhs = wtd_analytic(k, tau, alpha * geff, nb);
                const double rhs = alpha * wtd_analytic(k, alpha * tau, geff, nb);
                worst = std::max(worst, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
            }
        }
    }
    pass = pass && worst < 1e-12;

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "norms within 1e-8; ee==aa exact; low-T sup %.2e < 1e-4; rescaling "
                  "max rel %.2e < 1e-12",
                  sup, worst);
    report(6, "WTD structural properties", pass, detail);
}

// ---------------------------------------------------------------------------
// 7. Closed-form h-derivatives vs central finite differences.
void criterion_7() {
    Rng rng(31337);
    bool pass = true;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double h = 0.3 + 2.0 * rng.uniform();
        const double g = (i % 2 == 0) ? (0.05 + 0.85 * rng.uniform()) * h
                                      : h * (1.15 + 2.0 * rng.uniform());
        const OscillatorHDerivatives d = oscillator_h_derivatives(h, g);
        const double dh = 1e-6 * h;
        const OscillatorSolution up = solve_oscillator(h + dh, g);
        const OscillatorSolution dn = solve_oscillator(h - dh, g);
        const double n_spins = 1000.0;
        const double fd_e0 = ((up.c2 - n_spins * up.c1) - (dn.c2 - n_spins * dn.c1)) /
                             (2.0 * dh);
        const double fd_w = (up.omega - dn.omega) / (2.0 * dh);
        const double r1 = std::abs(fd_e0 - d.de0_dh(n_spins)) / std::abs(fd_e0);
        const double r2 = std::abs(fd_w - d.domega_dh) / std::abs(fd_w);
        worst = std::max({worst, r1, r2});
        pass = pass && r1 < 1e-6 && r2 < 1e-6;
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "max rel deviation %.2e < 1e-6", worst);
    report(7, "gradient checks at 50 random off-critical points", pass, detail);
}

// ---------------------------------------------------------------------------
// 8. Field renormalization by two independent quadrature schemes.
void criterion_8() {
    const double d_lib = field_renormalization(kFigBath, 1000.0);
    // second scheme: composite Simpson on the same integrand, written here
    const double wc2 = kFigBath.omega_c * kFigBath.omega_c;
    auto integrand = [&](double w) {
        if (w <= 0.0)
            return kFigBath.eta / (kFigBath.beta * wc2);
        return kFigBath.eta * w * std::exp(-w / kFigBath.omega_c) / wc2 *
               (1.0 / std::expm1(kFigBath.beta * w) + 0.5);
    };
    const double delta_simpson =
        oracle::simpson(integrand, 0.0, 40.0 * kFigBath.omega_c, 1e-13) /
        (2.0 * std::numbers::pi);
    const double d_simpson = std::exp(-delta_simpson / 1000.0);
    bool pass = std::abs(d_lib - d_simpson) < 1e-8;

    double prev = 0.0;
    for (double n : {1.0, 10.0, 1e2, 1e3, 1e5, 1e8}) {
        const double d = field_renormalization(kFigBath, n);
        pass = pass && d > prev && d < 1.0;
        prev = d;
    }
    pass = pass && critical_point_polaron(1.0, kFigBath, 1000.0) < 1.0;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "|D_gk - D_simpson| = %.2e < 1e-8; D monotone in N; hD < h",
                  std::abs(d_lib - d_simpson));
    report(8, "field renormalization, two quadrature schemes", pass, detail);
}

// ---------------------------------------------------------------------------
// 9. Second-order transition: one-sided curvatures of -C1 at gamma = h.
void criterion_9() {
    const double h = 1.0, eps = 1e-4;
    auto negc1 = [&](double g) { return g == h ? -0.5 * h : -solve_oscillator(h, g).c1; };
    const double left =
        (negc1(h - 2 * eps) - 2.0 * negc1(h - eps) + negc1(h)) / (eps * eps);
    const double right =
        (negc1(h + 2 * eps) - 2.0 * negc1(h + eps) + negc1(h)) / (eps * eps);
    const double dl = (negc1(h) - negc1(h - eps)) / eps;
    const double dr = (negc1(h + eps) - negc1(h)) / eps;
    const bool pass = std::abs(left) < 1e-6 &&
                      std::abs(right - (-0.5 / h)) < 0.01 * 0.5 / h &&
                      std::abs(dl - dr) < 5e-3;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "curvature left %.2e, right %.4f (jump -1/(2h)); first diffs "
                  "continuous to O(eps)",
                  left, right);
    report(9, "second-order transition at gamma = h", pass, detail);
}

// ---------------------------------------------------------------------------
// 10. Documented disagreement of the two magnetization routes near criticality.
void criterion_10() {
    const int n = 1000;
    const double beta = kFigBath.beta;
    auto reldiff = [&](double g) {
        const double ex = thermal_expectation_jz(LmgParams{1.0, g, n}, beta);
        const double bo = magnetization_polaron(1.0, g, beta, n);
        return std::abs(ex - bo) / std::abs(ex);
    };
    const double far_normal = reldiff(0.5);
    const double far_broken = reldiff(1.5);
    const double near_crit = std::max(reldiff(0.98), reldiff(1.02));
    const bool pass = far_normal < 1e-3 && far_broken < 1e-3 && near_crit > 1e-2;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "agree far from criticality (%.1e at 0.5h, %.1e at 1.5h); disagree "
                  "near it (%.1e at h+-0.02h)",
                  far_normal, far_broken, near_crit);
    report(10, "exact vs bosonic disagreement pattern near (gamma~h, T>0)", pass, detail);
}

} // namespace

int main() {
    std::printf("acceptance suite: dissipative LMG model\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0)
        std::printf("all 10 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures;
}
