#include "lmg/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "lmg/bosonic.hpp"
#include "lmg/dissipation.hpp"
#include "lmg/exact_lmg.hpp"
#include "lmg/parallel.hpp"

namespace lmg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void stamp(ResultTable& table, const RunConfig& cfg, const std::string& command,
           const SweepOptions& opt) {
    table.add_meta("program", "lmg");
    table.add_meta("version", kVersion);
    table.add_meta("command", command);
    table.add_meta("units", "energies in h, times in 1/h");
    for (const auto& [k, v] : cfg.echo())
        table.add_meta(k, v);
    if (opt.with_timestamp)
        table.add_meta("timestamp", utc_timestamp());
}

std::vector<Frame> selected_frames(FrameSelection sel) {
    switch (sel) {
    case FrameSelection::Bms: return {Frame::Bms};
    case FrameSelection::Polaron: return {Frame::Polaron};
    case FrameSelection::Both: return {Frame::Polaron, Frame::Bms};
    }
    return {};
}

const char* frame_suffix(Frame f) { return f == Frame::Bms ? "bms" : "polaron"; }

// Thermal <Jz>/N for a set of betas from one decomposition.
std::vector<double> gibbs_jz_density(const LmgParams& params, std::span<const double> betas) {
    const EigenDecomposition eig = full_decomposition(build_lmg_hamiltonian(params));
    const int dim = eig.dim;
    const double j = 0.5 * params.n_spins;
    std::vector<double> jz_n(static_cast<std::size_t>(dim), 0.0);
    for (int n = 0; n < dim; ++n) {
        double acc = 0.0;
        for (int m = 0; m < dim; ++m) {
            const double c = eig.vector(m, n);
            acc += (-j + m) * c * c;
        }
        jz_n[static_cast<std::size_t>(n)] = acc;
    }
    const double e0 = eig.eigenvalues.front();
    std::vector<double> out;
    out.reserve(betas.size());
    for (double beta : betas) {
        double z = 0.0, acc = 0.0;
        for (int n = 0; n < dim; ++n) {
            const double w = std::exp(-beta * (eig.eigenvalues[static_cast<std::size_t>(n)] - e0));
            if (w == 0.0)
                continue;
            z += w;
            acc += w * jz_n[static_cast<std::size_t>(n)];
        }
        out.push_back(acc / z / params.n_spins);
    }
    return out;
}

} // namespace

std::vector<double> linspace(double start, double stop, int steps) {
    if (steps < 1)
        throw ValidationError("linspace: steps must be >= 1");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    if (steps == 1) {
        grid[0] = start;
        return grid;
    }
    const double dx = (stop - start) / (steps - 1);
    for (int i = 0; i < steps; ++i)
        grid[static_cast<std::size_t>(i)] = start + i * dx;
    grid.back() = stop;
    return grid;
}

ResultTable run_spectrum(const RunConfig& cfg, int k, std::span<const double> gammas,
                         bool exact, bool bosonic, const SweepOptions& opt) {
    cfg.validate();
    if (k < 1 || k > cfg.lmg.n_spins + 1)
        throw ValidationError("spectrum: need 1 <= k <= N+1 = " +
                              std::to_string(cfg.lmg.n_spins + 1));
    if (!exact && !bosonic)
        throw ValidationError("spectrum: at least one of exact/bosonic required");

    ResultTable table;
    stamp(table, cfg, "spectrum", opt);
    table.add_meta("k", std::to_string(k));
    table.columns = {"gamma_x"};
    if (exact)
        for (int n = 0; n < k; ++n)
            table.columns.push_back("exact_e" + std::to_string(n));
    if (bosonic)
        for (int n = 0; n < k; ++n)
            table.columns.push_back("bosonic_e" + std::to_string(n));

    std::vector<std::vector<double>> rows(gammas.size());
    std::vector<char> skip(gammas.size(), 0);
    parallel_for(gammas.size(), opt.n_threads, [&](std::size_t i) {
        const double g = gammas[i];
        std::vector<double>& row = rows[i];
        row.push_back(g);
        if (exact) {
            LmgParams p = cfg.lmg;
            p.gamma_x = g;
            const SpectrumResult sp = lowest_eigenvalues(build_lmg_hamiltonian(p), k);
            row.insert(row.end(), sp.eigenvalues.begin(), sp.eigenvalues.end());
        }
        if (bosonic) {
            try {
                const auto e = oscillator_energies(solve_oscillator(cfg.lmg.h, g), k,
                                                   cfg.lmg.n_spins);
                row.insert(row.end(), e.begin(), e.end());
            } catch (const CriticalPointError&) {
                row.insert(row.end(), static_cast<std::size_t>(k), kNaN);
                skip[i] = 1;
            }
        }
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        table.add_row(std::move(rows[i]), skip[i] != 0);
    return table;
}

ResultTable run_magnetization_grid(const RunConfig& cfg, std::span<const double> betas,
                                   std::span<const double> gammas, bool exact,
                                   bool bosonic, const SweepOptions& opt) {
    cfg.validate();
    if (!exact && !bosonic)
        throw ValidationError("magnetization: at least one of exact/bosonic required");

    ResultTable table;
    stamp(table, cfg, "magnetization", opt);
    table.columns = {"gamma_x", "beta"};
    if (exact)
        table.columns.push_back("jz_exact_density");
    if (bosonic)
        table.columns.push_back("jz_bosonic_density");

    const std::size_t nb = betas.size();
    std::vector<std::vector<double>> rows(gammas.size() * nb);
    std::vector<char> skip(gammas.size() * nb, 0);
    parallel_for(gammas.size(), opt.n_threads, [&](std::size_t gi) {
        const double g = gammas[gi];
        std::vector<double> jz_exact;
        if (exact) {
            LmgParams p = cfg.lmg;
            p.gamma_x = g;
            jz_exact = gibbs_jz_density(p, betas);
        }
        for (std::size_t bi = 0; bi < nb; ++bi) {
            std::vector<double>& row = rows[gi * nb + bi];
            row = {g, betas[bi]};
            if (exact)
                row.push_back(jz_exact[bi]);
            if (bosonic) {
                try {
                    row.push_back(magnetization_polaron(cfg.lmg.h, g, betas[bi],
                                                        cfg.lmg.n_spins) /
                                  cfg.lmg.n_spins);
                } catch (const CriticalPointError&) {
                    row.push_back(kNaN);
                    skip[gi * nb + bi] = 1;
                }
            }
        }
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        table.add_row(std::move(rows[i]), skip[i] != 0);
    return table;
}

ResultTable run_occupation(const RunConfig& cfg, std::span<const double> gammas,
                           const SweepOptions& opt) {
    cfg.validate();
    const std::vector<Frame> frames = selected_frames(cfg.frame);

    ResultTable table;
    stamp(table, cfg, "occupation", opt);
    table.columns = {"gamma_x"};
    for (Frame f : frames) {
        const std::string s = frame_suffix(f);
        table.columns.push_back("omega_" + s);
        table.columns.push_back("n_diag_" + s);
        table.columns.push_back("n_mode_" + s);
    }

    std::vector<std::vector<double>> rows(gammas.size());
    std::vector<char> skip(gammas.size(), 0);
    parallel_for(gammas.size(), opt.n_threads, [&](std::size_t i) {
        std::vector<double>& row = rows[i];
        row.push_back(gammas[i]);
        for (Frame f : frames) {
            try {
                const SteadyState st =
                    steady_state(cfg.lmg.h, gammas[i], cfg.bath.beta, cfg.bath, f);
                row.insert(row.end(), {st.omega, st.n_diagonal, st.n_mode});
            } catch (const CriticalPointError&) {
                row.insert(row.end(), {kNaN, kNaN, kNaN});
                skip[i] = 1;
            }
        }
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        table.add_row(std::move(rows[i]), skip[i] != 0);
    return table;
}

ResultTable run_wtd_tau(const RunConfig& cfg, std::span<const WtdKind> kinds,
                        std::span<const double> taus, bool numeric,
                        const SweepOptions& opt) {
    cfg.validate();
    const std::vector<Frame> frames = selected_frames(cfg.frame);

    ResultTable table;
    stamp(table, cfg, "wtd", opt);
    table.add_meta("cut", "tau");
    table.columns = {"tau"};

    struct FrameRates {
        double geff, nb;
        int n_max;
    };
    std::vector<FrameRates> fr;
    for (Frame f : frames) {
        const RatePair r = (f == Frame::Bms)
                               ? rates_bms(cfg.lmg.h, cfg.lmg.gamma_x, cfg.bath)
                               : rates_polaron(cfg.lmg.h, cfg.lmg.gamma_x, cfg.bath);
        const double geff = r.gamma_eff();
        const double nb = r.f_absorb / geff;
        fr.push_back({geff, nb, fock_truncation_for_tail(nb)});
        const std::string s = frame_suffix(f);
        table.add_meta("gamma_eff_" + s, geff);
        table.add_meta("n_b_" + s, nb);
        for (WtdKind k : kinds) {
            table.columns.push_back("w_" + std::string(to_string(k)) + "_" + s);
            if (numeric)
                table.columns.push_back("w_" + std::string(to_string(k)) + "_" + s +
                                        "_numeric");
        }
    }

    std::vector<std::vector<double>> rows(taus.size());
    parallel_for(taus.size(), opt.n_threads, [&](std::size_t i) {
        std::vector<double>& row = rows[i];
        row.push_back(taus[i]);
        for (std::size_t fi = 0; fi < frames.size(); ++fi) {
            for (WtdKind k : kinds) {
                row.push_back(wtd_analytic(k, taus[i], fr[fi].geff, fr[fi].nb));
                if (numeric)
                    row.push_back(
                        wtd_numeric(k, taus[i], fr[fi].geff, fr[fi].nb, fr[fi].n_max));
            }
        }
    });
    for (auto& row : rows)
        table.add_row(std::move(row));
    return table;
}

ResultTable run_wtd_gamma(const RunConfig& cfg, double tau_fixed,
                          std::span<const double> gammas, const SweepOptions& opt) {
    cfg.validate();
    const std::vector<Frame> frames = selected_frames(cfg.frame);

    ResultTable table;
    stamp(table, cfg, "wtd", opt);
    table.add_meta("cut", "gamma");
    table.add_meta("tau_fixed", tau_fixed);
    table.columns = {"gamma_x"};
    for (Frame f : frames)
        table.columns.push_back("w_ee_" + std::string(frame_suffix(f)));

    std::vector<std::vector<PeakScanPoint>> scans;
    for (Frame f : frames)
        scans.push_back(wtd_peak_scan(f, gammas, tau_fixed, cfg.lmg.h, cfg.bath));

    for (std::size_t i = 0; i < gammas.size(); ++i) {
        std::vector<double> row = {gammas[i]};
        bool any_skip = false;
        for (const auto& scan : scans) {
            row.push_back(scan[i].value);
            any_skip = any_skip || scan[i].skipped;
        }
        table.add_row(std::move(row), any_skip);
    }
    return table;
}

ResultTable run_wtd_trajectory(const RunConfig& cfg, Frame frame,
                               std::span<const WtdKind> kinds, std::int64_t n_jumps,
                               double bin_width, double max_tau,
                               const SweepOptions& opt) {
    cfg.validate();
    const RatePair rates = (frame == Frame::Bms)
                               ? rates_bms(cfg.lmg.h, cfg.lmg.gamma_x, cfg.bath)
                               : rates_polaron(cfg.lmg.h, cfg.lmg.gamma_x, cfg.bath);
    const JumpRecord rec = sample_trajectory(rates, n_jumps, cfg.seed);
    const double geff = rates.gamma_eff();
    const double nb = rates.f_absorb / geff;

    ResultTable table;
    stamp(table, cfg, "wtd", opt);
    table.add_meta("cut", "trajectory");
    table.add_meta("n_jumps", std::to_string(n_jumps));
    table.add_meta("gamma_eff", geff);
    table.add_meta("n_b", nb);
    table.columns = {"tau"};
    std::vector<WtdHistogram> hists;
    for (WtdKind k : kinds) {
        hists.push_back(wtd_histogram(rec, k, bin_width, max_tau));
        table.columns.push_back("w_" + std::string(to_string(k)) + "_sim");
        table.columns.push_back("w_" + std::string(to_string(k)) + "_analytic");
    }
    const std::size_t n_bins = hists.front().density.size();
    for (std::size_t b = 0; b < n_bins; ++b) {
        std::vector<double> row = {hists.front().center(static_cast<int>(b))};
        for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
            row.push_back(hists[ki].density[b]);
            row.push_back(
                wtd_analytic(kinds[ki], hists[ki].center(static_cast<int>(b)), geff, nb));
        }
        table.add_row(std::move(row));
    }
    return table;
}

ResultTable run_sweep(const RunConfig& cfg, const SweepSpec& spec,
                      const SweepOptions& opt) {
    cfg.validate();
    if (spec.steps < 2)
        throw ValidationError("sweep: steps must be >= 2");
    if (spec.outputs.empty())
        throw ValidationError("sweep: at least one output observable required");
    const std::vector<double> grid = linspace(spec.start, spec.stop, spec.steps);
    const std::vector<Frame> frames = selected_frames(cfg.frame);

    auto has = [&](const std::string& name) {
        return std::find(spec.outputs.begin(), spec.outputs.end(), name) !=
               spec.outputs.end();
    };

    ResultTable table;
    stamp(table, cfg, "sweep", opt);

    if (spec.variable == SweepSpec::Variable::Tau) {
        for (const std::string& o : spec.outputs)
            if (o != "wtd_ee" && o != "wtd_ae" && o != "wtd_ea" && o != "wtd_aa")
                throw ValidationError("sweep over tau: unknown output '" + o + "'");
        std::vector<WtdKind> kinds;
        if (has("wtd_ee")) kinds.push_back(WtdKind::EE);
        if (has("wtd_ae")) kinds.push_back(WtdKind::AE);
        if (has("wtd_ea")) kinds.push_back(WtdKind::EA);
        if (has("wtd_aa")) kinds.push_back(WtdKind::AA);
        ResultTable t = run_wtd_tau(cfg, kinds, grid, false, opt);
        t.metadata = table.metadata;
        return t;
    }

    const bool is_gamma = spec.variable == SweepSpec::Variable::GammaX;
    for (const std::string& o : spec.outputs) {
        static const char* gamma_outputs[] = {"omega",   "n_diag",     "n_mode",
                                              "f_emit",  "f_absorb",   "jz_bosonic",
                                              "jz_exact", "wtd_ee_tau0"};
        static const char* temp_outputs[] = {"n_diag", "n_mode", "jz_bosonic", "jz_exact"};
        bool ok = false;
        if (is_gamma)
            for (const char* v : gamma_outputs) ok = ok || o == v;
        else
            for (const char* v : temp_outputs) ok = ok || o == v;
        if (!ok)
            throw ValidationError("sweep: unknown output '" + o + "' for variable " +
                                  (is_gamma ? "gamma_x" : "temperature"));
    }

    table.columns = {is_gamma ? "gamma_x" : "temperature"};
    const bool frame_dep = has("omega") || has("n_diag") || has("n_mode") ||
                           has("f_emit") || has("f_absorb") || has("wtd_ee_tau0");
    for (Frame f : frames) {
        const std::string s = frame_suffix(f);
        if (has("omega")) table.columns.push_back("omega_" + s);
        if (has("n_diag")) table.columns.push_back("n_diag_" + s);
        if (has("n_mode")) table.columns.push_back("n_mode_" + s);
        if (has("f_emit")) table.columns.push_back("f_emit_" + s);
        if (has("f_absorb")) table.columns.push_back("f_absorb_" + s);
        if (has("wtd_ee_tau0")) table.columns.push_back("wtd_ee_tau0_" + s);
        if (!frame_dep)
            break;
    }
    if (has("jz_bosonic")) table.columns.push_back("jz_bosonic_density");
    if (has("jz_exact")) table.columns.push_back("jz_exact_density");

    std::vector<std::vector<double>> rows(grid.size());
    std::vector<char> skip(grid.size(), 0);
    parallel_for(grid.size(), opt.n_threads, [&](std::size_t i) {
        const double x = grid[i];
        const double gamma = is_gamma ? x : cfg.lmg.gamma_x;
        const double beta = is_gamma ? cfg.bath.beta : 1.0 / x;
        std::vector<double>& row = rows[i];
        row.push_back(x);

        for (Frame f : frames) {
            const bool bms = f == Frame::Bms;
            if (has("omega") || has("n_diag") || has("n_mode")) {
                try {
                    BathParams bath = cfg.bath;
                    bath.beta = beta;
                    const SteadyState st = steady_state(cfg.lmg.h, gamma, beta, bath, f);
                    if (has("omega")) row.push_back(st.omega);
                    if (has("n_diag")) row.push_back(st.n_diagonal);
                    if (has("n_mode")) row.push_back(st.n_mode);
                } catch (const CriticalPointError&) {
                    for (const char* o : {"omega", "n_diag", "n_mode"})
                        if (has(o)) row.push_back(kNaN);
                    skip[i] = 1;
                }
            }
            if (has("f_emit") || has("f_absorb") || has("wtd_ee_tau0")) {
                try {
                    BathParams bath = cfg.bath;
                    bath.beta = beta;
                    const RatePair r = bms ? rates_bms(cfg.lmg.h, gamma, bath)
                                           : rates_polaron(cfg.lmg.h, gamma, bath);
                    if (has("f_emit")) row.push_back(r.f_emit);
                    if (has("f_absorb")) row.push_back(r.f_absorb);
                    if (has("wtd_ee_tau0"))
                        row.push_back(wtd_analytic(WtdKind::EE, 0.0, r.gamma_eff(),
                                                   steady_occupation_diagonal(r)));
                } catch (const CriticalPointError&) {
                    for (const char* o : {"f_emit", "f_absorb", "wtd_ee_tau0"})
                        if (has(o)) row.push_back(kNaN);
                    skip[i] = 1;
                }
            }
            if (!frame_dep)
                break;
        }
        if (has("jz_bosonic")) {
            try {
                row.push_back(
                    magnetization_polaron(cfg.lmg.h, gamma, beta, cfg.lmg.n_spins) /
                    cfg.lmg.n_spins);
            } catch (const CriticalPointError&) {
                row.push_back(kNaN);
                skip[i] = 1;
            }
        }
        if (has("jz_exact")) {
            LmgParams p = cfg.lmg;
            p.gamma_x = gamma;
            row.push_back(thermal_expectation_jz(p, beta) / cfg.lmg.n_spins);
        }
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        table.add_row(std::move(rows[i]), skip[i] != 0);
    return table;
}

} // namespace lmg
