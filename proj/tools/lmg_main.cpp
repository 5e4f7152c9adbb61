// Command-line front end: parameter sweeps and figure-data emission for the
// dissipative LMG model in the Born-Markov-secular and polaron frames.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmg/config.hpp"
#include "lmg/errors.hpp"
#include "lmg/sweep.hpp"
#include "lmg/waiting_times.hpp"

namespace {

struct GlobalOpts {
    std::optional<std::string> config_path;
    std::optional<double> h, gamma_x, eta, omega_c, beta;
    std::optional<int> n_spins;
    std::optional<std::string> frame;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
    std::string format = "csv";
    int threads = 1;
};

lmg::RunConfig resolve_config(const GlobalOpts& g) {
    lmg::RunConfig cfg;
    if (g.config_path) {
        cfg = lmg::parse_config(*g.config_path);
    } else {
        cfg.lmg.h = g.h.value_or(1.0);
        cfg.lmg.gamma_x = 0.5 * cfg.lmg.h;
        cfg.lmg.n_spins = 1000;
        cfg.bath.omega_c = 0.5 * cfg.lmg.h;
        cfg.bath.beta = 1.79 / cfg.lmg.h;
    }
    if (g.h) cfg.lmg.h = *g.h;
    if (g.gamma_x) cfg.lmg.gamma_x = *g.gamma_x;
    if (g.n_spins) cfg.lmg.n_spins = *g.n_spins;
    if (g.eta) cfg.bath.eta = *g.eta;
    if (g.omega_c) cfg.bath.omega_c = *g.omega_c;
    if (g.beta) cfg.bath.beta = *g.beta;
    if (g.frame) cfg.frame = lmg::frame_selection_from_string(*g.frame);
    if (g.seed) cfg.seed = *g.seed;
    cfg.validate();
    return cfg;
}

void write_table(const lmg::ResultTable& table, const GlobalOpts& g) {
    std::ostringstream buf;
    if (g.format == "json")
        table.write_json(buf);
    else
        table.write_csv(buf);
    if (g.out == "-") {
        std::cout << buf.str();
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f)
            throw lmg::ValidationError("cannot open output file '" + g.out + "'");
        f << buf.str();
    }
}

std::vector<lmg::WtdKind> parse_kinds(const std::string& csv) {
    std::vector<lmg::WtdKind> kinds;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok == "ee") kinds.push_back(lmg::WtdKind::EE);
        else if (tok == "ae") kinds.push_back(lmg::WtdKind::AE);
        else if (tok == "ea") kinds.push_back(lmg::WtdKind::EA);
        else if (tok == "aa") kinds.push_back(lmg::WtdKind::AA);
        else throw lmg::ValidationError("unknown WTD kind '" + tok + "'");
    }
    if (kinds.empty())
        throw lmg::ValidationError("no WTD kinds given");
    return kinds;
}

lmg::Frame single_frame(const lmg::RunConfig& cfg) {
    switch (cfg.frame) {
    case lmg::FrameSelection::Bms: return lmg::Frame::Bms;
    case lmg::FrameSelection::Polaron: return lmg::Frame::Polaron;
    default:
        throw lmg::ValidationError("this command needs --frame bms or --frame polaron");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dissipative LMG model: exact finite-size and bosonic "
                 "thermodynamic-limit treatments in the BMS and polaron frames"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "config file (key = value lines)");
    app.add_option("--h", g.h, "field strength (default 1)");
    app.add_option("--gamma-x", g.gamma_x, "spin-spin coupling");
    app.add_option("--n-spins", g.n_spins, "particle number N");
    app.add_option("--eta", g.eta, "bath coupling strength");
    app.add_option("--omega-c", g.omega_c, "bath cutoff frequency");
    app.add_option("--beta", g.beta, "inverse bath temperature");
    app.add_option("--frame", g.frame, "bms|polaron|both")
        ->check(CLI::IsMember({"bms", "polaron", "both"}));
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--out", g.out, "output path, '-' for stdout");
    app.add_option("--format", g.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", g.threads, "sweep worker threads");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "lowest-k exact vs oscillator energies");
    int spec_k = 3;
    double spec_gmin = 0.0, spec_gmax = 2.0;
    int spec_gsteps = 41;
    std::string spec_methods = "both";
    spectrum->add_option("--k", spec_k, "number of levels");
    spectrum->add_option("--gamma-min", spec_gmin);
    spectrum->add_option("--gamma-max", spec_gmax);
    spectrum->add_option("--gamma-steps", spec_gsteps);
    spectrum->add_option("--methods", spec_methods, "exact|bosonic|both")
        ->check(CLI::IsMember({"exact", "bosonic", "both"}));

    // magnetization
    auto* mag = app.add_subcommand("magnetization", "thermal <Jz>/N over a (gamma, T) grid");
    double mag_gmin = 0.0, mag_gmax = 2.0, mag_tmin = 0.05, mag_tmax = 1.0;
    int mag_gsteps = 21, mag_tsteps = 10;
    std::string mag_methods = "both";
    mag->add_option("--gamma-min", mag_gmin);
    mag->add_option("--gamma-max", mag_gmax);
    mag->add_option("--gamma-steps", mag_gsteps);
    mag->add_option("--temp-min", mag_tmin, "k_B T grid start");
    mag->add_option("--temp-max", mag_tmax);
    mag->add_option("--temp-steps", mag_tsteps);
    mag->add_option("--methods", mag_methods, "exact|bosonic|both")
        ->check(CLI::IsMember({"exact", "bosonic", "both"}));

    // occupation
    auto* occ = app.add_subcommand("occupation", "steady-state mode occupations vs gamma");
    double occ_gmin = 0.5, occ_gmax = 1.5;
    int occ_gsteps = 101;
    occ->add_option("--gamma-min", occ_gmin);
    occ->add_option("--gamma-max", occ_gmax);
    occ->add_option("--gamma-steps", occ_gsteps);

    // wtd
    auto* wtd = app.add_subcommand("wtd", "waiting-time distributions");
    std::string wtd_cut = "tau", wtd_kinds = "ee,ae,ea,aa";
    double wtd_tau_max = 200.0, wtd_tau_fixed = 0.0;
    int wtd_tau_steps = 201;
    double wtd_gmin = 0.5, wtd_gmax = 1.5;
    int wtd_gsteps = 101;
    bool wtd_numeric_cols = false;
    std::int64_t wtd_jumps = 1000000;
    double wtd_bin = 1.0, wtd_max_tau = 150.0;
    wtd->add_option("--cut", wtd_cut, "tau|gamma|trajectory")
        ->check(CLI::IsMember({"tau", "gamma", "trajectory"}));
    wtd->add_option("--kinds", wtd_kinds, "comma list of ee,ae,ea,aa");
    wtd->add_option("--tau-max", wtd_tau_max, "tau grid end (units 1/h)");
    wtd->add_option("--tau-steps", wtd_tau_steps);
    wtd->add_option("--tau-fixed", wtd_tau_fixed, "fixed tau for the gamma cut");
    wtd->add_option("--gamma-min", wtd_gmin);
    wtd->add_option("--gamma-max", wtd_gmax);
    wtd->add_option("--gamma-steps", wtd_gsteps);
    wtd->add_flag("--numeric", wtd_numeric_cols, "add truncated-Fock numeric columns");
    wtd->add_option("--n-jumps", wtd_jumps, "trajectory length");
    wtd->add_option("--bin-width", wtd_bin, "histogram bin width");
    wtd->add_option("--hist-max-tau", wtd_max_tau, "histogram range");

    // trajectory
    auto* traj = app.add_subcommand("trajectory", "stochastic jump log (CSV: time,type)");
    std::int64_t traj_jumps = 100000;
    traj->add_option("--n-jumps", traj_jumps);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "generic one-variable sweep");
    std::string sweep_var = "gamma_x", sweep_outputs = "omega,n_diag,n_mode";
    double sweep_start = 0.5, sweep_stop = 1.5;
    int sweep_steps = 101;
    sweep->add_option("--variable", sweep_var, "gamma_x|temperature|tau")
        ->check(CLI::IsMember({"gamma_x", "temperature", "tau"}));
    sweep->add_option("--start", sweep_start);
    sweep->add_option("--stop", sweep_stop);
    sweep->add_option("--steps", sweep_steps);
    sweep->add_option("--outputs", sweep_outputs, "comma list of observables");

    try {
        app.parse(argc, argv);

        const lmg::RunConfig cfg = resolve_config(g);
        lmg::SweepOptions opt;
        opt.n_threads = g.threads;

        if (spectrum->parsed()) {
            const auto gammas = lmg::linspace(spec_gmin, spec_gmax, spec_gsteps);
            write_table(lmg::run_spectrum(cfg, spec_k, gammas,
                                          spec_methods != "bosonic",
                                          spec_methods != "exact", opt),
                        g);
        } else if (mag->parsed()) {
            const auto gammas = lmg::linspace(mag_gmin, mag_gmax, mag_gsteps);
            const auto temps = lmg::linspace(mag_tmin, mag_tmax, mag_tsteps);
            std::vector<double> betas;
            for (double t : temps)
                betas.push_back(1.0 / t);
            write_table(lmg::run_magnetization_grid(cfg, betas, gammas,
                                                    mag_methods != "bosonic",
                                                    mag_methods != "exact", opt),
                        g);
        } else if (occ->parsed()) {
            const auto gammas = lmg::linspace(occ_gmin, occ_gmax, occ_gsteps);
            write_table(lmg::run_occupation(cfg, gammas, opt), g);
        } else if (wtd->parsed()) {
            const auto kinds = parse_kinds(wtd_kinds);
            if (wtd_cut == "tau") {
                const auto taus = lmg::linspace(0.0, wtd_tau_max, wtd_tau_steps);
                write_table(lmg::run_wtd_tau(cfg, kinds, taus, wtd_numeric_cols, opt), g);
            } else if (wtd_cut == "gamma") {
                const auto gammas = lmg::linspace(wtd_gmin, wtd_gmax, wtd_gsteps);
                write_table(lmg::run_wtd_gamma(cfg, wtd_tau_fixed, gammas, opt), g);
            } else {
                write_table(lmg::run_wtd_trajectory(cfg, single_frame(cfg), kinds,
                                                    wtd_jumps, wtd_bin, wtd_max_tau, opt),
                            g);
            }
        } else if (traj->parsed()) {
            const lmg::Frame fr = single_frame(cfg);
            const lmg::RatePair rates =
                fr == lmg::Frame::Bms
                    ? lmg::rates_bms(cfg.lmg.h, cfg.lmg.gamma_x, cfg.bath)
                    : lmg::rates_polaron(cfg.lmg.h, cfg.lmg.gamma_x, cfg.bath);
            const lmg::JumpRecord rec =
                lmg::sample_trajectory(rates, traj_jumps, cfg.seed);
            std::ostringstream buf;
            for (const auto& [k, v] : cfg.echo())
                buf << "# " << k << "=" << v << "\n";
            lmg::write_jump_record_csv(rec, buf);
            if (g.out == "-") {
                std::cout << buf.str();
            } else {
                std::ofstream f(g.out, std::ios::binary);
                if (!f)
                    throw lmg::ValidationError("cannot open output file '" + g.out + "'");
                f << buf.str();
            }
        } else if (sweep->parsed()) {
            lmg::SweepSpec spec;
            spec.variable = sweep_var == "gamma_x" ? lmg::SweepSpec::Variable::GammaX
                            : sweep_var == "temperature"
                                ? lmg::SweepSpec::Variable::Temperature
                                : lmg::SweepSpec::Variable::Tau;
            spec.start = sweep_start;
            spec.stop = sweep_stop;
            spec.steps = sweep_steps;
            std::istringstream is(sweep_outputs);
            std::string tok;
            while (std::getline(is, tok, ','))
                if (!tok.empty())
                    spec.outputs.push_back(tok);
            write_table(lmg::run_sweep(cfg, spec, opt), g);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const lmg::CriticalPointError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const lmg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const lmg::CapacityError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const lmg::ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const lmg::TruncationError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const lmg::InsufficientStatisticsError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
