#include "lmg/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "lmg/result_table.hpp"

namespace lmg {

const char* to_string(FrameSelection f) {
    switch (f) {
    case FrameSelection::Bms: return "bms";
    case FrameSelection::Polaron: return "polaron";
    case FrameSelection::Both: return "both";
    }
    return "?";
}

FrameSelection frame_selection_from_string(const std::string& s) {
    if (s == "bms")
        return FrameSelection::Bms;
    if (s == "polaron")
        return FrameSelection::Polaron;
    if (s == "both")
        return FrameSelection::Both;
    throw ConfigError("field 'frame': expected bms|polaron|both, got '" + s + "'");
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    return {
        {"h", format_double(lmg.h)},
        {"gamma_x", format_double(lmg.gamma_x)},
        {"n_spins", std::to_string(lmg.n_spins)},
        {"eta", format_double(bath.eta)},
        {"omega_c", format_double(bath.omega_c)},
        {"beta", format_double(bath.beta)},
        {"frame", to_string(frame)},
        {"seed", std::to_string(seed)},
    };
}

void RunConfig::validate() const {
    lmg.validate();
    bath.validate();
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& field, const std::string& value, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size() || !std::isfinite(v))
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("field '" + field + "': not a number: '" + value + "'", line);
    }
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    std::optional<double> h, gamma_x, eta, omega_c, beta;
    std::optional<long long> n_spins;
    std::optional<std::string> frame;
    std::optional<unsigned long long> seed;

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value', got '" + line + "'", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw ConfigError("field '" + key + "': empty value", lineno);

        if (key == "h")
            h = parse_number(key, value, lineno);
        else if (key == "gamma_x")
            gamma_x = parse_number(key, value, lineno);
        else if (key == "n_spins")
            n_spins = static_cast<long long>(parse_number(key, value, lineno));
        else if (key == "eta")
            eta = parse_number(key, value, lineno);
        else if (key == "omega_c")
            omega_c = parse_number(key, value, lineno);
        else if (key == "beta")
            beta = parse_number(key, value, lineno);
        else if (key == "frame")
            frame = value;
        else if (key == "seed")
            seed = static_cast<unsigned long long>(parse_number(key, value, lineno));
        else
            throw ConfigError("unknown field '" + key + "'", lineno);
    }

    if (!h)
        throw ConfigError("missing required field 'h'");
    if (!gamma_x)
        throw ConfigError("missing required field 'gamma_x'");
    if (!n_spins)
        throw ConfigError("missing required field 'n_spins'");

    RunConfig cfg;
    cfg.lmg.h = *h;
    cfg.lmg.gamma_x = *gamma_x;
    cfg.lmg.n_spins = static_cast<int>(*n_spins);
    cfg.bath.eta = eta.value_or(2.0 * std::numbers::pi * 0.1);
    cfg.bath.omega_c = omega_c.value_or(0.5 * cfg.lmg.h);
    cfg.bath.beta = beta.value_or(1.79 / cfg.lmg.h);
    if (frame)
        cfg.frame = frame_selection_from_string(*frame);
    if (seed)
        cfg.seed = *seed;

    try {
        cfg.validate();
    } catch (const ValidationError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace lmg
