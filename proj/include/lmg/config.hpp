#pragma once

// Flat key=value run configuration shared by the CLI subcommands.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lmg/core_model.hpp"

namespace lmg {

enum class FrameSelection { Bms, Polaron, Both };

const char* to_string(FrameSelection f);
FrameSelection frame_selection_from_string(const std::string& s); // throws ConfigError

struct RunConfig {
    LmgParams lmg;
    BathParams bath;
    FrameSelection frame{FrameSelection::Both};
    std::uint64_t seed{12345};

    // All fields as config-format key=value pairs, defaults included.
    std::vector<std::pair<std::string, std::string>> echo() const;

    void validate() const;
};

// Parse a config file: one `key = value` assignment per line, `#` comments.
// Required keys: h, gamma_x, n_spins. Optional with defaults (scaled by h):
// eta = 2*pi*0.1, omega_c = 0.5 h, beta = 1.79/h, frame = both, seed = 12345.
// Throws ConfigError with line/field-precise diagnostics.
RunConfig parse_config(const std::string& path);

// Same, from an already-loaded text (used for metadata round-trips).
RunConfig parse_config_text(const std::string& text);

} // namespace lmg
