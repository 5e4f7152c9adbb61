#pragma once

// Rectangular numeric result payload with ordered key=value metadata, written
// as CSV (#-prefixed header) or JSON with identical content.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lmg {

inline constexpr const char* kVersion = "0.1.0";

std::string format_double(double v); // shortest round-trip "%.17g"

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<bool> skipped; // per-row critical-guard marker
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_meta(const std::string& key, const std::string& value) {
        metadata.emplace_back(key, value);
    }
    void add_meta(const std::string& key, double value) {
        metadata.emplace_back(key, format_double(value));
    }
    void add_row(std::vector<double> row, bool is_skipped = false) {
        rows.push_back(std::move(row));
        skipped.push_back(is_skipped);
    }

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

    // Serialized payload with any `timestamp` metadata line removed; two runs
    // with identical config and seed produce byte-identical values of this.
    std::string deterministic_payload(bool json = false) const;
};

} // namespace lmg
