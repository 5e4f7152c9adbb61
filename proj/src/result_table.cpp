#include "lmg/result_table.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace lmg {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void ResultTable::write_csv(std::ostream& os) const {
    for (const auto& [k, v] : metadata)
        os << "# " << k << "=" << v << "\n";
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << columns[c] << (c + 1 < columns.size() ? "," : "");
    os << ",status\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        for (std::size_t c = 0; c < row.size(); ++c)
            os << format_double(row[c]) << (c + 1 < row.size() ? "," : "");
        os << ',' << (skipped[r] ? "skipped" : "ok") << "\n";
    }
}

void ResultTable::write_json(std::ostream& os) const {
    nlohmann::ordered_json j;
    auto& meta = j["metadata"];
    for (const auto& [k, v] : metadata)
        meta[k] = v;
    j["columns"] = columns;
    auto& data = j["rows"];
    data = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json jr = nlohmann::json::array();
        for (double v : row)
            jr.push_back(format_double(v)); // strings keep NaN and full precision
        data.push_back(jr);
    }
    auto& status = j["status"];
    status = nlohmann::json::array();
    for (bool s : skipped)
        status.push_back(s ? "skipped" : "ok");
    os << j.dump(2) << "\n";
}

std::string ResultTable::deterministic_payload(bool json) const {
    ResultTable copy = *this;
    std::erase_if(copy.metadata, [](const auto& kv) { return kv.first == "timestamp"; });
    std::ostringstream os;
    if (json)
        copy.write_json(os);
    else
        copy.write_csv(os);
    return os.str();
}

} // namespace lmg
