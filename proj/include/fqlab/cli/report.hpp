#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace fqlab::cli {

inline constexpr std::string_view kToolVersion = "fqlab 1.0.0";

/// Result of one CLI command. `rows` carries flat objects tagged by "kind"; `verdicts`
/// carries one object per checked item, each with a boolean "pass".
struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json modulus_by_q = nlohmann::json::object();
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json verdicts = nlohmann::json::array();
    bool overall = true;
    std::string version{kToolVersion};
    double elapsed_ms = 0.0;

    void add_verdict(nlohmann::json verdict);

    /// Without timing the serialization depends only on the command and its parameters.
    nlohmann::json to_json(bool with_timing = true) const;
    static RunReport from_json(const nlohmann::json& j);
};

/// Columns for each row kind; CSV output uses the kind of the first row.
const std::vector<std::string>& csv_columns(std::string_view kind);

void write_csv(const RunReport& report, std::ostream& out);

}  // namespace fqlab::cli
