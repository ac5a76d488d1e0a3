#include "fqlab/cli/report.hpp"

#include <map>
#include <ostream>

#include "fqlab/error.hpp"

namespace fqlab::cli {

using nlohmann::json;

void RunReport::add_verdict(json verdict) {
    if (!verdict.value("pass", false)) overall = false;
    verdicts.push_back(std::move(verdict));
}

json RunReport::to_json(bool with_timing) const {
    json j = {
        {"command", command},  {"params", params},   {"modulus_by_q", modulus_by_q},
        {"rows", rows},        {"verdicts", verdicts}, {"overall", overall ? "pass" : "fail"},
        {"version", version},
    };
    if (with_timing) j["timing"] = {{"elapsed_ms", elapsed_ms}};
    return j;
}

RunReport RunReport::from_json(const json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.modulus_by_q = j.at("modulus_by_q");
    r.rows = j.at("rows");
    r.verdicts = j.at("verdicts");
    r.overall = j.at("overall").get<std::string>() == "pass";
    r.version = j.at("version").get<std::string>();
    if (j.contains("timing")) r.elapsed_ms = j["timing"].value("elapsed_ms", 0.0);
    return r;
}

const std::vector<std::string>& csv_columns(std::string_view kind) {
    static const std::map<std::string, std::vector<std::string>, std::less<>> columns = {
        {"sweep",
         {"q", "k", "gcd_ok", "a_pp", "b_pp", "criterion", "k_prime", "k_prime_binary",
          "girth_class", "p_power"}},
        {"lemma32",
         {"q", "l", "t", "u", "v", "s", "x", "y", "lhs", "rhs", "holds", "degenerate_row",
          "complementary_shift"}},
        {"closing_sum", {"p", "x", "y", "value", "holds"}},
        {"girth", {"q", "f_x", "f_y", "g_x", "g_y", "k", "girth", "a_pp", "b_pp"}},
        {"conj1", {"q", "k", "girth_ge_8", "a_pp", "b_pp", "p_power"}},
        {"field", {"q", "p", "e", "modulus", "generator"}},
    };
    const auto it = columns.find(kind);
    if (it == columns.end()) {
        throw Error(ErrorKind::ParamDomain, "no CSV layout for row kind " + std::string(kind));
    }
    return it->second;
}

namespace {

std::string csv_cell(const json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) {
        const auto s = value.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    return value.dump();
}

}  // namespace

void write_csv(const RunReport& report, std::ostream& out) {
    if (report.rows.empty()) return;
    const auto kind = report.rows.front().at("kind").get<std::string>();
    const auto& cols = csv_columns(kind);
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
    out << '\n';
    for (const auto& row : report.rows) {
        if (row.at("kind") != kind) continue;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << (c ? "," : "") << csv_cell(row.contains(cols[c]) ? row[cols[c]] : json());
        }
        out << '\n';
    }
}

}  // namespace fqlab::cli
