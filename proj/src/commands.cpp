#include "frobcensus/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "frobcensus/asymptotics.hpp"
#include "frobcensus/errors.hpp"

namespace frobcensus {

CensusReport cmd_census(const CensusCommandConfig& cfg) {
    CurveModel curve = CurveModel::parse(cfg.curve_coeffs, cfg.label);
    CensusConfig census_cfg;
    census_cfg.x_max = cfg.x_max;
    census_cfg.threads = cfg.threads;
    census_cfg.extended = cfg.extended;
    census_cfg.trial_bound = cfg.trial_bound;
    CensusReport report = run_census(curve, census_cfg);

    auto write_file = [](const std::string& path, auto&& writer) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw invalid_input_error("cannot open output file: " + path);
        writer(out);
    };
    if (!cfg.jsonl_path.empty())
        write_file(cfg.jsonl_path, [&](std::ostream& o) { write_jsonl(report, o); });
    if (!cfg.csv_path.empty())
        write_file(cfg.csv_path, [&](std::ostream& o) { write_csv(report, o); });
    if (!cfg.summary_path.empty())
        write_file(cfg.summary_path, [&](std::ostream& o) { o << summary_json(report) << "\n"; });
    return report;
}

std::string exponents_json(int g) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["g"] = g;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Regime r : {Regime::GRH, Regime::GRH_AHC, Regime::GRH_AHC_PCC}) {
        const ExponentProfile p = optimal_theta(r, g);
        nlohmann::ordered_json row;
        row["regime"] = to_string(r);
        row["theta"] = p.theta.get_str();
        row["final_exponent"] = p.final_exponent.get_str();
        row["reference_theta"] = p.reference_theta.get_str();
        row["match"] = p.matches_reference;
        if (!p.matches_reference) row["discrepancy"] = p.note;
        rows.push_back(row);
    }
    const UnconditionalProfile u = unconditional_profile(g);
    nlohmann::ordered_json row;
    row["regime"] = to_string(Regime::UNCONDITIONAL);
    row["z_log_power"] = u.z_log_power.get_str();
    row["z_loglog_power"] = u.z_loglog_power.get_str();
    row["loglog_exponent"] = u.loglog_exp.get_str();
    row["log_exponent"] = u.log_exp.get_str();
    row["reference_loglog_exponent"] = u.reference_loglog_exp.get_str();
    row["reference_log_exponent"] = u.reference_log_exp.get_str();
    row["match"] = u.matches_reference;
    if (!u.matches_reference) row["discrepancy"] = u.note;
    rows.push_back(row);
    j["rows"] = rows;
    return j.dump(2);
}

int resolve_threads(std::optional<int> flag_value) {
    if (flag_value && *flag_value >= 1) return *flag_value;
    if (const char* env = std::getenv("FROBCENSUS_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace frobcensus
