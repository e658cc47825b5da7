#ifndef FROBCENSUS_COMMANDS_HPP
#define FROBCENSUS_COMMANDS_HPP

#include <optional>
#include <string>

#include "frobcensus/census.hpp"

namespace frobcensus {

/// Everything `frobcensus census` needs; shared with the acceptance suite so
/// determinism checks exercise the same code path as the CLI.
struct CensusCommandConfig {
    std::string curve_coeffs; // "c0,c1,..." lowest degree first
    std::string label;
    int64_t x_max = 10'000;
    int threads = 1;
    bool extended = false;
    long trial_bound = 0;
    std::string jsonl_path;   // empty: skip
    std::string csv_path;
    std::string summary_path; // empty: print summary to stdout
};

/// Runs the census and writes JSONL/CSV/summary files. Returns the report.
CensusReport cmd_census(const CensusCommandConfig& cfg);

/// JSON table of sieve exponents for every regime at dimension g.
std::string exponents_json(int g);

/// Thread count resolution: explicit flag > FROBCENSUS_THREADS > hardware.
int resolve_threads(std::optional<int> flag_value);

} // namespace frobcensus

#endif
