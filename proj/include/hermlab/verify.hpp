#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hermlab {

struct ReportRow {
    std::string experiment;
    std::string params;
    double measured = 0.0;
    std::optional<double> reference;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyConfig {
    std::uint64_t seed = 20240817ULL;
    // scale knobs for the slow checks; 1 = the sizes used by the
    // acceptance criteria
    int quick = 0; // nonzero shrinks the expensive suites
};

// Suites: basis, special, timefreq, torus, propagators, all.
std::vector<ReportRow> run_suite(const std::string& name, const VerifyConfig& cfg);
bool all_pass(const std::vector<ReportRow>& rows);

// Reports carry the generator seed so every random check is replayable.
std::string report_csv(const std::vector<ReportRow>& rows, const VerifyConfig& cfg);
std::string report_json(const std::vector<ReportRow>& rows, const VerifyConfig& cfg);

} // namespace hermlab
