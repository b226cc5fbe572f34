#pragma once

// Property suites, one per module. Each property records what was
// measured, the threshold it was held to and whether it passed. Properties
// marked non-gating are observations: they are reported but do not decide
// the suite's exit status.

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "workbench/cli/format.hpp"

namespace workbench::cli {

struct Property {
    std::string name;
    bool holds = false;
    bool gating = true;
    int criterion = 0;  // acceptance criterion this property feeds, 0 for none
    double value = 0.0;
    double tolerance = 0.0;
    std::string comparison;  // how value relates to tolerance, e.g. "<=" or ">="
    Json data;
};

struct CsvArtifact {
    std::string file;
    CsvTable table;
    bool matrix = false;
    Eigen::MatrixXcd entries;
    Json params;  // artifact-specific settings, embedded next to the suite config
};

struct SuiteReport {
    std::string module;
    std::uint64_t seed = 0;
    Json config;
    std::vector<Property> properties;
    std::vector<CsvArtifact> csvs;
    double seconds = 0.0;  // wall time, printed but never written to files

    bool passed() const;
    Json to_json() const;
};

/// bergman, bloch, hardy, gelfand, lie, colombeau.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown module.
SuiteReport run_suite(const std::string& module, std::uint64_t seed);

/// Runs the named suite ("all" expands to every module), writes
/// suite_<module>.json and the CSV artifacts into out_dir (when non-empty)
/// and prints a per-property summary with wall times to log.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, const std::filesystem::path& out_dir,
                                    std::ostream& log);

}  // namespace workbench::cli
