#pragma once

#include "cobbdouglas/dataset.hpp"
#include "cobbdouglas/growth.hpp"
#include "cobbdouglas/hamiltonian.hpp"
#include "cobbdouglas/production.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace cobbdouglas {

inline constexpr int kReportSchemaVersion = 1;

struct PipelineReport {
    GrowthFit growth;
    OrderingCheck ordering;
    /// observed ln K regressed on fitted ln K
    OlsFit capital_observed_vs_estimated;
    BiHamiltonianSolution solution;
    Elasticities elasticities;
    H3Stats h3;
    CobbDouglasModel model;
    ConstrainedFit crosscheck;
    /// b1 + b3 - b2; nonzero means no single quadratic Hamiltonian exists
    double single_hamiltonian_defect = 0.0;
    ResidualReport model_residuals;
    ResidualReport crosscheck_residuals;
    std::vector<std::string> warnings;
};

/// dataset -> growth -> hamiltonian -> production.
PipelineReport run_pipeline(const SeriesTable& table, TimeOrigin origin = TimeOrigin::Zero);

nlohmann::ordered_json to_json(const PipelineReport& report);
std::string format_json(const PipelineReport& report);
std::string format_text(const PipelineReport& report);

/// Writes the figure data files (and SVG renderings when `svg` is set) into
/// `out_dir`, creating it if needed. Returns the paths written.
std::vector<std::filesystem::path> export_figures(const PipelineReport& report, const SeriesTable& table,
                                                  const std::filesystem::path& out_dir, bool svg = true);

/// Shortest round-trip decimal form of a double.
std::string format_number(double value);

} // namespace cobbdouglas
