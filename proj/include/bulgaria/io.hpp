#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bulgaria/exact_markov.hpp"
#include "bulgaria/experiments.hpp"
#include "bulgaria/step_function.hpp"

namespace bulgaria::io {

inline constexpr std::string_view kBuildId = "bulgaria 0.1.0";
inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

/// 17 significant digits: parses back to the identical double.
std::string format_double(double x);

/// Pile sizes joined by '+': "4+2+1".
std::string partition_label(const Partition& p);

// --- CSV ----------------------------------------------------------------

std::string deviation_report_csv(const DeviationReport& report);
std::string distribution_csv(const PartitionIndex& index, const DistributionVector& d);
std::string matrix_csv(const PartitionIndex& index, const Matrix& t);
std::string marginals_csv(const std::vector<MarginalStat>& stats);
std::string cycle_csv(const CycleReport& report);
std::string trajectory_csv(const Trajectory& trajectory);
std::string snapshots_csv(const std::vector<ShapeSnapshot>& snapshots);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view text);
std::string emit_csv(const CsvTable& table);

// --- JSON ---------------------------------------------------------------

/// {schema_version, config, results, provenance:{master_seed, build_id}}.
json envelope(json config, json results, std::uint64_t master_seed);

json partition_json(const Partition& p);
json quantiles_json(const Quantiles& q);
json bound_json(const DeviationBound& bound);
json deviation_results_json(const DeviationReport& report);
json stationary_results_json(const StationaryReport& report, std::optional<double> tv_to_exact);
json cycle_results_json(const CycleReport& report);
json marginal_results_json(const std::vector<MarginalStat>& stats);

/// Two-space indent plus trailing newline; key order is insertion order.
std::string dump_json(const json& value);

// --- SVG ----------------------------------------------------------------

/// Self-contained SVG: the step function as horizontal segments joined by
/// verticals, an optional 512-point reference polyline, and labelled
/// axes. Viewport [0, max(support, 6)] x [0, max(1.1, peak)].
std::string svg_plot(const StepFunction& step, const DecreasingReference* reference,
                     std::string_view title);

// --- files --------------------------------------------------------------

void write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace bulgaria::io
