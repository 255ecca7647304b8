#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "emn/bench.hpp"
#include "emn/generators.hpp"
#include "emn/stats.hpp"

namespace emn {

inline constexpr const char* kReportSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisParams {
    std::size_t sample_bytes = 100000;
    std::size_t max_lag = 100;    // ACF
    std::size_t heatmap_k = 10;   // lag-correlation matrix order
    std::size_t n_fft = 4096;
};

// All metrics for one generator, computed from a single byte sample.
struct EvaluationReport {
    std::string generator;
    std::string seed;  // 64 hex chars or "os-entropy"
    std::size_t sample_bytes = 0;
    ChiSquaredResult chi;
    EntropyResult entropy;
    PredictabilityResult predictability;
    RunsResult runs;
    TimingResult timing;
    Pmf pmf;
    AcfSeries acf;
    SpectralSeries psd;
    LagCorrMatrix heatmap;
    std::string tool_version = kToolVersion;
    std::string created_at;  // ISO 8601 UTC; excluded from the canonical form
};

// Runs every metric once on the sample. Errors from a metric are
// rethrown annotated with the metric's name.
EvaluationReport build_report(const ByteSample& sample, const TimingResult& timing,
                              const AnalysisParams& params);

// Full JSON form. With canonical=true the created_at and timing fields
// are omitted, making the output a deterministic function of the sample.
nlohmann::json report_to_json(const EvaluationReport& report, bool canonical = false);
EvaluationReport report_from_json(const nlohmann::json& j);

enum class OutputFormat { json, csv, md };
OutputFormat parse_output_format(const std::string& name);  // throws invalid_argument

// Writes <gen>.report.json, the four plot-data CSVs, and/or
// <gen>.report.md under out_dir; returns the paths written.
std::vector<std::filesystem::path> write_outputs(const EvaluationReport& report,
                                                 const std::filesystem::path& out_dir,
                                                 const std::set<OutputFormat>& formats);

// Markdown comparison table: one column per report, the six metric rows
// of the evaluation summary.
std::string render_comparison_markdown(const std::vector<EvaluationReport>& reports);

std::filesystem::path write_comparison_markdown(
    const std::vector<EvaluationReport>& reports,
    const std::filesystem::path& out_dir);

// One-screen plain-text summary for the CLI.
std::string render_summary(const EvaluationReport& report);

}  // namespace emn
