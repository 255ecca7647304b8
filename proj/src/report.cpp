#include "emn/report.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace emn {

namespace {

using nlohmann::json;

std::string utc_now_iso8601() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

// 10 significant digits, the CSV serialization width.
std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

template <typename Fn>
auto run_metric(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("metric '") + name + "' failed: " + e.what());
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::string display_name(const std::string& generator) {
    if (generator == "emn") return "EMN";
    if (generator == "osrandom") return "SystemRandom";
    if (generator == "mt") return "MersenneTwister";
    return generator;
}

// The six metric rows of the comparison table, rendered per report.
struct MetricRow {
    const char* label;
    std::string (*value)(const EvaluationReport&);
};

const MetricRow kMetricRows[] = {
    {"Chi-Squared Statistic",
     [](const EvaluationReport& r) { return format_double(r.chi.statistic); }},
    {"Chi-Squared p-value",
     [](const EvaluationReport& r) { return format_double(r.chi.p_value); }},
    {"Entropy", [](const EvaluationReport& r) { return format_double(r.entropy.bits); }},
    {"Predictability",
     [](const EvaluationReport& r) { return format_double(r.predictability.r); }},
    {"High-Frequency Time (seconds)",
     [](const EvaluationReport& r) { return format_double(r.timing.wall_seconds); }},
    {"Runs Test (Observed/Expected)",
     [](const EvaluationReport& r) {
         return std::to_string(r.runs.observed) + " / " + format_double(r.runs.expected) +
                " (z=" + format_double(r.runs.z_score) + ")";
     }},
};

}  // namespace

EvaluationReport build_report(const ByteSample& sample, const TimingResult& timing,
                              const AnalysisParams& params) {
    EvaluationReport report;
    report.generator = sample.generator;
    report.seed = sample.seed;
    report.sample_bytes = sample.bytes.size();
    report.timing = timing;
    report.created_at = utc_now_iso8601();

    const std::span<const std::uint8_t> bytes(sample.bytes);
    report.chi = run_metric("chi_squared", [&] { return chi_squared_test(bytes); });
    report.entropy = run_metric("entropy", [&] { return shannon_entropy(bytes); });
    report.predictability =
        run_metric("predictability", [&] { return predictability(bytes); });
    report.runs = run_metric("runs_test", [&] { return runs_test(bytes); });
    report.pmf = run_metric("pmf", [&] { return pmf(bytes); });
    report.acf =
        run_metric("autocorrelation", [&] { return autocorrelation(bytes, params.max_lag); });
    report.psd =
        run_metric("power_spectrum", [&] { return power_spectrum(bytes, params.n_fft); });
    report.heatmap = run_metric("lag_correlation_matrix",
                                [&] { return lag_correlation_matrix(bytes, params.heatmap_k); });
    return report;
}

json report_to_json(const EvaluationReport& r, bool canonical) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = r.tool_version;
    j["generator"] = r.generator;
    j["seed"] = r.seed;
    j["sample_bytes"] = r.sample_bytes;
    j["chi_squared"] = {{"statistic", r.chi.statistic},
                        {"p_value", r.chi.p_value},
                        {"dof", r.chi.dof},
                        {"bins", r.chi.bins}};
    j["entropy"] = {{"bits", r.entropy.bits}};
    j["predictability"] = {{"r", r.predictability.r}};
    j["runs"] = {{"observed", r.runs.observed},
                 {"expected", r.runs.expected},
                 {"n0", r.runs.n0},
                 {"n1", r.runs.n1},
                 {"z_score", r.runs.z_score}};
    j["plots"] = {
        {"pmf", r.pmf.probability},
        {"acf", r.acf.correlation},
        {"psd", {{"frequencies", r.psd.frequencies}, {"power", r.psd.power}}},
        {"heatmap", {{"size", r.heatmap.size}, {"values", r.heatmap.values}}}};
    if (!canonical) {
        j["timing"] = {{"generator", r.timing.generator},
                       {"n_values", r.timing.n_values},
                       {"wall_seconds", r.timing.wall_seconds},
                       {"values_per_second", r.timing.values_per_second},
                       {"fold", r.timing.fold.to_hex()}};
        j["created_at"] = r.created_at;
    }
    return j;
}

EvaluationReport report_from_json(const json& j) {
    EvaluationReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.generator = j.at("generator").get<std::string>();
    r.seed = j.at("seed").get<std::string>();
    r.sample_bytes = j.at("sample_bytes").get<std::size_t>();

    const auto& chi = j.at("chi_squared");
    r.chi.statistic = chi.at("statistic").get<double>();
    r.chi.p_value = chi.at("p_value").get<double>();
    r.chi.dof = chi.at("dof").get<unsigned>();
    chi.at("bins").get_to(r.chi.bins);

    r.entropy.bits = j.at("entropy").at("bits").get<double>();
    r.predictability.r = j.at("predictability").at("r").get<double>();

    const auto& runs = j.at("runs");
    r.runs.observed = runs.at("observed").get<std::uint64_t>();
    r.runs.expected = runs.at("expected").get<double>();
    r.runs.n0 = runs.at("n0").get<std::uint64_t>();
    r.runs.n1 = runs.at("n1").get<std::uint64_t>();
    r.runs.z_score = runs.at("z_score").get<double>();

    const auto& plots = j.at("plots");
    plots.at("pmf").get_to(r.pmf.probability);
    plots.at("acf").get_to(r.acf.correlation);
    plots.at("psd").at("frequencies").get_to(r.psd.frequencies);
    plots.at("psd").at("power").get_to(r.psd.power);
    r.heatmap.size = plots.at("heatmap").at("size").get<std::size_t>();
    plots.at("heatmap").at("values").get_to(r.heatmap.values);

    if (j.contains("timing")) {
        const auto& t = j.at("timing");
        r.timing.generator = t.at("generator").get<std::string>();
        r.timing.n_values = t.at("n_values").get<std::uint64_t>();
        r.timing.wall_seconds = t.at("wall_seconds").get<double>();
        r.timing.values_per_second = t.at("values_per_second").get<double>();
        r.timing.fold = Block256::from_hex(t.at("fold").get<std::string>());
    }
    if (j.contains("created_at")) r.created_at = j.at("created_at").get<std::string>();
    return r;
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "md") return OutputFormat::md;
    throw std::invalid_argument("unknown output format: " + name);
}

std::vector<std::filesystem::path> write_outputs(const EvaluationReport& report,
                                                 const std::filesystem::path& out_dir,
                                                 const std::set<OutputFormat>& formats) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;
    const std::string& gen = report.generator;

    if (formats.contains(OutputFormat::json)) {
        const auto path = out_dir / (gen + ".report.json");
        open_output(path) << report_to_json(report).dump(2) << '\n';
        written.push_back(path);
    }

    if (formats.contains(OutputFormat::csv)) {
        {
            const auto path = out_dir / (gen + ".pmf.csv");
            auto out = open_output(path);
            out << "byte,probability\n";
            for (std::size_t b = 0; b < 256; ++b)
                out << b << ',' << format_double(report.pmf.probability[b]) << '\n';
            written.push_back(path);
        }
        {
            const auto path = out_dir / (gen + ".acf.csv");
            auto out = open_output(path);
            out << "lag,correlation\n";
            for (std::size_t lag = 0; lag < report.acf.correlation.size(); ++lag)
                out << lag << ',' << format_double(report.acf.correlation[lag]) << '\n';
            written.push_back(path);
        }
        {
            const auto path = out_dir / (gen + ".psd.csv");
            auto out = open_output(path);
            out << "frequency,power\n";
            for (std::size_t k = 0; k < report.psd.power.size(); ++k)
                out << format_double(report.psd.frequencies[k]) << ','
                    << format_double(report.psd.power[k]) << '\n';
            written.push_back(path);
        }
        {
            const auto path = out_dir / (gen + ".heatmap.csv");
            auto out = open_output(path);
            out << "lag";
            for (std::size_t col = 0; col < report.heatmap.size; ++col) out << ',' << col;
            out << '\n';
            for (std::size_t row = 0; row < report.heatmap.size; ++row) {
                out << row;
                for (std::size_t col = 0; col < report.heatmap.size; ++col)
                    out << ',' << format_double(report.heatmap.at(row, col));
                out << '\n';
            }
            written.push_back(path);
        }
    }

    if (formats.contains(OutputFormat::md)) {
        const auto path = out_dir / (gen + ".report.md");
        open_output(path) << render_comparison_markdown({report});
        written.push_back(path);
    }

    return written;
}

std::string render_comparison_markdown(const std::vector<EvaluationReport>& reports) {
    std::ostringstream out;
    out << "| Metric |";
    for (const auto& r : reports) out << ' ' << display_name(r.generator) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < reports.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& row : kMetricRows) {
        out << "| " << row.label << " |";
        for (const auto& r : reports) out << ' ' << row.value(r) << " |";
        out << '\n';
    }
    return out.str();
}

std::filesystem::path write_comparison_markdown(
    const std::vector<EvaluationReport>& reports,
    const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto path = out_dir / "comparison.md";
    open_output(path) << render_comparison_markdown(reports);
    return path;
}

std::string render_summary(const EvaluationReport& r) {
    std::ostringstream out;
    out << "generator: " << r.generator << " (seed " << r.seed << ", "
        << r.sample_bytes << " bytes)\n";
    for (const auto& row : kMetricRows)
        out << "  " << row.label << ": " << row.value(r) << '\n';
    return out.str();
}

}  // namespace emn
