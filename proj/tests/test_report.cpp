#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emn/report.hpp"

namespace {

constexpr const char* kSeed =
    "00000000000000000000000000000000000000000000000000000000000000ff";

emn::ByteSample fixed_sample(std::size_t n = 20000) {
    emn::MtSource src(emn::Block256::from_hex(kSeed));
    return emn::source_bytes(src, n, kSeed);
}

emn::TimingResult fake_timing() {
    emn::TimingResult timing;
    timing.generator = "mt";
    timing.n_values = 10;
    timing.wall_seconds = 0.5;
    timing.values_per_second = 20.0;
    return timing;
}

emn::AnalysisParams small_params() {
    emn::AnalysisParams params;
    params.max_lag = 20;
    params.heatmap_k = 5;
    params.n_fft = 1024;
    return params;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("emnlab-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("build_report populates every metric from one sample") {
    const auto report = emn::build_report(fixed_sample(), fake_timing(), small_params());
    CHECK(report.generator == "mt");
    CHECK(report.seed == kSeed);
    CHECK(report.sample_bytes == 20000);
    CHECK(report.chi.statistic > 0.0);
    CHECK(report.entropy.bits > 7.0);
    CHECK(report.acf.correlation.size() == 21);
    CHECK(report.psd.power.size() == 513);
    CHECK(report.heatmap.size == 6);
    CHECK(!report.created_at.empty());
}

TEST_CASE("metric failures are annotated with the metric name") {
    emn::ByteSample degenerate;
    degenerate.generator = "fixture";
    degenerate.seed = "os-entropy";
    degenerate.bytes.assign(20000, 0x00);
    try {
        emn::build_report(degenerate, fake_timing(), small_params());
        FAIL("expected a metric failure");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("predictability") != std::string::npos);
    }
}

TEST_CASE("report built from an exact-uniform sample") {
    emn::ByteSample uniform;
    uniform.generator = "fixture";
    uniform.seed = "os-entropy";
    for (int r = 0; r < 40; ++r)
        for (int b = 0; b < 256; ++b)
            uniform.bytes.push_back(static_cast<std::uint8_t>(b));
    const auto report = emn::build_report(uniform, fake_timing(), small_params());
    CHECK(report.chi.statistic == 0.0);
    CHECK(report.entropy.bits == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("canonical JSON is deterministic and excludes volatile fields") {
    const auto a = emn::build_report(fixed_sample(), fake_timing(), small_params());
    const auto b = emn::build_report(fixed_sample(), fake_timing(), small_params());
    const auto ja = emn::report_to_json(a, true);
    CHECK(ja.dump() == emn::report_to_json(b, true).dump());
    CHECK(!ja.contains("created_at"));
    CHECK(!ja.contains("timing"));
    CHECK(emn::report_to_json(a).contains("created_at"));
}

TEST_CASE("JSON round trip preserves the canonical form") {
    const auto report = emn::build_report(fixed_sample(), fake_timing(), small_params());
    const auto parsed = emn::report_from_json(emn::report_to_json(report));
    CHECK(emn::report_to_json(parsed, true).dump() == emn::report_to_json(report, true).dump());
    CHECK(parsed.timing.wall_seconds == report.timing.wall_seconds);
    CHECK(parsed.created_at == report.created_at);
}

TEST_CASE("write_outputs file schemas") {
    const auto report = emn::build_report(fixed_sample(), fake_timing(), small_params());
    TempDir dir;

    SUBCASE("json only writes exactly one file") {
        const auto written = emn::write_outputs(report, dir.path, {emn::OutputFormat::json});
        REQUIRE(written.size() == 1);
        CHECK(written[0].filename() == "mt.report.json");
        const auto parsed = nlohmann::json::parse(slurp(written[0]));
        CHECK(parsed.at("generator") == "mt");
    }

    SUBCASE("csv schemas") {
        const auto written = emn::write_outputs(report, dir.path, {emn::OutputFormat::csv});
        REQUIRE(written.size() == 4);

        const auto pmf_lines = slurp(dir.path / "mt.pmf.csv");
        CHECK(pmf_lines.rfind("byte,probability\n", 0) == 0);
        CHECK(std::count(pmf_lines.begin(), pmf_lines.end(), '\n') == 257);

        const auto heatmap = slurp(dir.path / "mt.heatmap.csv");
        CHECK(heatmap.rfind("lag,0,1,2,3,4,5\n", 0) == 0);
        CHECK(std::count(heatmap.begin(), heatmap.end(), '\n') == 7);

        CHECK(slurp(dir.path / "mt.acf.csv").rfind("lag,correlation\n", 0) == 0);
        CHECK(slurp(dir.path / "mt.psd.csv").rfind("frequency,power\n", 0) == 0);
    }

    SUBCASE("csv values re-parse close to the in-memory doubles") {
        emn::write_outputs(report, dir.path, {emn::OutputFormat::csv});
        std::ifstream in(dir.path / "mt.acf.csv");
        std::string line;
        std::getline(in, line);  // header
        std::size_t lag = 0;
        while (std::getline(in, line)) {
            const auto comma = line.find(',');
            const double value = std::stod(line.substr(comma + 1));
            // 10 significant digits of precision
            CHECK(std::fabs(value - report.acf.correlation[lag]) <=
                  1e-9 * std::max(1.0, std::fabs(report.acf.correlation[lag])));
            ++lag;
        }
        CHECK(lag == report.acf.correlation.size());
    }

    SUBCASE("unknown format name is rejected") {
        CHECK_THROWS_AS(emn::parse_output_format("xml"), std::invalid_argument);
    }
}

TEST_CASE("comparison markdown has the six metric rows and one column per generator") {
    const auto report = emn::build_report(fixed_sample(), fake_timing(), small_params());
    auto emn_report = report;
    emn_report.generator = "emn";
    auto os_report = report;
    os_report.generator = "osrandom";

    const auto table = emn::render_comparison_markdown({emn_report, os_report, report});
    CHECK(table.find("| EMN |") != std::string::npos);
    CHECK(table.find(" SystemRandom |") != std::string::npos);
    CHECK(table.find(" MersenneTwister |") != std::string::npos);
    for (const char* row : {"Chi-Squared Statistic", "Chi-Squared p-value", "Entropy",
                            "Predictability", "High-Frequency Time (seconds)",
                            "Runs Test (Observed/Expected)"})
        CHECK(table.find(row) != std::string::npos);
    // header + separator + exactly six metric rows
    CHECK(std::count(table.begin(), table.end(), '\n') == 8);
}
