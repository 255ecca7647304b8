// emnlab: entropy-mixing generator and randomness evaluation CLI.
//
// Subcommands:
//   gen       write raw random bytes from a generator
//   eval      run the full metric suite on one generator
//   compare   evaluate all three generators and emit a comparison table
//   selftest  run the embedded reference vectors
//
// Exit codes: 0 success, 2 usage error, 3 entropy unavailable,
// 4 metric failure, 5 selftest failure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emn/bench.hpp"
#include "emn/errors.hpp"
#include "emn/fft.hpp"
#include "emn/gamma.hpp"
#include "emn/generators.hpp"
#include "emn/mt19937.hpp"
#include "emn/report.hpp"
#include "emn/sha256.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitEntropy = 3;
constexpr int kExitMetric = 4;
constexpr int kExitSelftest = 5;

struct CliConfig {
    std::string generator = "emn";
    std::optional<std::string> seed_hex;
    std::size_t bytes = 100000;
    std::uint64_t injection_frequency = 1;
    bool persist_mixed_state = false;
    std::string out_file;  // gen only; empty = stdout
    std::string out_dir = "emnlab-out";
    std::vector<std::string> formats = {"json", "csv"};
    std::size_t max_lag = 100;
    std::size_t heatmap_k = 10;
    std::size_t n_fft = 4096;
    std::uint64_t bench_n = 100000;
    std::uint64_t bench_warmup = 1000;
    unsigned reps = 1;
};

struct NamedSource {
    std::unique_ptr<emn::RandomSource> source;
    std::string seed_label;
};

emn::Block256 resolve_seed(const std::optional<std::string>& seed_hex) {
    if (seed_hex) return emn::Block256::from_hex(*seed_hex);
    const auto bytes = emn::os_entropy(32);
    return emn::Block256::from_bytes(std::span<const std::uint8_t, 32>(bytes.data(), 32));
}

NamedSource make_source(const std::string& generator, const CliConfig& cfg) {
    if (generator == "osrandom") {
        if (cfg.seed_hex)
            std::cerr << "warning: osrandom ignores --seed (not seedable)\n";
        return {std::make_unique<emn::OsEntropySource>(), "os-entropy"};
    }
    const emn::Block256 seed = resolve_seed(cfg.seed_hex);
    if (generator == "mt")
        return {std::make_unique<emn::MtSource>(seed), seed.to_hex()};
    if (generator == "emn")
        return {std::make_unique<emn::EmnGenerator>(
                    std::make_unique<emn::MtSource>(seed), cfg.injection_frequency,
                    emn::os_entropy_fn(), cfg.persist_mixed_state),
                seed.to_hex()};
    throw CLI::ValidationError("unknown generator: " + generator);
}

std::set<emn::OutputFormat> parse_formats(const std::vector<std::string>& names) {
    std::set<emn::OutputFormat> formats;
    for (const auto& name : names) formats.insert(emn::parse_output_format(name));
    return formats;
}

int cmd_gen(const CliConfig& cfg) {
    auto [source, seed_label] = make_source(cfg.generator, cfg);
    const emn::ByteSample sample = emn::source_bytes(*source, cfg.bytes, seed_label);
    if (cfg.out_file.empty()) {
        std::cout.write(reinterpret_cast<const char*>(sample.bytes.data()),
                        static_cast<std::streamsize>(sample.bytes.size()));
        std::cout.flush();
    } else {
        std::ofstream out(cfg.out_file, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << cfg.out_file << '\n';
            return 1;
        }
        out.write(reinterpret_cast<const char*>(sample.bytes.data()),
                  static_cast<std::streamsize>(sample.bytes.size()));
    }
    return 0;
}

emn::EvaluationReport evaluate_one(const std::string& generator, const CliConfig& cfg) {
    auto [source, seed_label] = make_source(generator, cfg);
    const emn::ByteSample sample = emn::source_bytes(*source, cfg.bytes, seed_label);

    // Timing runs on a fresh instance so the timed stream starts cold.
    auto timed = make_source(generator, cfg);
    const emn::TimingResult timing = emn::time_generation_median(
        *timed.source, cfg.bench_n, cfg.bench_warmup, cfg.reps);

    emn::AnalysisParams params;
    params.sample_bytes = cfg.bytes;
    params.max_lag = cfg.max_lag;
    params.heatmap_k = cfg.heatmap_k;
    params.n_fft = cfg.n_fft;
    return emn::build_report(sample, timing, params);
}

int cmd_eval(const CliConfig& cfg) {
    const auto report = evaluate_one(cfg.generator, cfg);
    const auto written = emn::write_outputs(report, cfg.out_dir, parse_formats(cfg.formats));
    std::cout << emn::render_summary(report);
    for (const auto& path : written) std::cout << "wrote " << path.string() << '\n';
    return 0;
}

int cmd_compare(const CliConfig& cfg) {
    std::vector<emn::EvaluationReport> reports;
    for (const std::string generator : {"emn", "osrandom", "mt"})
        reports.push_back(evaluate_one(generator, cfg));

    const auto formats = parse_formats(cfg.formats);
    for (const auto& report : reports) emn::write_outputs(report, cfg.out_dir, formats);
    const auto table = emn::write_comparison_markdown(reports, cfg.out_dir);

    std::cout << emn::render_comparison_markdown(reports);
    std::cout << "wrote " << table.string() << '\n';
    return 0;
}

// ---- selftest vectors ------------------------------------------------

struct SelftestState {
    int failures = 0;
    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
        if (!ok) ++failures;
    }
};

void selftest_sha256(SelftestState& st) {
    const auto hex = [](std::string_view s) {
        return emn::sha256(std::span<const std::uint8_t>(
                               reinterpret_cast<const std::uint8_t*>(s.data()), s.size()))
            .to_hex();
    };
    st.check(hex("") ==
                 "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855",
             "sha256 empty message");
    st.check(hex("abc") ==
                 "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad",
             "sha256 'abc'");
    const std::string million(1000000, 'a');
    st.check(hex(million) ==
                 "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0",
             "sha256 one million 'a'");
}

void selftest_mt19937(SelftestState& st) {
    emn::Mt19937 mt(5489u);
    st.check(mt.next_u32() == 3499211612u && mt.next_u32() == 581869302u &&
                 mt.next_u32() == 3890346734u,
             "mt19937 scalar seed 5489, outputs 1..3");
    for (int i = 3; i < 624; ++i) mt.next_u32();
    st.check(mt.next_u32() == 4178893912u, "mt19937 scalar seed 5489, output 625");

    const std::uint32_t key[] = {0x123, 0x234, 0x345, 0x456};
    emn::Mt19937 mt_array{std::span<const std::uint32_t>(key)};
    static constexpr std::uint32_t expected[10] = {
        1067595299u, 955945823u,  477289528u, 4107218783u, 4228976476u,
        3344332714u, 3355579695u, 227628506u, 810200273u,  2591290167u};
    bool ok = true;
    for (std::uint32_t want : expected) ok = ok && (mt_array.next_u32() == want);
    st.check(ok, "mt19937 init_by_array vector, outputs 1..10");
}

void selftest_gamma(SelftestState& st) {
    st.check(emn::gamma_q(3.0, 0.0) == 1.0, "gamma_q(a, 0) == 1");
    st.check(std::fabs(emn::gamma_q(0.5, 0.5) - 0.3173105078629141) < 1e-12,
             "gamma_q(0.5, 0.5)");
    const struct { double stat, p; } anchors[] = {
        {220.3392, 0.9430}, {244.6080, 0.6689}, {253.1072, 0.5217}};
    for (const auto& a : anchors) {
        const double p = emn::chi_squared_sf(a.stat, 255);
        st.check(std::fabs(p - a.p) < 5e-4,
                 "chi-squared p-value anchor " + std::to_string(a.p));
    }
}

void selftest_fft(SelftestState& st) {
    constexpr std::size_t n = 256;
    emn::Mt19937 mt(12345u);
    std::vector<std::complex<double>> input(n);
    for (auto& v : input) v = static_cast<double>(mt.next_u32() & 0xff);

    auto fast = input;
    emn::fft_radix2(fast);

    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> direct(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double angle =
                -2.0 * std::numbers::pi * static_cast<double>(k * i) / n;
            direct += input[i] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        worst = std::max(worst, std::abs(fast[k] - direct) / std::max(1.0, std::abs(direct)));
    }
    st.check(worst < 1e-9, "fft matches direct dft");
}

int cmd_selftest() {
    SelftestState st;
    selftest_sha256(st);
    selftest_mt19937(st);
    selftest_gamma(st);
    selftest_fft(st);
    if (st.failures > 0) {
        std::cout << st.failures << " selftest vector(s) failed\n";
        return kExitSelftest;
    }
    std::cout << "all selftest vectors passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy-mixing random number generator and evaluation framework"};
    app.require_subcommand(1);

    CliConfig cfg;

    const auto add_generator_flags = [&](CLI::App* sub) {
        sub->add_option("--generator", cfg.generator, "Generator: emn, mt, osrandom")
            ->check(CLI::IsMember({"emn", "mt", "osrandom"}))
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed_hex,
                        "256-bit seed as exactly 64 hex characters (default: OS entropy)");
        sub->add_option("-f,--injection-frequency", cfg.injection_frequency,
                        "EMN entropy injection frequency (cycles per injection)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_flag("--persist-mixed-state", cfg.persist_mixed_state,
                      "Keep the hash-mixed state across cycles between injections");
    };
    const auto add_analysis_flags = [&](CLI::App* sub) {
        sub->add_option("--bytes", cfg.bytes, "Sample size in bytes")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--out-dir", cfg.out_dir, "Report output directory")
            ->envname("EMN_OUT_DIR")
            ->capture_default_str();
        sub->add_option("--formats", cfg.formats, "Output formats: json, csv, md")
            ->capture_default_str();
        sub->add_option("--max-lag", cfg.max_lag, "Maximum autocorrelation lag")
            ->capture_default_str();
        sub->add_option("--heatmap-k", cfg.heatmap_k, "Lag-correlation matrix order")
            ->capture_default_str();
        sub->add_option("--n-fft", cfg.n_fft, "Periodogram length (power of two)")
            ->capture_default_str();
        sub->add_option("--bench-n", cfg.bench_n, "Timed block generations")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--bench-warmup", cfg.bench_warmup, "Untimed warmup generations")
            ->capture_default_str();
        sub->add_option("--reps", cfg.reps, "Timing repetitions (median reported)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "Write raw random bytes");
    add_generator_flags(gen);
    gen->add_option("--bytes", cfg.bytes, "Number of bytes to emit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--out", cfg.out_file, "Output file (default: stdout)");

    auto* eval = app.add_subcommand("eval", "Evaluate one generator");
    add_generator_flags(eval);
    add_analysis_flags(eval);

    auto* compare =
        app.add_subcommand("compare", "Evaluate emn, osrandom, and mt side by side");
    add_generator_flags(compare);
    add_analysis_flags(compare);

    app.add_subcommand("selftest", "Run the embedded reference vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cfg.seed_hex && cfg.seed_hex->size() != 64) {
            std::cerr << "error: --seed must be exactly 64 hex characters\n";
            return kExitUsage;
        }
        if (gen->parsed()) return cmd_gen(cfg);
        if (eval->parsed()) return cmd_eval(cfg);
        if (compare->parsed()) return cmd_compare(cfg);
        return cmd_selftest();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const emn::EntropyUnavailable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEntropy;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMetric;
    }
}
