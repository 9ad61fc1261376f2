// Command-line front end: computes all minimal absent words of each FASTA
// record, and hosts the `bench` subcommand for scaling/memory runs.

#define MAW_MEMTRACK_IMPL
#include "maw/memory_tracker.hpp"

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maw/bench.hpp"
#include "maw/cli.hpp"

namespace {

int run_bench(const std::vector<std::int64_t>& sizes, int trials, std::uint64_t seed) {
    maw::bench::ScalingOutcome outcome;
    try {
        outcome = maw::bench::scaling_run(sizes, trials, seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "maw bench: %s\n", e.what());
        return 1;
    }

    std::printf("# rng=%s trials=%d\n", std::string(maw::bench::kRngId).c_str(), trials);
    std::printf("%12s %10s %12s %12s %8s\n", "n", "seconds", "bytes/char", "maws", "ratio");
    for (std::size_t k = 0; k < outcome.results.size(); ++k) {
        const auto& r = outcome.results[k];
        std::string mem = "-";
        if (r.peak_scratch_bytes >= 0) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.2f",
                          static_cast<double>(r.peak_scratch_bytes) / static_cast<double>(r.n));
            mem = buf;
        }
        std::string ratio = "-";
        if (k > 0) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3f", outcome.ratios[k - 1]);
            ratio = buf;
        }
        std::printf("%12lld %10.3f %12s %12lld %8s\n", static_cast<long long>(r.n), r.seconds,
                    mem.c_str(), static_cast<long long>(r.maw_count), ratio.c_str());
    }
    std::printf("linearity: %s (every doubling ratio <= %.1f)\n", outcome.pass ? "PASS" : "FAIL",
                maw::bench::kMaxDoublingRatio);
    return outcome.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal absent words via suffix arrays"};
    app.require_subcommand(0, 1);

    maw::CliConfig cfg;
    std::string format = "words";
    bool both_strands = false;
    app.add_option("--input", cfg.input, "Input (Multi)FASTA file");
    app.add_option("--output", cfg.output, "Output file ('-' for stdout)");
    app.add_option("--min-len", cfg.min_len, "Minimum word length (default 2)");
    app.add_option("--max-len", cfg.max_len, "Maximum word length (default unbounded)");
    app.add_flag("--both-strands", both_strands, "Also process the reverse complement");
    app.add_option("--format", format, "Output format: words | tuples")
        ->check(CLI::IsMember({"words", "tuples"}));
    app.add_flag("--verify", cfg.verify, "Cross-check small sequences against the brute-force oracle");
    app.add_option("--max-verify-n", cfg.max_verify_n, "Largest n the oracle cross-check runs on");

    CLI::App* bench = app.add_subcommand("bench", "Linear-scaling benchmark on random DNA");
    std::vector<std::int64_t> sizes = {1000000, 2000000, 4000000, 8000000};
    int trials = 3;
    std::uint64_t seed = 0x5eed;
    bench->add_option("--sizes", sizes, "Input sizes, ascending")->delimiter(',');
    bench->add_option("--trials", trials, "Timed runs per size; best is reported");
    bench->add_option("--seed", seed, "RNG seed for the generated DNA");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (bench->parsed()) return run_bench(sizes, trials, seed);

    cfg.strand = both_strands ? maw::StrandMode::both : maw::StrandMode::forward;
    cfg.format = format == "tuples" ? maw::ReportFormat::tuples : maw::ReportFormat::words;
    return maw::run(cfg);
}
