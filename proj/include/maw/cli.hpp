#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "maw/fasta.hpp"
#include "maw/maw_core.hpp"
#include "maw/oracle.hpp"

namespace maw {

struct CliConfig {
    std::string input;
    std::string output;
    std::int64_t min_len = 2;
    std::int64_t max_len = kNoMaxLength;  // unbounded; no word can exceed n+1 anyway
    StrandMode strand = StrandMode::forward;
    ReportFormat format = ReportFormat::words;
    bool verify = false;
    std::int64_t max_verify_n = 300;
};

// Exit codes: 0 success, 1 bad configuration, 2 I/O or format error,
// 3 verify mismatch. Diagnostics go to stderr only.
inline int run(const CliConfig& cfg) {
    if (cfg.min_len < 2 || cfg.min_len > cfg.max_len) {
        std::cerr << "maw: invalid length range: require 2 <= min-len <= max-len\n";
        return 1;
    }
    if (cfg.input.empty() || cfg.output.empty()) {
        std::cerr << "maw: --input and --output are required\n";
        return 1;
    }

    std::vector<FastaRecord> records;
    try {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) {
            std::cerr << "maw: cannot open input file '" << cfg.input << "'\n";
            return 2;
        }
        records = read_fasta(in);
    } catch (const std::exception& e) {
        std::cerr << "maw: " << cfg.input << ": " << e.what() << '\n';
        return 2;
    }

    const std::int64_t verify_cap =
        std::min<std::int64_t>(cfg.max_verify_n, static_cast<std::int64_t>(oracle::kMaxOracleLength));

    std::vector<ReportEntry> entries;
    for (FastaRecord& rec : records) {
        std::vector<ReportEntry> strands;
        strands.push_back(ReportEntry{rec.header, "", std::move(rec.sequence), {}});
        if (cfg.strand == StrandMode::both)
            strands.push_back(ReportEntry{rec.header, "|rc", reverse_complement(strands[0].sequence), {}});

        for (ReportEntry& entry : strands) {
            try {
                entry.report = compute_maws(entry.sequence, cfg.min_len, cfg.max_len);
            } catch (const std::exception& e) {
                std::cerr << "maw: record '" << entry.header << "': " << e.what() << '\n';
                return 2;
            }
            if (cfg.verify && static_cast<std::int64_t>(entry.sequence.size()) <= verify_cap) {
                const auto expected = oracle::naive_maws(entry.sequence, cfg.min_len, cfg.max_len);
                if (report_words(entry.report, entry.sequence) != expected) {
                    std::cerr << "maw: verification mismatch for record '" << entry.header << "'"
                              << (entry.strand_label.empty() ? "" : " (reverse complement)") << '\n';
                    return 3;
                }
            }
            entries.push_back(std::move(entry));
        }
    }

    try {
        if (cfg.output == "-") {
            write_report(entries, cfg.format, std::cout);
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out) {
                std::cerr << "maw: cannot open output file '" << cfg.output << "'\n";
                return 2;
            }
            write_report(entries, cfg.format, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "maw: " << cfg.output << ": " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace maw
