#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maw/maw_core.hpp"

namespace maw {

struct FastaRecord {
    std::string header;    // text after '>' up to end of line, verbatim
    std::string sequence;  // concatenated sequence lines, uppercased
};

enum class StrandMode { forward, both };
enum class ReportFormat { words, tuples };

class FastaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (Multi)FASTA reader. Blank lines are ignored, CRLF is tolerated, spaces and
// tabs inside sequence lines are stripped, and lowercase is folded to
// uppercase.
inline std::vector<FastaRecord> read_fasta(std::istream& in) {
    std::vector<FastaRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool in_record = false;

    auto finish = [&]() {
        if (in_record && records.back().sequence.empty())
            throw FastaError("record '" + records.back().header + "' has an empty sequence");
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const bool blank = std::all_of(line.begin(), line.end(),
                                       [](unsigned char c) { return std::isspace(c); });
        if (blank) continue;
        if (line[0] == '>') {
            finish();
            records.push_back(FastaRecord{line.substr(1), {}});
            in_record = true;
            continue;
        }
        if (!in_record)
            throw FastaError("line " + std::to_string(line_no) + ": expected '>' header");
        for (const char c : line) {
            const auto uc = static_cast<unsigned char>(c);
            if (uc == ' ' || uc == '\t' || uc == '\r') continue;
            records.back().sequence.push_back(static_cast<char>(std::toupper(uc)));
        }
    }
    if (in.bad()) throw std::runtime_error("I/O error while reading FASTA stream");
    finish();
    return records;
}

// Reverses the sequence and swaps A<->T, C<->G; any other byte keeps its
// value and only changes position.
inline std::string reverse_complement(std::string_view sequence) {
    std::string out(sequence.rbegin(), sequence.rend());
    for (char& c : out) {
        switch (c) {
            case 'A': c = 'T'; break;
            case 'T': c = 'A'; break;
            case 'C': c = 'G'; break;
            case 'G': c = 'C'; break;
            default: break;
        }
    }
    return out;
}

// One report section: a record/strand pair plus the sequence its tuple
// positions index into.
struct ReportEntry {
    std::string header;
    std::string strand_label;  // "" for the forward strand, "|rc" for the reverse
    std::string sequence;
    MawReport report;
};

// Words mode: one decoded word per line, sorted ascending by byte value.
// Tuples mode: "letter TAB start TAB end" rows in the same word order.
inline void write_report(const std::vector<ReportEntry>& entries, ReportFormat format,
                         std::ostream& out) {
    for (const ReportEntry& e : entries) {
        out << '>' << e.header;
        if (!e.strand_label.empty()) out << ' ' << e.strand_label;
        out << '\n';

        const std::string_view seq = e.sequence;
        const auto& tuples = e.report.tuples;
        std::vector<std::uint32_t> order(tuples.size());
        std::iota(order.begin(), order.end(), 0u);
        auto factor = [&](const MawTuple& t) {
            return seq.substr(static_cast<std::size_t>(t.start),
                              static_cast<std::size_t>(t.end - t.start) + 1);
        };
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            const MawTuple& ta = tuples[a];
            const MawTuple& tb = tuples[b];
            const std::uint8_t ca = e.report.alphabet.letter(ta.letter);
            const std::uint8_t cb = e.report.alphabet.letter(tb.letter);
            if (ca != cb) return ca < cb;
            return factor(ta) < factor(tb);
        });

        for (const std::uint32_t idx : order) {
            const MawTuple& t = tuples[idx];
            if (format == ReportFormat::words) {
                out << static_cast<char>(e.report.alphabet.letter(t.letter)) << factor(t) << '\n';
            } else {
                out << static_cast<char>(e.report.alphabet.letter(t.letter)) << '\t' << t.start
                    << '\t' << t.end << '\n';
            }
        }
    }
    out.flush();
    if (!out) throw std::runtime_error("I/O error while writing report");
}

}  // namespace maw
