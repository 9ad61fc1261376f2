#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maw/alphabet.hpp"
#include "maw/bit_rows.hpp"
#include "maw/letter_set.hpp"
#include "maw/suffix_index.hpp"

namespace maw {

inline constexpr std::int64_t kNoMaxLength = std::numeric_limits<std::int64_t>::max();

// One minimal absent word as <letter, (start, end)>: the word is the letter
// (an alphabet rank) followed by the factor y[start..end].
struct MawTuple {
    std::uint8_t letter;
    std::int32_t start;
    std::int32_t end;

    bool operator==(const MawTuple&) const = default;
};

struct MawReport {
    std::vector<MawTuple> tuples;
    std::int64_t n = 0;
    Alphabet alphabet;
};

inline std::string decode_word(const MawReport& report, std::string_view sequence, const MawTuple& t) {
    std::string out;
    out.reserve(static_cast<std::size_t>(t.end - t.start) + 2);
    out.push_back(static_cast<char>(report.alphabet.letter(t.letter)));
    out.append(sequence.substr(static_cast<std::size_t>(t.start),
                               static_cast<std::size_t>(t.end - t.start) + 1));
    return out;
}

inline std::set<std::string> report_words(const MawReport& report, std::string_view sequence) {
    std::set<std::string> words;
    for (const MawTuple& t : report.tuples) words.insert(decode_word(report, sequence, t));
    return words;
}

// Row l holds the set of letters encountered before the length-l prefix of
// the suffix currently being visited; sized max(LCP)+2 so that reads at
// LCP[i]+1 stay in bounds.
using IntervalTable = BitRows;

// Stack of LCP values with the non-destructive downward cursor the passes
// need: top() starts a walk, next() steps toward the bottom and stays there
// once reached. Values are strictly increasing bottom to top; push enforces
// this in every build.
class LcpStack {
public:
    void push(std::int32_t v) {
        if (!values_.empty() && v <= values_.back())
            throw std::logic_error("LifoLCP push breaks strict increase");
        values_.push_back(v);
        cursor_ = values_.size() - 1;
    }

    std::int32_t pop() {
        if (values_.empty()) throw std::logic_error("LifoLCP pop on empty stack");
        const std::int32_t v = values_.back();
        values_.pop_back();
        if (cursor_ >= values_.size() && !values_.empty()) cursor_ = values_.size() - 1;
        return v;
    }

    std::int32_t top() {
        if (values_.empty()) throw std::logic_error("LifoLCP top on empty stack");
        cursor_ = values_.size() - 1;
        return values_.back();
    }

    std::int32_t next() {
        if (cursor_ > 0) --cursor_;
        return values_[cursor_];
    }

    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<std::int32_t> values_;
    std::size_t cursor_ = 0;
};

// Before[2i] / Before[2i+1]: letters immediately preceding occurrences of
// the factors S_2i = y[SA[i]..SA[i]+LCP[i]] and S_2i+1 = y[SA[i]..SA[i]+LCP[i+1]].
// BeforeLCP holds the same for the longest proper prefixes of those factors.
struct BeforeArrays {
    BitRows before;
    BitRows before_lcp;
};

// First pass over SA/LCP from top to bottom: rows collect the letters that
// precede occurrences whose starting positions appear at or before rank i.
inline BeforeArrays top_down_pass(const EncodedText& text, const SuffixIndex& sx) {
    const std::size_t n = text.size();
    if (n == 0) throw std::invalid_argument("empty sequence");
    const std::size_t sigma = text.alphabet.sigma();

    BeforeArrays arr{BitRows(2 * n, sigma), BitRows(2 * n, sigma)};
    const std::int32_t max_lcp = *std::max_element(sx.lcp.begin(), sx.lcp.end());
    IntervalTable interval(static_cast<std::size_t>(max_lcp) + 2, sigma);
    LcpStack lifo_lcp;
    lifo_lcp.push(0);
    // Content of the last row popped below. The popped rows are cleared
    // immediately, but the copy into Interval[LCP[i]] and the writes into
    // row 2i-1 need what the smallest popped row held.
    LetterSet popped = LetterSet::empty(sigma);

    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t lcp_i = sx.lcp[i];
        if (i > 0 && lcp_i < sx.lcp[i - 1]) {
            while (lifo_lcp.top() > lcp_i) {
                const std::int32_t proxa = lifo_lcp.pop();
                popped = interval.row(static_cast<std::size_t>(proxa));
                interval.clear_row(static_cast<std::size_t>(proxa));
            }
            if (lifo_lcp.top() < lcp_i) interval.assign_row(static_cast<std::size_t>(lcp_i), popped);
            arr.before.assign_row(2 * i - 1, popped);
            arr.before_lcp.assign_row(2 * i - 1, interval, static_cast<std::size_t>(lcp_i));
        }
        if (sx.sa[i] > 0) {
            const std::uint8_t u = text.data[static_cast<std::size_t>(sx.sa[i]) - 1];
            std::int32_t value = lifo_lcp.top();
            while (!interval.test(static_cast<std::size_t>(value), u)) {
                interval.set(static_cast<std::size_t>(value), u);
                value = lifo_lcp.next();
            }
            interval.set(static_cast<std::size_t>(lcp_i), u);
            arr.before.set(2 * i, u);
            arr.before.set(2 * i + 1, u);
            arr.before_lcp.set(2 * i, u);
            arr.before_lcp.set(2 * i + 1, u);
        }
        if (i > 0 && lcp_i > 0 && sx.sa[i - 1] > 0)
            interval.set(static_cast<std::size_t>(lcp_i), text.data[static_cast<std::size_t>(sx.sa[i - 1]) - 1]);
        arr.before_lcp.assign_row(2 * i, interval, static_cast<std::size_t>(lcp_i));
        if (lifo_lcp.top() != lcp_i) lifo_lcp.push(lcp_i);
    }
    return arr;
}

// Second pass from bottom to top: or-merges the contributions of occurrences
// whose starting positions appear after rank i. Rows popped off LifoLCP are
// parked on LifoRem and stay readable until the end of the iteration, then
// get zeroed.
inline void bottom_up_pass(const EncodedText& text, const SuffixIndex& sx, BeforeArrays& arr) {
    const std::size_t n = text.size();
    if (n == 0) throw std::invalid_argument("empty sequence");
    const std::size_t sigma = text.alphabet.sigma();

    const std::int32_t max_lcp = *std::max_element(sx.lcp.begin(), sx.lcp.end());
    IntervalTable interval(static_cast<std::size_t>(max_lcp) + 2, sigma);
    LcpStack lifo_lcp;
    lifo_lcp.push(0);
    std::vector<std::int32_t> lifo_rem;
    // proxb lags proxa by one iteration: row 2i+1 is completed with the
    // interval row that was current when rank i+1 was visited. Starts at an
    // all-zero guard row; it is never read before the first carry.
    std::int32_t proxb = max_lcp + 1;

    for (std::size_t i = n; i-- > 0;) {
        const std::int32_t lcp_i = sx.lcp[i];
        std::int32_t proxa = lcp_i + 1;
        if (i + 1 < n && lcp_i < sx.lcp[i + 1]) {
            while (lifo_lcp.top() > lcp_i) {
                proxa = lifo_lcp.pop();
                lifo_rem.push_back(proxa);
            }
            if (lifo_lcp.top() < lcp_i)
                interval.assign_row(static_cast<std::size_t>(lcp_i), interval, static_cast<std::size_t>(proxa));
        }
        arr.before.for_each_in_row(2 * i, [&](std::size_t k) {
            std::int32_t value = lifo_lcp.top();
            while (!interval.test(static_cast<std::size_t>(value), k)) {
                interval.set(static_cast<std::size_t>(value), k);
                value = lifo_lcp.next();
            }
            interval.set(static_cast<std::size_t>(lcp_i), k);
        });
        arr.before_lcp.or_row(2 * i, interval, static_cast<std::size_t>(lcp_i));
        if (i + 1 < n) {
            arr.before_lcp.or_row(2 * i + 1, interval, static_cast<std::size_t>(sx.lcp[i + 1]));
            arr.before.or_row(2 * i + 1, interval, static_cast<std::size_t>(proxb));
        }
        proxb = proxa;
        arr.before.or_row(2 * i, interval, static_cast<std::size_t>(proxa));
        while (!lifo_rem.empty()) {
            interval.clear_row(static_cast<std::size_t>(lifo_rem.back()));
            lifo_rem.pop_back();
        }
        if (lifo_lcp.top() != lcp_i) lifo_lcp.push(lcp_i);
    }
}

// Reads the completed arrays and reports one tuple per letter in
// BeforeLCP[j] \ Before[j], skipping rows whose factor would run past the
// end of y and rows that would repeat a word already produced.
//
// A factor of length l with suffix-array interval [lb, rb] shows up as row
// 2i only for i = lb (with LCP[lb] = l-1) and as row 2i+1 only for i = rb
// (with LCP[rb+1] = l-1), so a word can be emitted at most twice. The odd
// copy is dropped exactly when the even twin exists, i.e. when the interval
// left boundary lb (the previous rank with LCP[lb] <= LCP[i+1]) satisfies
// LCP[lb] == LCP[i+1]. That keeps the first tuple in row order.
inline MawReport extract_maws(const EncodedText& text, const SuffixIndex& sx,
                              const BeforeArrays& arr, std::int64_t min_len = 2,
                              std::int64_t max_len = kNoMaxLength) {
    if (min_len < 2 || min_len > max_len) throw std::invalid_argument("invalid length range");
    const std::size_t n = text.size();
    const auto sn = static_cast<std::int64_t>(n);

    // psve[r]: largest rank before r whose LCP value is <= LCP[r].
    std::vector<std::int32_t> psve(n, 0);
    {
        std::vector<std::int32_t> st;
        st.push_back(0);
        for (std::size_t r = 1; r < n; ++r) {
            while (sx.lcp[static_cast<std::size_t>(st.back())] > sx.lcp[r]) st.pop_back();
            psve[r] = st.back();
            st.push_back(static_cast<std::int32_t>(r));
        }
    }

    const std::uint8_t last_rank = text.data[n - 1];

    MawReport report;
    report.n = sn;
    report.alphabet = text.alphabet;

    auto scan = [&](auto&& emit) {
        for (std::size_t i = 0; i < n; ++i) {
            {
                const std::int32_t lcp_v = sx.lcp[i];
                const std::int64_t end = sx.sa[i] + lcp_v;
                const std::int64_t m = lcp_v + 2;
                if (end < sn && m >= min_len && m <= max_len) {
                    LetterSet b2 = arr.before_lcp.row(2 * i);
                    if (lcp_v == 0) b2.set(last_rank);  // B(eps) contains every letter of y
                    const LetterSet diff = b2.difference(arr.before.row(2 * i));
                    diff.for_each_member([&](std::size_t a) { emit(a, sx.sa[i], end); });
                }
            }
            if (i + 1 < n) {
                const std::int32_t lcp_v = sx.lcp[i + 1];
                const std::int64_t end = sx.sa[i] + lcp_v;
                const std::int64_t m = lcp_v + 2;
                if (end < sn && m >= min_len && m <= max_len &&
                    sx.lcp[static_cast<std::size_t>(psve[i + 1])] != lcp_v) {
                    const LetterSet diff =
                        arr.before_lcp.row(2 * i + 1).difference(arr.before.row(2 * i + 1));
                    diff.for_each_member([&](std::size_t a) { emit(a, sx.sa[i], end); });
                }
            }
        }
    };

    std::size_t total = 0;
    scan([&](std::size_t, std::int64_t, std::int64_t) { ++total; });
    report.tuples.reserve(total);
    scan([&](std::size_t a, std::int64_t start, std::int64_t end) {
        report.tuples.push_back(MawTuple{static_cast<std::uint8_t>(a),
                                         static_cast<std::int32_t>(start),
                                         static_cast<std::int32_t>(end)});
    });
    return report;
}

// Full pipeline: alphabet, encoding, suffix structures, both passes,
// extraction. Pure function of its input; O(n*sigma) time and space.
inline MawReport compute_maws(std::string_view raw, std::int64_t min_len = 2,
                              std::int64_t max_len = kNoMaxLength) {
    if (min_len < 2 || min_len > max_len) throw std::invalid_argument("invalid length range");
    const Alphabet alphabet = build_alphabet(raw);
    const EncodedText text = encode(raw, alphabet);
    const SuffixIndex sx = build_suffix_index(text);
    BeforeArrays arr = top_down_pass(text, sx);
    bottom_up_pass(text, sx, arr);
    return extract_maws(text, sx, arr, min_len, max_len);
}

}  // namespace maw
