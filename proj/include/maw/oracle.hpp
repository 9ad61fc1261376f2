#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace maw::oracle {

// Brute-force reference implementations, used only to validate the linear
// algorithms on small inputs. They work on raw bytes and share no code with
// the production path.

using WordSet = std::set<std::string>;

inline constexpr std::size_t kMaxOracleLength = 1000;

inline std::vector<std::int32_t> naive_suffix_array(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty sequence");
    std::vector<std::int32_t> sa(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) sa[i] = static_cast<std::int32_t>(i);
    std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
        return text.substr(static_cast<std::size_t>(a)) < text.substr(static_cast<std::size_t>(b));
    });
    return sa;
}

inline std::vector<std::int32_t> naive_lcp(std::string_view text, const std::vector<std::int32_t>& sa) {
    std::vector<std::int32_t> lcp(sa.size(), 0);
    for (std::size_t r = 1; r < sa.size(); ++r) {
        const std::string_view a = text.substr(static_cast<std::size_t>(sa[r - 1]));
        const std::string_view b = text.substr(static_cast<std::size_t>(sa[r]));
        std::size_t h = 0;
        while (h < a.size() && h < b.size() && a[h] == b[h]) ++h;
        lcp[r] = static_cast<std::int32_t>(h);
    }
    return lcp;
}

// Executable form of the definition: x = a*w is a minimal absent word iff w
// occurs in y, the longest proper prefix of x occurs in y, and x itself does
// not. Candidates are letters prepended to occurring factors, which covers
// every minimal absent word since its suffix x[1..m-1] must occur.
inline WordSet naive_maws(std::string_view text, std::int64_t min_len = 2,
                          std::int64_t max_len = std::numeric_limits<std::int64_t>::max()) {
    if (text.empty()) throw std::invalid_argument("empty sequence");
    if (text.size() > kMaxOracleLength) throw std::invalid_argument("oracle input exceeds hard cap");
    if (min_len < 2 || min_len > max_len) throw std::invalid_argument("invalid length range");

    std::unordered_set<std::string_view> factors;
    for (std::size_t i = 0; i < text.size(); ++i)
        for (std::size_t len = 1; len <= text.size() - i; ++len) factors.insert(text.substr(i, len));

    std::set<char> letters(text.begin(), text.end());

    WordSet maws;
    std::string candidate;
    for (const std::string_view w : factors) {
        const std::int64_t m = static_cast<std::int64_t>(w.size()) + 1;
        if (m < min_len || m > max_len) continue;
        for (const char a : letters) {
            candidate.assign(1, a);
            candidate.append(w);
            if (factors.count(std::string_view(candidate))) continue;                       // x occurs
            if (!factors.count(std::string_view(candidate).substr(0, w.size()))) continue;  // prefix absent
            maws.insert(candidate);
        }
    }
    return maws;
}

}  // namespace maw::oracle
