#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "maw/alphabet.hpp"

namespace maw {

// Suffix array, its inverse, and the LCP array of one encoded text.
// sa is a permutation of [0,n); isa[sa[r]] = r; lcp[0] = 0 and lcp[r] is the
// longest common prefix length of the suffixes at ranks r-1 and r.
struct SuffixIndex {
    std::vector<std::int32_t> sa;
    std::vector<std::int32_t> isa;
    std::vector<std::int32_t> lcp;
    std::int64_t n = 0;
};

namespace detail {

// SA-IS (induced sorting), worst-case linear time for integer alphabets.
// Precondition: s[n-1] is a unique smallest sentinel (value 0, exactly one
// occurrence) and every value is < k.
template <class Char>
void sais(const Char* s, std::int32_t* sa, std::size_t n, std::size_t k) {
    constexpr std::int32_t kEmpty = -1;
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<std::uint8_t> stype(n, 0);  // 1 = S-type suffix
    stype[n - 1] = 1;
    for (std::size_t i = n - 1; i-- > 0;)
        stype[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1])) ? 1 : 0;
    auto is_lms = [&](std::size_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    // 64-bit sums: the cumulative count reaches n, which can exceed the
    // 32-bit range by one when n is itself at the 32-bit limit.
    std::vector<std::int64_t> bkt;
    auto bucket_bounds = [&](bool ends) {
        bkt.assign(k, 0);
        for (std::size_t i = 0; i < n; ++i) ++bkt[s[i]];
        std::int64_t sum = 0;
        for (std::size_t c = 0; c < k; ++c) {
            sum += bkt[c];
            bkt[c] = ends ? sum : sum - bkt[c];
        }
    };

    auto induce = [&]() {
        bucket_bounds(false);
        for (std::size_t i = 0; i < n; ++i) {
            const std::int32_t j = sa[i];
            if (j > 0 && !stype[j - 1]) sa[static_cast<std::size_t>(bkt[s[j - 1]]++)] = j - 1;
        }
        bucket_bounds(true);
        for (std::size_t i = n; i-- > 0;) {
            const std::int32_t j = sa[i];
            if (j > 0 && stype[j - 1]) sa[static_cast<std::size_t>(--bkt[s[j - 1]])] = j - 1;
        }
    };

    // Stage 1: sort the LMS substrings by placing LMS positions unsorted and
    // inducing once.
    std::fill(sa, sa + n, kEmpty);
    bucket_bounds(true);
    for (std::size_t i = 1; i < n; ++i)
        if (is_lms(i)) sa[static_cast<std::size_t>(--bkt[s[i]])] = static_cast<std::int32_t>(i);
    induce();

    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t j = sa[i];
        if (j > 0 && is_lms(static_cast<std::size_t>(j))) sa[m++] = j;
    }

    // Name the sorted LMS substrings; equal substrings share a name. Adjacent
    // LMS positions are at least two apart, so pos/2 slots are collision-free.
    std::fill(sa + m, sa + n, kEmpty);
    auto equal_lms = [&](std::size_t a, std::size_t b) {
        if (a == b) return true;
        for (std::size_t d = 0;; ++d) {
            if (s[a + d] != s[b + d]) return false;
            const bool al = d > 0 && is_lms(a + d);
            const bool bl = d > 0 && is_lms(b + d);
            if (al != bl) return false;
            if (al) return true;
        }
    };
    std::int32_t name = 0;
    std::int32_t prev = -1;
    for (std::size_t i = 0; i < m; ++i) {
        const std::int32_t pos = sa[i];
        if (prev < 0 || !equal_lms(static_cast<std::size_t>(pos), static_cast<std::size_t>(prev)))
            ++name;
        sa[m + static_cast<std::size_t>(pos) / 2] = name - 1;
        prev = pos;
    }
    for (std::size_t i = n, j = n; i-- > m;)
        if (sa[i] != kEmpty) sa[--j] = sa[i];

    // Reduced problem over the LMS substring names, in text order.
    std::int32_t* s1 = sa + (n - m);
    if (static_cast<std::size_t>(name) < m) {
        bkt = {};  // release before recursing; bucket_bounds rebuilds it
        sais<std::int32_t>(s1, sa, m, static_cast<std::size_t>(name));
    } else {
        for (std::size_t i = 0; i < m; ++i) sa[s1[i]] = static_cast<std::int32_t>(i);
    }

    std::vector<std::int32_t> lms_pos;
    lms_pos.reserve(m);
    for (std::size_t i = 1; i < n; ++i)
        if (is_lms(i)) lms_pos.push_back(static_cast<std::int32_t>(i));
    for (std::size_t i = 0; i < m; ++i) sa[i] = lms_pos[static_cast<std::size_t>(sa[i])];

    // Stage 2: induce the final order from the now fully sorted LMS suffixes.
    std::fill(sa + m, sa + n, kEmpty);
    bucket_bounds(true);
    for (std::size_t i = m; i-- > 0;) {
        const std::int32_t j = sa[i];
        sa[i] = kEmpty;
        sa[static_cast<std::size_t>(--bkt[s[j]])] = j;
    }
    induce();
}

}  // namespace detail

// Worst-case O(n) construction. A sentinel strictly smaller than every rank
// is appended internally and stripped from the result, so sa has exactly n
// rows and no empty-suffix entry.
inline std::vector<std::int32_t> build_suffix_array(const EncodedText& text) {
    const std::size_t n = text.size();
    if (n == 0) throw std::invalid_argument("empty sequence");
    if (n > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
        throw std::length_error("text too long for 32-bit suffix array");

    std::vector<std::uint8_t> shifted(n + 1);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = static_cast<std::uint8_t>(text.data[i] + 1);
    shifted[n] = 0;

    std::vector<std::int32_t> sa_full(n + 1);
    detail::sais<std::uint8_t>(shifted.data(), sa_full.data(), n + 1, text.alphabet.sigma() + 1);
    return std::vector<std::int32_t>(sa_full.begin() + 1, sa_full.end());
}

inline std::vector<std::int32_t> build_inverse(const std::vector<std::int32_t>& sa) {
    std::vector<std::int32_t> isa(sa.size());
    for (std::size_t r = 0; r < sa.size(); ++r) isa[static_cast<std::size_t>(sa[r])] = static_cast<std::int32_t>(r);
    return isa;
}

// Kasai's algorithm, O(n).
inline std::vector<std::int32_t> build_lcp(const EncodedText& text,
                                           const std::vector<std::int32_t>& sa,
                                           const std::vector<std::int32_t>& isa) {
    const std::size_t n = text.size();
    std::vector<std::int32_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t r = isa[i];
        if (r > 0) {
            const std::size_t j = static_cast<std::size_t>(sa[static_cast<std::size_t>(r) - 1]);
            while (i + h < n && j + h < n && text.data[i + h] == text.data[j + h]) ++h;
            lcp[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(h);
            if (h > 0) --h;
        } else {
            h = 0;
        }
    }
    return lcp;
}

inline SuffixIndex build_suffix_index(const EncodedText& text) {
    SuffixIndex sx;
    sx.n = static_cast<std::int64_t>(text.size());
    sx.sa = build_suffix_array(text);
    sx.isa = build_inverse(sx.sa);
    sx.lcp = build_lcp(text, sx.sa, sx.isa);
    return sx;
}

}  // namespace maw
