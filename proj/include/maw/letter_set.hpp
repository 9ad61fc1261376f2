#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace maw {

// Fixed-width set of alphabet ranks, one bit per letter. The width (sigma)
// is fixed at construction; binary operations require equal widths.
// Storage is inline, so values copy cheaply and never touch the heap.
class LetterSet {
public:
    static constexpr std::size_t kMaxWidth = 256;

    LetterSet() = default;

    static LetterSet empty(std::size_t width) {
        if (width > kMaxWidth)
            throw std::invalid_argument("letter set width exceeds 256");
        LetterSet s;
        s.width_ = static_cast<std::uint32_t>(width);
        return s;
    }

    std::size_t width() const { return width_; }

    void set(std::size_t k) {
        check_rank(k);
        words_[k >> 6] |= std::uint64_t{1} << (k & 63);
    }

    bool test(std::size_t k) const {
        check_rank(k);
        return (words_[k >> 6] >> (k & 63)) & 1;
    }

    void clear(std::size_t k) {
        check_rank(k);
        words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
    }

    void clear_all() { words_.fill(0); }

    LetterSet union_with(const LetterSet& other) const {
        check_width(other);
        LetterSet out = *this;
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
        return out;
    }

    // {k : k in *this and k not in other}
    LetterSet difference(const LetterSet& other) const {
        check_width(other);
        LetterSet out = *this;
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
        return out;
    }

    LetterSet intersect(const LetterSet& other) const {
        check_width(other);
        LetterSet out = *this;
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
        return out;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool subset_of(const LetterSet& other) const {
        check_width(other);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    // Ranks present, strictly ascending.
    std::vector<std::uint8_t> members() const {
        std::vector<std::uint8_t> out;
        out.reserve(count());
        for_each_member([&](std::size_t k) { out.push_back(static_cast<std::uint8_t>(k)); });
        return out;
    }

    template <class Fn>
    void for_each_member(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                fn((w << 6) + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const LetterSet&) const = default;

private:
    std::array<std::uint64_t, kMaxWidth / 64> words_{};
    std::uint32_t width_ = 0;

    void check_rank(std::size_t k) const {
        if (k >= width_) throw std::out_of_range("letter rank out of range");
    }
    void check_width(const LetterSet& other) const {
        if (width_ != other.width_) throw std::invalid_argument("letter set width mismatch");
    }
};

}  // namespace maw
