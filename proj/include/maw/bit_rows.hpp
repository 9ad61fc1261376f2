#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <vector>

#include "maw/letter_set.hpp"

namespace maw {

// Flat table of equal-width bit rows, byte-packed per row. Used for the
// Before/BeforeLCP arrays (2n rows) and the Interval table, where one
// LetterSet object per row would waste memory at genome scale.
class BitRows {
public:
    BitRows() = default;

    BitRows(std::size_t rows, std::size_t width)
        : rows_(rows), width_(width), row_bytes_((width + 7) / 8), bytes_(rows * ((width + 7) / 8), 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t width() const { return width_; }

    void set(std::size_t row, std::size_t k) { bytes_[row * row_bytes_ + (k >> 3)] |= std::uint8_t(1u << (k & 7)); }

    bool test(std::size_t row, std::size_t k) const {
        return (bytes_[row * row_bytes_ + (k >> 3)] >> (k & 7)) & 1;
    }

    void clear_row(std::size_t row) { std::memset(&bytes_[row * row_bytes_], 0, row_bytes_); }

    void assign_row(std::size_t dst, const BitRows& src, std::size_t src_row) {
        std::memmove(&bytes_[dst * row_bytes_], &src.bytes_[src_row * row_bytes_], row_bytes_);
    }

    void or_row(std::size_t dst, const BitRows& src, std::size_t src_row) {
        std::uint8_t* d = &bytes_[dst * row_bytes_];
        const std::uint8_t* s = &src.bytes_[src_row * row_bytes_];
        for (std::size_t b = 0; b < row_bytes_; ++b) d[b] |= s[b];
    }

    void assign_row(std::size_t dst, const LetterSet& value) {
        std::uint8_t* d = &bytes_[dst * row_bytes_];
        for (std::size_t b = 0; b < row_bytes_; ++b) d[b] = 0;
        value.for_each_member([&](std::size_t k) { d[k >> 3] |= std::uint8_t(1u << (k & 7)); });
    }

    LetterSet row(std::size_t r) const {
        LetterSet out = LetterSet::empty(width_);
        const std::uint8_t* s = &bytes_[r * row_bytes_];
        for (std::size_t b = 0; b < row_bytes_; ++b) {
            std::uint8_t bits = s[b];
            while (bits) {
                const int k = __builtin_ctz(bits);
                out.set((b << 3) + static_cast<std::size_t>(k));
                bits = static_cast<std::uint8_t>(bits & (bits - 1));
            }
        }
        return out;
    }

    template <class Fn>
    void for_each_in_row(std::size_t r, Fn&& fn) const {
        const std::uint8_t* s = &bytes_[r * row_bytes_];
        for (std::size_t b = 0; b < row_bytes_; ++b) {
            std::uint8_t bits = s[b];
            while (bits) {
                const int k = __builtin_ctz(bits);
                fn((b << 3) + static_cast<std::size_t>(k));
                bits = static_cast<std::uint8_t>(bits & (bits - 1));
            }
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t width_ = 0;
    std::size_t row_bytes_ = 0;
    std::vector<std::uint8_t> bytes_;
};

}  // namespace maw
