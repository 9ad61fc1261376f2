#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maw {

// Dense effective alphabet of a byte sequence: the distinct bytes that occur,
// mapped to ranks 0..sigma-1 in ascending byte order.
struct Alphabet {
    std::vector<std::uint8_t> letters;       // rank -> raw byte, ascending
    std::array<std::int16_t, 256> ranks{};   // raw byte -> rank, -1 if absent

    Alphabet() { ranks.fill(-1); }

    std::size_t sigma() const { return letters.size(); }

    bool contains(std::uint8_t byte) const { return ranks[byte] >= 0; }

    std::uint8_t rank_of(std::uint8_t byte) const {
        const std::int16_t r = ranks[byte];
        if (r < 0)
            throw std::invalid_argument("byte '" + std::string(1, static_cast<char>(byte)) +
                                        "' not in alphabet");
        return static_cast<std::uint8_t>(r);
    }

    std::uint8_t letter(std::size_t rank) const {
        if (rank >= letters.size()) throw std::out_of_range("alphabet rank out of range");
        return letters[rank];
    }
};

// The input word y as dense ranks. Every element is < alphabet.sigma().
struct EncodedText {
    std::vector<std::uint8_t> data;
    Alphabet alphabet;

    std::size_t size() const { return data.size(); }
    std::uint8_t operator[](std::size_t i) const { return data[i]; }
};

inline Alphabet build_alphabet(std::string_view raw) {
    if (raw.empty()) throw std::invalid_argument("empty sequence");
    std::array<bool, 256> seen{};
    for (const char c : raw) seen[static_cast<std::uint8_t>(c)] = true;
    Alphabet a;
    for (std::size_t b = 0; b < 256; ++b)
        if (seen[b]) a.letters.push_back(static_cast<std::uint8_t>(b));
    if (a.letters.size() > 255) throw std::invalid_argument("alphabet too large");
    for (std::size_t r = 0; r < a.letters.size(); ++r)
        a.ranks[a.letters[r]] = static_cast<std::int16_t>(r);
    return a;
}

inline EncodedText encode(std::string_view raw, const Alphabet& alphabet) {
    EncodedText text;
    text.alphabet = alphabet;
    text.data.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto byte = static_cast<std::uint8_t>(raw[i]);
        const std::int16_t r = alphabet.ranks[byte];
        if (r < 0)
            throw std::invalid_argument("byte '" + std::string(1, raw[i]) + "' at position " +
                                        std::to_string(i) + " not in alphabet");
        text.data[i] = static_cast<std::uint8_t>(r);
    }
    return text;
}

inline std::string decode(const EncodedText& text) {
    std::string out(text.size(), '\0');
    for (std::size_t i = 0; i < text.size(); ++i)
        out[i] = static_cast<char>(text.alphabet.letters[text.data[i]]);
    return out;
}

}  // namespace maw
