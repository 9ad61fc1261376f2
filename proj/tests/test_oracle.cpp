#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "maw/oracle.hpp"

using namespace maw::oracle;

TEST_CASE("naive suffix array golden values") {
    REQUIRE(naive_suffix_array("AABABABB") == std::vector<std::int32_t>{0, 1, 3, 5, 7, 2, 4, 6});
    REQUIRE(naive_suffix_array("AAAA") == std::vector<std::int32_t>{3, 2, 1, 0});
    REQUIRE(naive_suffix_array("banana") == std::vector<std::int32_t>{5, 3, 1, 0, 4, 2});
}

TEST_CASE("naive lcp golden values") {
    REQUIRE(naive_lcp("AABABABB", naive_suffix_array("AABABABB")) ==
            std::vector<std::int32_t>{0, 1, 4, 2, 0, 1, 3, 1});
    REQUIRE(naive_lcp("AAAA", naive_suffix_array("AAAA")) == std::vector<std::int32_t>{0, 1, 2, 3});
    REQUIRE(naive_lcp("AB", naive_suffix_array("AB")) == std::vector<std::int32_t>{0, 0});
}

TEST_CASE("naive maws golden values") {
    REQUIRE(naive_maws("AABABABB") ==
            WordSet{"AAA", "AABABB", "AABB", "BAA", "BABABA", "BBA", "BBB"});
    REQUIRE(naive_maws("A") == WordSet{"AA"});
    REQUIRE(naive_maws("AB") == WordSet{"AA", "BA", "BB"});
}

TEST_CASE("naive maws respects the length filter") {
    REQUIRE(naive_maws("AABABABB", 4, 4) == WordSet{"AABB"});
    REQUIRE(naive_maws("AABABABB", 2, 3) == WordSet{"AAA", "BAA", "BBA", "BBB"});
    REQUIRE_THROWS_AS(naive_maws("AB", 5, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(naive_maws("AB", 1, 4), std::invalid_argument);
}

TEST_CASE("naive maws enforces the input cap") {
    REQUIRE_NOTHROW(naive_maws(std::string(1000, 'A')));
    REQUIRE_THROWS_AS(naive_maws(std::string(1001, 'A')), std::invalid_argument);
}

TEST_CASE("every reported word satisfies the definition") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t n = 1 + rng() % 120;
        std::string y(n, 'A');
        for (char& c : y) c = static_cast<char>('A' + rng() % 3);

        for (const std::string& x : naive_maws(y)) {
            REQUIRE(x.size() >= 2);
            REQUIRE(y.find(x) == std::string::npos);
            // all proper factors occur; it is enough to check both length-(m-1) ones
            REQUIRE(y.find(x.substr(1)) != std::string::npos);
            REQUIRE(y.find(x.substr(0, x.size() - 1)) != std::string::npos);
        }
    }
}
