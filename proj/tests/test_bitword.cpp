#include <doctest.h>

#include "vlbal/bitword.hpp"
#include "vlbal/errors.hpp"
#include "vlbal/lattice.hpp"

using namespace vlbal;

namespace {
BitWord W(const char* s) { return BitWord::parse(s); }
}  // namespace

TEST_CASE("parse and print keep leading zeros") {
    CHECK(W("0010").size() == 4);
    CHECK(W("0010").to_string() == "0010");
    CHECK(W("0110 0110").to_string() == "01100110");
    CHECK(W("").empty());
    CHECK_THROWS_AS(W("01a"), DomainError);
    CHECK(BitWord::from_uint(5, 4).to_string() == "0101");
    CHECK(W("1101").to_uint() == 13);
}

TEST_CASE("weight") {
    CHECK(weight(W("10011111")) == 6);
    CHECK(weight(W("")) == 0);
    CHECK(weight(W("0101")) == 2);
}

TEST_CASE("flip_prefix") {
    CHECK(flip_prefix(W("00011111"), 1) == W("10011111"));
    CHECK(flip_prefix(W("0110"), 0) == W("0110"));
    CHECK(flip_prefix(W("01100000"), 8) == W("10011111"));
    CHECK_THROWS_AS(flip_prefix(W("01"), 3), std::out_of_range);
}

TEST_CASE("complement and cyclic shift") {
    CHECK(complement(W("11100000")) == W("00011111"));
    CHECK(cyclic_shift(W("1011100"), 1) == W("0101110"));
    CHECK(flip_prefix(cyclic_shift(W("1011100"), 1), 4) == W("1010110"));
    CHECK(cyclic_shift(W("1011100"), 0) == W("1011100"));
    CHECK(cyclic_shift(W("1011100"), -1) == W("0111001"));
    CHECK(cyclic_shift(W("1011100"), 7) == W("1011100"));
}

TEST_CASE("running sums") {
    CHECK(running_sum(W("10011111")) == std::vector<int>{0, 1, 0, -1, 0, 1, 2, 3, 4});
    CHECK(running_sum(W("1110000")) == std::vector<int>{0, 1, 2, 3, 2, 1, 0, -1});
    CHECK(running_sum(W("0000")) == std::vector<int>{0, -1, -2, -3, -4});
}

TEST_CASE("cyclic running sums") {
    CHECK(cyclic_running_sum(W("1010110")) == std::vector<int>{0, 2, 2, 2});
    CHECK(cyclic_running_sum(W("1111111")) == std::vector<int>{0, 2, 4, 6});
    CHECK(cyclic_running_sum(W("0110011")) == std::vector<int>{0, -2, 0, 2});
    CHECK_THROWS_AS(cyclic_running_sum(W("0110")), DomainError);
}

TEST_CASE("balancing indices") {
    CHECK(balancing_indices(W("00011111"), 2).front() == 1);
    CHECK(balancing_indices(W("01100110"), 2).empty());
    CHECK(balancing_indices(complement(W("01100110")), 2).empty());
    CHECK(balancing_indices(W("0110"), 0).front() == 0);
    CHECK_THROWS_AS(balancing_indices(W("011"), 0), DomainError);
}

TEST_CASE("prefix and suffix reconstruct the word") {
    for (std::uint64_t v = 0; v < 64; ++v) {
        const BitWord w = BitWord::from_uint(v, 6);
        for (std::size_t j = 0; j <= 6; ++j) CHECK(w.prefix(j) + w.suffix(6 - j) == w);
    }
}

TEST_CASE("flip changes weight by zeros minus ones of the prefix") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const BitWord w = BitWord::from_uint(v, n);
            for (std::size_t j = 0; j <= n; ++j) {
                const auto ones = static_cast<long>(weight(w.prefix(j)));
                const auto zeros = static_cast<long>(j) - ones;
                REQUIRE(static_cast<long>(weight(flip_prefix(w, j))) == static_cast<long>(weight(w)) + zeros - ones);
            }
        }
    }
}

TEST_CASE("running sum of the complement is negated") {
    for (std::uint64_t v = 0; v < 1024; ++v) {
        const BitWord w = BitWord::from_uint(v, 10);
        auto r = running_sum(w);
        for (auto& x : r) x = -x;
        REQUIRE(running_sum(complement(w)) == r);
    }
}

TEST_CASE("imbalance after a prefix flip equals twice the path offset") {
    for (std::size_t n = 2; n <= 12; n += 2) {
        const auto m = static_cast<std::int64_t>(n / 2);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const BitWord w = BitWord::from_uint(v, n);
            const auto path = path_of_word(w, m);
            for (std::size_t j = 0; j <= n; ++j) {
                const auto imbalance = 2 * static_cast<std::int64_t>(weight(flip_prefix(w, j))) - static_cast<std::int64_t>(n);
                REQUIRE(imbalance == 2 * (path[j].y - path[j].x));
            }
        }
    }
}

TEST_CASE("every even-length word has a balancing index") {
    for (std::size_t n = 2; n <= 16; n += 2) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            REQUIRE(first_index_reaching_weight(BitWord::from_uint(v, n), n / 2).has_value());
        }
    }
}

TEST_CASE("fixed-width fields") {
    CHECK(encode_field(5, 3).to_string() == "101");
    CHECK(encode_field(0, 0).empty());
    CHECK_THROWS_AS(encode_field(4, 2), DomainError);
    CHECK(decode_field(W("0101"), 1, 3) == 5);
    CHECK_THROWS_AS(decode_field(W("01"), 1, 3), DecodeError);
    CHECK(bits_for(1) == 0);
    CHECK(bits_for(2) == 1);
    CHECK(bits_for(4) == 2);
    CHECK(bits_for(6) == 3);
}
