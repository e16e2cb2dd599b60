#include <doctest.h>

#include <map>
#include <set>

#include "vlbal/errors.hpp"
#include "vlbal/oracle.hpp"
#include "vlbal/scheme_c.hpp"

using namespace vlbal;

namespace {

BitWord W(const char* s) { return BitWord::parse(s); }

CyclicCode simplex() { return load_code_spec(std::string(VLBAL_TEST_DATA) + "/simplex.code"); }
CyclicCode hamming() { return load_code_spec(std::string(VLBAL_TEST_DATA) + "/hamming.code"); }

}  // namespace

TEST_CASE("flip of the first half") {
    CHECK(flip_c(W("1011100")) == W("0100100"));
    CHECK(flip_c(W("0101110")) == W("1010110"));
    for (std::uint64_t v = 0; v < 128; ++v) {
        const BitWord x = BitWord::from_uint(v, 7);
        CHECK(flip_c(flip_c(x)) == x);
    }
    CHECK_THROWS_AS(flip_c(W("0101")), DomainError);
}

TEST_CASE("shift sets") {
    CHECK(t_c(W("1011100")).front() == 1);
    CHECK(t_c(W("0000000")).front() == 0);
}

TEST_CASE("gamma sizes") {
    CHECK(gamma_size_c(W("1010110")) == 4);
    CHECK(gamma_size_c(W("0110011")) == 2);
    CHECK(gamma_size_c(W("1111000")) == 1);
    CHECK(gamma_set_c(W("1010110")) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(gamma_size_c(W("1111110")), DomainError);
}

TEST_CASE("worked simplex table") {
    struct Row {
        const char* message;
        const char* x;
        std::size_t tau;
        const char* cprime;
        std::size_t size;
        const char* prefix;
    };
    const Row rows[] = {
        {"000", "0000000", 0, "11110000", 1, ""},   {"101", "1011100", 1, "10101100", 4, "01"},
        {"010", "0101110", 0, "10101100", 4, "00"}, {"001", "0010111", 1, "01100110", 2, "1"},
        {"100", "1001011", 0, "01100110", 2, "0"},  {"110", "1100101", 0, "00111010", 1, ""},
        {"111", "1110010", 3, "10101100", 4, "11"}, {"011", "0111001", 2, "10101100", 4, "10"},
    };
    const auto code = simplex();
    for (const auto& row : rows) {
        const BitWord x = code.encode_systematic(W(row.message));
        CHECK(x == W(row.x));
        const auto r = encode_c(code, x);
        CHECK(r.tau == row.tau);
        CHECK(r.codeword == W(row.cprime));
        CHECK(gamma_size_c(r.codeword.prefix(7)) == row.size);
        CHECK(r.prefix == W(row.prefix));
        CHECK(decode_c(code, r.codeword, r.prefix) == x);
    }
}

TEST_CASE("decoding") {
    CHECK(decode_c(simplex(), W("10101100"), W("10")) == W("0111001"));
    CHECK_THROWS_AS(decode_c(simplex(), W("10101100"), W("1")), DecodeError);
    CHECK_THROWS_AS(decode_c(simplex(), W("10101110"), W("10")), DecodeError);
    CHECK_THROWS_AS(decode_c(simplex(), W("1010110"), W("10")), DecodeError);
    // Balanced but not produced by the simplex code.
    CHECK_THROWS_AS(decode_c(simplex(), W("11001100"), W("")), DecodeError);
    CHECK_THROWS_AS(encode_c(simplex(), W("1111111")), DomainError);
}

TEST_CASE("balanced codebooks") {
    const auto s = build_balanced_code(simplex());
    CHECK(std::set<BitWord>(s.begin(), s.end()) ==
          std::set<BitWord>{W("11110000"), W("10101100"), W("01100110"), W("00111010")});
    CHECK(BalancedCodebook(s).min_distance() == 4);

    const auto h = build_balanced_code(hamming());
    CHECK(h.size() == 8);
    CHECK(BalancedCodebook(h).min_distance() >= 4);
}

TEST_CASE("every output is balanced and decodes uniquely") {
    for (const auto& code : {simplex(), hamming(), CyclicCode::full_space(9)}) {
        std::map<std::pair<BitWord, BitWord>, BitWord> seen;
        code.for_each_codeword([&](const BitWord& x) {
            const auto r = encode_c(code, x);
            REQUIRE(weight(r.codeword) == r.codeword.size() / 2);
            REQUIRE(seen.emplace(std::make_pair(r.codeword, r.prefix), x).second);
            REQUIRE(decode_c(code, r.codeword, r.prefix) == x);
        });
    }
}

TEST_CASE("gamma sets are initial segments") {
    for (std::size_t len = 3; len <= 15; len += 2) {
        const std::size_t m = (len + 1) / 2;
        const int n = static_cast<int>(len) + 1;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            const BitWord c = BitWord::from_uint(v, len);
            if (weight(c) != m && weight(c) + 1 != m) continue;
            if (len <= 11) REQUIRE(definitional_gamma(SchemeId::CFullSpace, c, n, 0) == gamma_set_c(c));
            const std::size_t size = gamma_size_c(c);
            REQUIRE(size >= 1);
            REQUIRE(size <= m);
        }
    }
}

TEST_CASE("gamma size equals the number of shifts routed to the word") {
    for (const auto& code : {simplex(), hamming(), CyclicCode::full_space(7)}) {
        std::map<BitWord, std::set<std::size_t>> routed;
        code.for_each_codeword([&](const BitWord& x) {
            const auto r = encode_c(code, x);
            routed[r.codeword.prefix(7)].insert(r.tau);
        });
        for (const auto& [c, taus] : routed) REQUIRE(taus.size() == gamma_size_c(c));
    }
}

TEST_CASE("full-space distribution") {
    CHECK(gamma_distribution_fullspace(8) == std::vector<BigCount>{0, 40, 12, 8, 10});
    for (int n = 4; n <= 12; n += 2) {
        std::map<int, BigCount> formula;
        const auto g = gamma_distribution_fullspace(n);
        for (std::size_t i = 1; i < g.size(); ++i) {
            if (g[i] != 0) formula[static_cast<int>(i)] = g[i];
        }
        REQUIRE(formula == gamma_histogram(SchemeId::CFullSpace, n, 0));
    }
    CHECK(std::abs(rho_c_fullspace(16) - 2.81) <= 0.01);
    CHECK(std::abs(rho_c_fullspace(8) - 2.12) <= 0.02);
}

TEST_CASE("block correction") {
    const auto code = simplex();
    BitWord r = W("10101100");
    CHECK(correct_block(code, r) == r);
    r.set(2, !r[2]);
    CHECK(correct_block(code, r) == W("10101100"));

    BitWord two = W("11110000");
    two.set(0, false);
    two.set(1, false);
    CHECK_THROWS_AS(correct_block(code, two), DecodeError);
    const BalancedCodebook book = BalancedCodebook::from_code(code);
    CHECK(book.correct(two, TieBreak::Lexicographic) == W("00111010"));
    CHECK(book.radius() == 1);
}

TEST_CASE("single errors are corrected in every position") {
    const BalancedCodebook book = BalancedCodebook::from_code(hamming());
    for (const auto& w : book.words()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            BitWord r = w;
            r.set(i, !r[i]);
            REQUIRE(book.correct(r) == w);
        }
    }
}
