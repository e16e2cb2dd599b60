#include <doctest.h>

#include <chrono>

#include "vlbal/errors.hpp"
#include "vlbal/oracle.hpp"
#include "vlbal/scheme_c.hpp"
#include "vlbal/trellis.hpp"

using namespace vlbal;

namespace {

CyclicCode load(const char* name) { return load_code_spec(std::string(VLBAL_TEST_DATA) + "/" + name); }

CyclicCode code_of(std::size_t n, const char* generator) {
    return CyclicCode::from_generator(n, Gf2Poly::parse(generator));
}

double seconds_for(const CyclicCode& code) {
    const auto start = std::chrono::steady_clock::now();
    (void)build_and_count(code);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

TEST_CASE("worked codes") {
    const auto s = build_and_count(load("simplex.code"));
    CHECK(s.gamma == std::map<int, BigCount>{{1, 2}, {2, 1}, {4, 1}});
    CHECK(s.codebook_size() == 4);
    CHECK(rho_c(load("simplex.code")) == doctest::Approx(2.25));

    const auto h = build_and_count(load("hamming.code"));
    CHECK(h.gamma == std::map<int, BigCount>{{1, 4}, {2, 2}, {4, 2}});
    CHECK(codebook_size(load("hamming.code")) == 8);
    CHECK(rho_c(load("hamming.code")) == doctest::Approx(2.25));
}

TEST_CASE("full space matches the closed form") {
    for (int n = 4; n <= 24; n += 2) {
        const auto result = build_and_count(CyclicCode::full_space(static_cast<std::size_t>(n - 1)));
        const auto closed = gamma_distribution_fullspace(n);
        std::map<int, BigCount> expected;
        for (std::size_t i = 1; i < closed.size(); ++i) {
            if (closed[i] != 0) expected[static_cast<int>(i)] = closed[i];
        }
        REQUIRE(result.gamma == expected);
        REQUIRE(rho_c(CyclicCode::full_space(static_cast<std::size_t>(n - 1))) == doctest::Approx(rho_c_fullspace(n)));
    }
}

TEST_CASE("trellis agrees with enumeration") {
    const std::vector<CyclicCode> codes = {
        load("simplex.code"),        load("hamming.code"),       load("even_weight.code"),
        code_of(15, "1,1,0,0,1"),    code_of(15, "1,0,0,0,1,0,1,1,1"), code_of(9, "1,1,1"),
        code_of(9, "1,0,0,1"),       code_of(21, "1,1,1,0,1,0,1"),     code_of(17, "1,0,0,1,1,1,0,0,1"),
        code_of(23, "1,0,1,0,1,1,1,0,0,0,1,1"),
    };
    for (const auto& code : codes) {
        CAPTURE(code.length());
        CAPTURE(code.dimension());
        const auto result = build_and_count(code);
        REQUIRE(result.gamma == gamma_histogram(code));
        REQUIRE(result.codebook_size() == BigCount(build_balanced_code(code).size()));
        BigCount total = 0;
        for (const auto& [i, count] : result.gamma) total += count;
        REQUIRE(total == result.codebook_size());
        REQUIRE(static_cast<double>(result.state_count()) <= trellis_state_bound(code));
    }
}

TEST_CASE("redundancy limit") {
    const auto code = code_of(31, "1,0,1,1,1,1,0,0,1,0,1,1,0,1,0,0,1,1,1,1,0,1");
    REQUIRE(code.redundancy() > kMaxTrellisRedundancy);
    CHECK_THROWS_AS(build_and_count(code), CapacityError);
}

TEST_CASE("state count grows polynomially in length for fixed redundancy") {
    const auto small = code_of(63, "1,1,0,0,0,0,1");
    const auto large = code_of(127, "1,1,0,0,0,0,0,1");
    CHECK(static_cast<double>(build_and_count(small).state_count()) <= trellis_state_bound(small));
    CHECK(seconds_for(large) < 60.0);
}
