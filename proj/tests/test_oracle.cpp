#include <doctest.h>

#include "vlbal/errors.hpp"
#include "vlbal/oracle.hpp"
#include "vlbal/report.hpp"
#include "vlbal/scheme_a.hpp"
#include "vlbal/scheme_b.hpp"
#include "vlbal/scheme_c.hpp"

using namespace vlbal;

namespace {

CyclicCode simplex() { return load_code_spec(std::string(VLBAL_TEST_DATA) + "/simplex.code"); }

template <class Visit>
void for_each_word(std::size_t len, Visit visit) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) visit(BitWord::from_uint(v, len));
}

}  // namespace

TEST_CASE("scan index agrees with the running-sum encoders") {
    for (int n = 4; n <= 12; n += 2) {
        for (int q = 0; q <= n / 2 - 1; ++q) {
            for_each_word(static_cast<std::size_t>(n), [&](const BitWord& x) {
                const auto cls = classify(x, q);
                if (cls == Classification::Type1Good) REQUIRE(min_index_by_scan(SchemeId::A, x, q) == encode_a(x, q).tau);
                if (cls == Classification::Type0Good) {
                    REQUIRE(!min_index_by_scan(SchemeId::A, x, q));
                    REQUIRE(min_index_by_scan(SchemeId::A, complement(x), q) == encode_a(x, q).tau);
                }
                if (is_bad(cls)) REQUIRE(!min_index_by_scan(SchemeId::A, x, q));
            });
        }
    }
}

TEST_CASE("definitional gamma sets equal the running-sum sets") {
    for (int n = 4; n <= 12; n += 2) {
        for (int q = 0; q <= n / 2 - 1; ++q) {
            for_each_word(static_cast<std::size_t>(n), [&](const BitWord& c) {
                if (weight(c) == static_cast<std::size_t>(n / 2 + q)) {
                    REQUIRE(definitional_gamma(SchemeId::A, c, n, q) == gamma_set_a(c, q));
                }
            });
            for_each_word(static_cast<std::size_t>(n - 1), [&](const BitWord& c) {
                const auto wt = weight(c);
                if (wt + 1 == static_cast<std::size_t>(n / 2 + q) || wt == static_cast<std::size_t>(n / 2 + q)) {
                    REQUIRE(definitional_gamma(SchemeId::B, c, n, q) == gamma_set_b(c, q));
                }
            });
        }
    }
}

TEST_CASE("histograms equal closed forms") {
    for (int n = 4; n <= 14; n += 2) {
        for (int q = 0; q <= 3 && q < n / 2; ++q) {
            CAPTURE(n);
            CAPTURE(q);
            const auto a = gamma_distribution_a(n, q);
            const auto b = gamma_distribution_b(n, q);
            const auto ha = gamma_histogram(SchemeId::A, n, q);
            const auto hb = gamma_histogram(SchemeId::B, n, q);
            for (std::size_t i = 1; i < a.size(); ++i) {
                const auto it = ha.find(static_cast<int>(i));
                REQUIRE((it == ha.end() ? BigCount(0) : it->second) == a[i]);
            }
            for (std::size_t i = 1; i < b.size(); ++i) {
                const auto it = hb.find(static_cast<int>(i));
                REQUIRE((it == hb.end() ? BigCount(0) : it->second) == b[i]);
            }
        }
    }
    CHECK(gamma_histogram(simplex()) == std::map<int, BigCount>{{1, 2}, {2, 1}, {4, 1}});
}

TEST_CASE("bad-word censuses") {
    CHECK(bad_census_a(8, 2) == count_bad(8, 2));
    for (int n = 4; n <= 14; n += 2) {
        for (int q = 0; q < n / 2; ++q) {
            REQUIRE(bad_census_a(n, q) == count_bad(n, q));
            REQUIRE(bad_census_b(n, q) == count_bad_b(n, q));
        }
    }
}

TEST_CASE("exhaustive round trips") {
    for (int n = 4; n <= 12; n += 2) {
        for (int q = 0; q < n / 2; ++q) {
            REQUIRE(roundtrip_all(SchemeId::A, n, q).passed);
            REQUIRE(roundtrip_all(SchemeId::B, n, q).passed);
        }
        REQUIRE(roundtrip_all(SchemeId::CFullSpace, n, 0).passed);
    }
    const auto r = roundtrip_all(simplex());
    CHECK(r.passed);
    CHECK(r.checked == 8);
}

TEST_CASE("simulated redundancy") {
    const auto b = exhaustive_redundancy(SchemeId::B, 8, 0);
    CHECK(b.analytical_mean == doctest::Approx(2.0083).epsilon(1e-4));
    CHECK(b.analytical_mean == doctest::Approx(rho_b(8, 0)));

    const auto a = exhaustive_redundancy(SchemeId::A, 8, 2);
    REQUIRE(a.bad_words.has_value());
    CHECK(*a.bad_words == count_bad(8, 2));

    for (int n = 4; n <= 14; n += 2) {
        for (int q = 0; q < n / 2 && q <= 3; ++q) {
            for (const auto scheme : {SchemeId::A, SchemeId::B}) {
                const auto r = exhaustive_redundancy(scheme, n, q);
                REQUIRE(r.analytical_mean <= r.operational_mean + 1e-12);
                REQUIRE(r.operational_mean <= r.analytical_mean + 1.0);
            }
        }
        const auto c = exhaustive_redundancy(SchemeId::CFullSpace, n, 0);
        REQUIRE(c.analytical_mean == doctest::Approx(rho_c_fullspace(n)));
    }
    CHECK(exhaustive_redundancy(simplex()).analytical_mean == doctest::Approx(2.25));
}

TEST_CASE("oracle limits") {
    CHECK_THROWS_AS(gamma_histogram(SchemeId::A, kMaxOracleBits + 2, 0), CapacityError);
    CHECK_THROWS_AS(gamma_histogram(SchemeId::CCode, 8, 0), DomainError);
    CHECK_THROWS_AS(roundtrip_all(SchemeId::CFullSpace, 8, 1), DomainError);
}
