#include <doctest.h>

#include <cmath>
#include <random>

#include "vlbal/errors.hpp"
#include "vlbal/lattice.hpp"
#include "vlbal/scheme_a.hpp"

using namespace vlbal;

namespace {

// Counts step sequences directly: bit 1 = right, bit 0 = up.
BigCount enumerate(LatticePoint from, LatticePoint to, std::int64_t lo, std::int64_t hi) {
    const std::int64_t dx = to.x - from.x;
    const std::int64_t n = dx + (to.y - from.y);
    BigCount total = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        if (__builtin_popcountll(v) != dx) continue;
        LatticePoint p = from;
        bool inside = lo <= p.y - p.x && p.y - p.x <= hi;
        for (std::int64_t s = 0; s < n && inside; ++s) {
            if ((v >> s) & 1) ++p.x; else ++p.y;
            inside = lo <= p.y - p.x && p.y - p.x <= hi;
        }
        if (inside) total += 1;
    }
    return total;
}

}  // namespace

TEST_CASE("free path counts") {
    CHECK(count_free({0, 0}, {2, 2}) == 6);
    CHECK(count_free({0, 0}, {5, 0}) == 1);
    CHECK(count_free({0, 2}, {6, 4}) == 28);
    CHECK_THROWS_AS(count_free({0, 0}, {-1, 2}), DomainError);
}

TEST_CASE("banded path counts") {
    CHECK(count_banded({0, 0}, {2, 2}, PathBand(-1, 1)) == 4);
    CHECK(count_banded({0, 0}, {2, 2}, PathBand(-2, 2)) == 6);
    CHECK(count_banded({0, 0}, {2, 2}, PathBand(0, 2)) == 2);
    CHECK(count_banded({0, 0}, {2, 2}, PathBand(1, 2)) == 0);
    CHECK(count_banded({0, 0}, {0, 0}, PathBand(0, 0)) == 1);
    CHECK_THROWS_AS(PathBand(1, 0), DomainError);
}

TEST_CASE("trigonometric counts") {
    CHECK(count_banded_trig({0, 0}, {2, 2}, PathBand(-1, 1)) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(count_banded_trig({0, 0}, {2, 2}, PathBand(-2, 2)) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(count_banded_trig({0, 0}, {0, 0}, PathBand(0, 0)) == doctest::Approx(1.0));
    CHECK(count_banded_trig({0, 0}, {1, 1}, PathBand(0, 0)) == doctest::Approx(0.0));
    CHECK(count_banded_trig({0, 0}, {3, 0}, PathBand(-1, 0)) == doctest::Approx(0.0));
}

TEST_CASE("paths above the diagonal") {
    CHECK(count_above_diagonal({0, 0}, {2, 2}) == 2);
    CHECK(count_above_diagonal({0, 0}, {3, 3}) == 5);
    CHECK(count_above_diagonal({0, 1}, {1, 2}) == 2);
    CHECK_THROWS_AS(count_above_diagonal({1, 0}, {2, 2}), DomainError);
}

TEST_CASE("formulas agree with step enumeration") {
    for (std::int64_t dx = 0; dx <= 6; ++dx) {
        for (std::int64_t dy = 0; dy + dx <= 12; ++dy) {
            for (std::int64_t b = -3; b <= 3; ++b) {
                const LatticePoint from{0, b};
                const LatticePoint to{dx, b + dy};
                REQUIRE(count_free(from, to) == enumerate(from, to, -100, 100));
                if (b >= 0 && b + dy >= dx) REQUIRE(count_above_diagonal(from, to) == enumerate(from, to, 0, 100));
                for (std::int64_t s = -4; s <= 4; ++s) {
                    for (std::int64_t t = s; t <= 4; ++t) {
                        REQUIRE(count_banded(from, to, PathBand(s, t)) == enumerate(from, to, s, t));
                    }
                }
            }
        }
    }
}

TEST_CASE("a band wider than any deviation counts all paths") {
    for (std::int64_t dx = 0; dx <= 10; ++dx) {
        for (std::int64_t dy = 0; dy <= 10; ++dy) {
            CHECK(count_banded({0, 0}, {dx, dy}, PathBand(-dx - 1, dy + 1)) == count_free({0, 0}, {dx, dy}));
        }
    }
}

TEST_CASE("trigonometric and reflection counts agree on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, 40)(rng);
        const std::int64_t dx = std::uniform_int_distribution<std::int64_t>(0, n)(rng);
        const std::int64_t s = std::uniform_int_distribution<std::int64_t>(-8, 0)(rng);
        const std::int64_t t = std::uniform_int_distribution<std::int64_t>(0, 8)(rng);
        const std::int64_t b = std::uniform_int_distribution<std::int64_t>(s, t)(rng);
        const LatticePoint from{0, b};
        const LatticePoint to{dx, b + n - dx};
        const double exact = count_banded(from, to, PathBand(s, t)).convert_to<double>();
        const double trig = count_banded_trig(from, to, PathBand(s, t));
        REQUIRE(std::abs(trig - exact) <= 1e-9 * std::max(1.0, exact));
    }
}

TEST_CASE("word paths and width") {
    const auto p = path_of_word(BitWord::parse("10011111"), 4);
    CHECK(p.front() == LatticePoint{0, 2});
    CHECK(p.back() == LatticePoint{6, 4});
    CHECK(width(p) == 5);

    const auto zeros = path_of_word(BitWord::parse("0000"), 2);
    CHECK(zeros.front() == LatticePoint{0, -2});
    CHECK(zeros.back() == LatticePoint{0, 2});

    const auto q = path_of_word(BitWord::parse("0101"), 2);
    CHECK(q == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
    CHECK(width(q) == 1);
    const std::vector<LatticePoint> single{{3, 3}};
    CHECK(width(single) == 0);
}

TEST_CASE("path width is one less than the gamma set size") {
    for (std::size_t n = 2; n <= 12; n += 2) {
        const auto m = n / 2;
        for (int q = 0; q <= 2 && static_cast<std::size_t>(q) <= m; ++q) {
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                const BitWord c = BitWord::from_uint(v, n);
                if (weight(c) != m + static_cast<std::size_t>(q)) continue;
                REQUIRE(width(path_of_word(c, static_cast<std::int64_t>(m))) + 1 ==
                        static_cast<std::int64_t>(gamma_set_a(c, q).size()));
            }
        }
    }
}

TEST_CASE("shared-row counter matches direct counts") {
    const BandedPathCounter counter(20);
    for (std::int64_t dx = 0; dx <= 20; ++dx) {
        for (std::int64_t s = -5; s <= 0; ++s) {
            CHECK(counter.count({0, 0}, {dx, 20 - dx}, PathBand(s, 5)) == count_banded({0, 0}, {dx, 20 - dx}, PathBand(s, 5)));
        }
    }
    CHECK_THROWS_AS(counter.count({0, 0}, {1, 1}, PathBand(-1, 1)), DomainError);
}
