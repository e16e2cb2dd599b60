#include "vlbal/lattice.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vlbal/errors.hpp"

namespace vlbal {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_monotone(LatticePoint from, LatticePoint to) {
    if (to.x < from.x || to.y < from.y) throw DomainError("lattice path needs nonnegative displacement");
}

// Reflection sum over all images of the end point in the two boundary lines.
template <class Binom>
BigCount reflect(LatticePoint from, LatticePoint to, const PathBand& band, const Binom& binom) {
    check_monotone(from, to);
    if (!band.contains(from) || !band.contains(to)) return 0;
    const std::int64_t dx = to.x - from.x;
    const std::int64_t n = dx + (to.y - from.y);
    const std::int64_t h = band.height();
    const std::int64_t mirrored = to.x - from.y + band.upper() + 1;
    const std::int64_t lo = floor_div(std::min(dx, mirrored) - n, h) - 1;
    const std::int64_t hi = floor_div(std::max(dx, mirrored), h) + 1;
    BigCount total = 0;
    for (std::int64_t k = lo; k <= hi; ++k) {
        total += binom(n, dx - k * h);
        total -= binom(n, mirrored - k * h);
    }
    return total;
}

// Fraction of all 2^steps step sequences that form a path inside the band.
// The sum cancels heavily when that fraction is tiny, so callers needing
// full double accuracy instantiate it with an extended-precision type.
template <class Real>
Real trig_fraction(LatticePoint from, LatticePoint to, const PathBand& band) {
    using std::cos;
    using std::pow;
    using std::sin;
    check_monotone(from, to);
    if (!band.contains(from) || !band.contains(to)) return Real(0);
    const std::int64_t n = (to.x - from.x) + (to.y - from.y);
    if (n == 0) return Real(1);
    const std::int64_t h = band.height();
    const Real u = Real(from.x - from.y + band.upper() + 1);
    const Real v = Real(to.x - to.y + band.upper() + 1);
    const Real pi = boost::math::constants::pi<Real>();
    Real sum = 0;
    for (std::int64_t k = 1; k < h; ++k) {
        const Real a = pi * Real(k) / Real(h);
        sum += pow(cos(a), static_cast<int>(n)) * sin(a * u) * sin(a * v);
    }
    return Real(2) * sum / Real(h);
}

}  // namespace

PathBand::PathBand(std::int64_t lower, std::int64_t upper) : lower_(lower), upper_(upper) {
    if (lower > upper) throw DomainError("band needs lower <= upper");
}

bool PathBand::contains(LatticePoint p) const {
    const std::int64_t off = p.y - p.x;
    return lower_ <= off && off <= upper_;
}

BigCount count_free(LatticePoint from, LatticePoint to) {
    check_monotone(from, to);
    const std::int64_t dx = to.x - from.x;
    return binomial(dx + (to.y - from.y), dx);
}

BigCount count_banded(LatticePoint from, LatticePoint to, const PathBand& band) {
    return reflect(from, to, band, [](std::int64_t n, std::int64_t k) { return binomial(n, k); });
}

double banded_fraction_trig(LatticePoint from, LatticePoint to, const PathBand& band) {
    return trig_fraction<double>(from, to, band);
}

double count_banded_trig(LatticePoint from, LatticePoint to, const PathBand& band) {
    const std::int64_t n = (to.x - from.x) + (to.y - from.y);
    const auto fraction = trig_fraction<boost::multiprecision::cpp_bin_float_50>(from, to, band);
    return static_cast<double>(ldexp(fraction, static_cast<int>(n)));
}

BigCount count_above_diagonal(LatticePoint from, LatticePoint to) {
    check_monotone(from, to);
    if (from.y < from.x || to.y < to.x) throw DomainError("endpoints must lie on or above Y = X");
    const std::int64_t dx = to.x - from.x;
    const std::int64_t n = dx + (to.y - from.y);
    return binomial(n, dx) - binomial(n, to.y - from.x + 1);
}

BandedPathCounter::BandedPathCounter(std::int64_t steps) : row_(steps) {}

BigCount BandedPathCounter::count(LatticePoint from, LatticePoint to, const PathBand& band) const {
    if ((to.x - from.x) + (to.y - from.y) != row_.n()) throw DomainError("path length differs from counter");
    return reflect(from, to, band, [this](std::int64_t, std::int64_t k) -> const BigCount& { return row_(k); });
}

std::vector<LatticePoint> path_of_word(const BitWord& w, std::int64_t half_length) {
    std::vector<LatticePoint> path;
    path.reserve(w.size() + 1);
    LatticePoint p{0, static_cast<std::int64_t>(weight(w)) - half_length};
    path.push_back(p);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i]) ++p.x; else ++p.y;
        path.push_back(p);
    }
    return path;
}

std::int64_t width(std::span<const LatticePoint> path) {
    if (path.empty()) return 0;
    std::int64_t lo = path.front().y - path.front().x;
    std::int64_t hi = lo;
    for (const auto& p : path) {
        lo = std::min(lo, p.y - p.x);
        hi = std::max(hi, p.y - p.x);
    }
    return hi - lo;
}

}  // namespace vlbal
