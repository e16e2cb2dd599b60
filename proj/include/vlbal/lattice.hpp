#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vlbal/bigcount.hpp"
#include "vlbal/bitword.hpp"

namespace vlbal {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Region lower <= Y - X <= upper between the lines Y = X + lower and Y = X + upper.
class PathBand {
public:
    PathBand(std::int64_t lower, std::int64_t upper);

    std::int64_t lower() const { return lower_; }
    std::int64_t upper() const { return upper_; }
    std::int64_t height() const { return upper_ - lower_ + 2; }
    bool contains(LatticePoint p) const;

private:
    std::int64_t lower_;
    std::int64_t upper_;
};

// Monotone paths of unit right/up steps.
BigCount count_free(LatticePoint from, LatticePoint to);
// Paths staying inside the band; 0 when an endpoint lies outside it.
BigCount count_banded(LatticePoint from, LatticePoint to, const PathBand& band);
// Same count via the trigonometric sum; floating point cross-check.
double count_banded_trig(LatticePoint from, LatticePoint to, const PathBand& band);
// Same sum divided by 2^(steps) in double precision, for long paths.
double banded_fraction_trig(LatticePoint from, LatticePoint to, const PathBand& band);
// Paths never dropping below Y = X; both endpoints must satisfy y >= x.
BigCount count_above_diagonal(LatticePoint from, LatticePoint to);

// Banded counts for many endpoint pairs with the same number of steps.
class BandedPathCounter {
public:
    explicit BandedPathCounter(std::int64_t steps);

    std::int64_t steps() const { return row_.n(); }
    BigCount count(LatticePoint from, LatticePoint to, const PathBand& band) const;

private:
    BinomialRow row_;
};

// Word-to-path map: start (0, wt(w) - half_length), 0 steps up, 1 steps right.
std::vector<LatticePoint> path_of_word(const BitWord& w, std::int64_t half_length);
// max(Y - X) - min(Y - X) over the path.
std::int64_t width(std::span<const LatticePoint> path);

}  // namespace vlbal
