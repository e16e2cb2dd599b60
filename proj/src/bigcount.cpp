#include "vlbal/bigcount.hpp"

#include <cmath>
#include <limits>

#include "vlbal/errors.hpp"

namespace vlbal {

BigCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BinomialRow::BinomialRow(std::int64_t n) : n_(n) {
    if (n < 0) throw DomainError("binomial row needs n >= 0");
    row_.reserve(static_cast<std::size_t>(n) + 1);
    BigCount c = 1;
    row_.push_back(c);
    for (std::int64_t j = 0; j < n; ++j) {
        c *= n - j;
        c /= j + 1;
        row_.push_back(c);
    }
}

const BigCount& BinomialRow::operator()(std::int64_t k) const {
    if (k < 0 || k > n_) return zero_;
    return row_[static_cast<std::size_t>(k)];
}

double ratio_pow2(const BigCount& value, std::int64_t exponent) {
    if (value == 0) return 0.0;
    if (value < 0) return -ratio_pow2(-value, exponent);
    const std::int64_t top = static_cast<std::int64_t>(boost::multiprecision::msb(value));
    if (top < 60) return std::ldexp(value.convert_to<double>(), static_cast<int>(-exponent));
    const std::int64_t drop = top - 60;
    const BigCount head = value >> static_cast<unsigned>(drop);
    return std::ldexp(head.convert_to<double>(), static_cast<int>(drop - exponent));
}

double log2_big(const BigCount& value) {
    if (value <= 0) return -std::numeric_limits<double>::infinity();
    const std::int64_t top = static_cast<std::int64_t>(boost::multiprecision::msb(value));
    return std::log2(ratio_pow2(value, top)) + static_cast<double>(top);
}

double log_binomial(double n, double k) {
    if (k < 0 || k > n || n < 0) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

std::string to_string(const BigCount& value) { return value.str(); }

}  // namespace vlbal
