#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vlbal {

using BigCount = boost::multiprecision::cpp_int;

// C(n, k); zero when k < 0, k > n or n < 0.
BigCount binomial(std::int64_t n, std::int64_t k);

// All C(n, 0..n), reused when many coefficients share the same n.
class BinomialRow {
public:
    explicit BinomialRow(std::int64_t n);

    std::int64_t n() const { return n_; }
    const BigCount& operator()(std::int64_t k) const;

private:
    std::int64_t n_;
    std::vector<BigCount> row_;
    BigCount zero_{0};
};

// value / 2^exponent as a double, without overflowing on large values.
double ratio_pow2(const BigCount& value, std::int64_t exponent);

// log2(value) for value > 0.
double log2_big(const BigCount& value);

// Natural log of C(n, k) via lgamma; -inf outside the support.
double log_binomial(double n, double k);

std::string to_string(const BigCount& value);

}  // namespace vlbal
