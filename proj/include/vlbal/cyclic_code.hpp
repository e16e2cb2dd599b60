#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vlbal/bitword.hpp"

namespace vlbal {

// Polynomial over GF(2); coefficient i multiplies X^i.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::vector<std::uint8_t> coefficients);

    // "1,0,1,1,1" or "10111", lowest degree first.
    static Gf2Poly parse(std::string_view text);
    // X^n - 1 (= X^n + 1 over GF(2)).
    static Gf2Poly cyclic_modulus(std::size_t n);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool coefficient(std::size_t i) const { return i < coef_.size() && coef_[i]; }
    bool is_zero() const { return coef_.empty(); }

    friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    // Quotient and remainder of a / b.
    static std::pair<Gf2Poly, Gf2Poly> divide(const Gf2Poly& a, const Gf2Poly& b);

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

    // "1+X^2+X^3+X^4".
    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint8_t> coef_;
};

// Binary cyclic [n, k] code. Word position p (1-based) carries the
// coefficient of X^(p-1); systematic messages occupy positions 1..k.
class CyclicCode {
public:
    static constexpr std::size_t kMaxEnumerationDimension = 24;
    static constexpr std::size_t kMaxRedundancy = 64;

    static CyclicCode from_generator(std::size_t n, const Gf2Poly& generator);
    // The whole space {0,1}^n, generator 1, no parity checks.
    static CyclicCode full_space(std::size_t n);

    // Replaces the derived parity-check matrix; rows must be independent
    // and orthogonal to the code.
    CyclicCode with_parity_rows(const std::vector<BitWord>& rows) const;

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    std::size_t redundancy() const { return n_ - k_; }
    const Gf2Poly& generator() const { return generator_; }
    const std::vector<BitWord>& parity_rows() const { return parity_rows_; }
    // Column h_{index+1} of the parity-check matrix; bit r is row r.
    std::uint64_t parity_column(std::size_t index) const { return columns_[index]; }

    BitWord encode_systematic(const BitWord& message) const;
    std::uint64_t syndrome(const BitWord& w) const;
    bool contains(const BitWord& w) const;

    // Enumeration, guarded by kMaxEnumerationDimension.
    std::vector<BitWord> codewords() const;
    void for_each_codeword(const std::function<void(const BitWord&)>& visit) const;
    // Computed once on first request and shared by copies.
    int min_distance() const;

private:
    CyclicCode() = default;
    void set_parity_rows(std::vector<BitWord> rows);
    void check_enumerable() const;

    struct DistanceCache;

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Gf2Poly generator_;
    std::vector<BitWord> basis_;
    std::vector<BitWord> parity_rows_;
    std::vector<std::uint64_t> columns_;
    std::shared_ptr<DistanceCache> distance_;
};

// Key = value text: n, k, generator, optional parity_row_1..parity_row_{n-k}.
// '#' starts a comment.
CyclicCode parse_code_spec(std::string_view text);
CyclicCode load_code_spec(const std::string& path);

}  // namespace vlbal
