#pragma once

#include <cstddef>
#include <vector>

#include "vlbal/bigcount.hpp"
#include "vlbal/bitword.hpp"
#include "vlbal/codec.hpp"

namespace vlbal {

// Length-n messages to weight n/2 + q codewords with a variable-length prefix.
//
// Prefix layout for q > 0:
//   good: [0][type bit][rank of tau in gamma_set_a(c)]
//   bad:  [1][type bit][rank][last 2q message bits]
// For q = 0 every word is Type1Good and the prefix is the rank alone.

Classification classify(const BitWord& x, int q);

// Indices j with flip_prefix(c, j) encoding to c: 0 plus every strict new
// maximum or minimum of the running sum. Ascending.
std::vector<std::size_t> gamma_set_a(const BitWord& c, int q);

EncodeResult encode_a(const BitWord& x, int q);
BitWord decode_a(const BitWord& c, const BitWord& p, std::size_t n, int q);

// Number of length-n words that are bad for q.
BigCount count_bad(int n, int q);

// Number of weight n/2 + q words whose gamma set has size i.
BigCount gamma_count_a(int i, int n, int q);
// Entry i holds gamma_count_a(i, n, q) for i = 1..n+1; entry 0 is zero.
std::vector<BigCount> gamma_distribution_a(int n, int q);

BoundTerms rho_a_terms(int n, int q, LogConvention convention = LogConvention::Real);
double rho_a_bound(int n, int q);

}  // namespace vlbal
