#pragma once

#include <cstddef>
#include <vector>

#include "vlbal/bigcount.hpp"
#include "vlbal/bitword.hpp"
#include "vlbal/codec.hpp"

namespace vlbal {

// Length-(n-1) messages to weight n/2 + q codewords of length n: flip to
// weight m+q-1 or m+q, then append one bit completing the weight.
// Prefix layout matches Scheme A with a bad-word tail of bad_run bits.
struct SchemeBParams {
    std::size_t n = 0;
    int q = 0;
    // Bits replaced by a constant run when a message is bad.
    std::size_t bad_run = 0;

    static SchemeBParams standard(std::size_t n, int q);
};

std::vector<std::size_t> t_b(const BitWord& x, int q);
Classification classify_b(const BitWord& x, int q);
Classification classify_b(const BitWord& x, const SchemeBParams& params);

// For weight m+q-1: 0 plus strict new maxima of the running sum;
// for weight m+q: 0 plus strict new minima.
std::vector<std::size_t> gamma_set_b(const BitWord& c, int q);

EncodeResult encode_b(const BitWord& x, int q);
EncodeResult encode_b(const BitWord& x, const SchemeBParams& params);
BitWord decode_b(const BitWord& c, const BitWord& p, std::size_t n, int q);
BitWord decode_b(const BitWord& c, const BitWord& p, const SchemeBParams& params);

// Length-(n-1) words bad for q.
BigCount count_bad_b(int n, int q);

// Length-(n-1) words of weight m+q-1 or m+q whose gamma set has size i.
BigCount gamma_count_b(int i, int n, int q);
// Entry i holds gamma_count_b(i, n, q); entry 0 is zero.
std::vector<BigCount> gamma_distribution_b(int n, int q);

BoundTerms rho_b_terms(int n, int q, LogConvention convention = LogConvention::Real);
double rho_b(int n, int q);
// Same bound with the length-n Scheme A bad count in the bad-word term.
double rho_b_table_convention(int n, int q);
// Floating-point evaluation for large n: log-gamma binomials, trig bad count.
double rho_b_logspace(int n, int q);

// 1 + beta, the constant offset of the q = 0 redundancy over log2(n)/2.
double asymptote_offset();
double rho_b_asymptote(int n, int q);

}  // namespace vlbal
