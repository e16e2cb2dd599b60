#pragma once

#include <cstddef>
#include <vector>

#include "vlbal/bigcount.hpp"
#include "vlbal/bitword.hpp"
#include "vlbal/codec.hpp"
#include "vlbal/cyclic_code.hpp"

namespace vlbal {

// Cyclic balancing over a cyclic code of odd length 2m-1. A codeword x is
// shifted right by tau, its first m bits are complemented, and one bit is
// appended so the length-2m result has weight m. The prefix is tau in
// ceil(log2 gamma_size_c(c)) bits.

// Complements the first m symbols of a length-(2m-1) word.
BitWord flip_c(const BitWord& x);
// Shifts j in [0, len) with weight(flip_c(cyclic_shift(x, j))) in {m-1, m}.
std::vector<std::size_t> t_c(const BitWord& x);
// First j >= 1 with CR_j = 0, else m.
std::size_t gamma_size_c(const BitWord& c);
std::vector<std::size_t> gamma_set_c(const BitWord& c);

EncodeResult encode_c(const CyclicCode& code, const BitWord& x);
BitWord decode_c(const CyclicCode& code, const BitWord& cprime, const BitWord& p);

// Distinct encoder outputs over the whole code, sorted.
std::vector<BitWord> build_balanced_code(const CyclicCode& code);

// Full space of length n-1: entry i = words whose gamma size is i.
std::vector<BigCount> gamma_distribution_fullspace(int n);
BigCount gamma_count_fullspace(int i, int n);
double rho_c_fullspace(int n);

enum class TieBreak { Error, Lexicographic };

// Nearest-codeword correction over a balanced codebook.
class BalancedCodebook {
public:
    explicit BalancedCodebook(std::vector<BitWord> words);
    static BalancedCodebook from_code(const CyclicCode& code);

    const std::vector<BitWord>& words() const { return words_; }
    int min_distance() const { return distance_; }
    // Errors guaranteed correctable: floor((d - 1) / 2).
    int radius() const { return distance_ > 0 ? (distance_ - 1) / 2 : 0; }

    // Ties between nearest codewords throw DecodeError under TieBreak::Error.
    BitWord correct(const BitWord& received, TieBreak ties = TieBreak::Error) const;

private:
    std::vector<BitWord> words_;
    int distance_ = 0;
};

BitWord correct_block(const CyclicCode& code, const BitWord& received);

}  // namespace vlbal
