#include "vlbal/scheme_c.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "vlbal/errors.hpp"

namespace vlbal {
namespace {

std::size_t half_of(const BitWord& x) {
    if (x.size() % 2 == 0) throw DomainError("cyclic balancing needs odd length 2m - 1");
    return (x.size() + 1) / 2;
}

}  // namespace

BitWord flip_c(const BitWord& x) { return flip_prefix(x, half_of(x)); }

std::vector<std::size_t> t_c(const BitWord& x) {
    const std::size_t m = half_of(x);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const std::size_t wt = weight(flip_c(cyclic_shift(x, static_cast<std::int64_t>(j))));
        if (wt == m - 1 || wt == m) out.push_back(j);
    }
    return out;
}

std::size_t gamma_size_c(const BitWord& c) {
    const std::size_t m = half_of(c);
    const std::size_t wt = weight(c);
    if (wt != m - 1 && wt != m) throw DomainError("word weight must be m - 1 or m");
    const auto cr = cyclic_running_sum(c);
    for (std::size_t j = 1; j < m; ++j) {
        if (cr[j] == 0) return j;
    }
    return m;
}

std::vector<std::size_t> gamma_set_c(const BitWord& c) {
    std::vector<std::size_t> out(gamma_size_c(c));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = j;
    return out;
}

EncodeResult encode_c(const CyclicCode& code, const BitWord& x) {
    if (!code.contains(x)) throw DomainError("word is not a codeword");
    const std::size_t m = half_of(x);
    const auto shifts = t_c(x);
    if (shifts.empty()) throw std::logic_error("codeword has no balancing shift");

    EncodeResult out;
    out.tau = shifts.front();
    const BitWord c = flip_c(cyclic_shift(x, static_cast<std::int64_t>(out.tau)));
    out.codeword = c;
    out.codeword.append(weight(c) == m - 1);
    out.prefix = encode_field(out.tau, bits_for(gamma_size_c(c)));
    return out;
}

BitWord decode_c(const CyclicCode& code, const BitWord& cprime, const BitWord& p) {
    if (cprime.size() != code.length() + 1) throw DecodeError("balanced word length must be code length + 1");
    const std::size_t m = cprime.size() / 2;
    if (weight(cprime) != m) throw DecodeError("balanced word must have weight n/2");
    const BitWord c = cprime.prefix(code.length());
    const std::size_t size = gamma_size_c(c);
    const std::size_t width = bits_for(size);
    if (p.size() != width) throw DecodeError("prefix length mismatch");
    const std::uint64_t tau = decode_field(p, 0, width);
    if (tau >= size) throw DecodeError("shift exceeds gamma set size");
    BitWord x = cyclic_shift(flip_c(c), -static_cast<std::int64_t>(tau));
    if (!code.contains(x)) throw DecodeError("decoded word is not a codeword");
    return x;
}

std::vector<BitWord> build_balanced_code(const CyclicCode& code) {
    std::set<BitWord> book;
    code.for_each_codeword([&](const BitWord& x) { book.insert(encode_c(code, x).codeword); });
    return {book.begin(), book.end()};
}

std::vector<BigCount> gamma_distribution_fullspace(int n) {
    check_length_and_q(static_cast<std::size_t>(n), 0);
    const int m = n / 2;
    std::vector<BigCount> central(static_cast<std::size_t>(m) + 1);
    central[0] = 1;
    for (int j = 0; j < m; ++j) {
        central[static_cast<std::size_t>(j) + 1] = central[static_cast<std::size_t>(j)] * (2 * j + 1) * (2 * j + 2) / ((j + 1) * (j + 1));
    }
    std::vector<BigCount> gamma(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        gamma[static_cast<std::size_t>(i)] = 2 * central[static_cast<std::size_t>(i - 1)] * central[static_cast<std::size_t>(m - i)] / i;
    }
    return gamma;
}

BigCount gamma_count_fullspace(int i, int n) {
    const auto gamma = gamma_distribution_fullspace(n);
    if (i < 1 || static_cast<std::size_t>(i) >= gamma.size()) return 0;
    return gamma[static_cast<std::size_t>(i)];
}

double rho_c_fullspace(int n) {
    const auto gamma = gamma_distribution_fullspace(n);
    double sum = 0.0;
    for (std::size_t i = 2; i < gamma.size(); ++i) sum += ratio_pow2(gamma[i] * i, n - 1) * std::log2(static_cast<double>(i));
    return 1.0 + sum;
}

BalancedCodebook::BalancedCodebook(std::vector<BitWord> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    int best = std::numeric_limits<int>::max();
    for (std::size_t a = 0; a < words_.size(); ++a) {
        for (std::size_t b = a + 1; b < words_.size(); ++b) best = std::min(best, static_cast<int>(hamming_distance(words_[a], words_[b])));
    }
    distance_ = words_.size() > 1 ? best : 0;
}

BalancedCodebook BalancedCodebook::from_code(const CyclicCode& code) { return BalancedCodebook(build_balanced_code(code)); }

BitWord BalancedCodebook::correct(const BitWord& received, TieBreak ties) const {
    if (words_.empty()) throw DecodeError("empty codebook");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t hits = 0;
    const BitWord* winner = nullptr;
    for (const auto& w : words_) {
        const std::size_t d = hamming_distance(w, received);
        if (d < best) {
            best = d;
            hits = 1;
            winner = &w;
        } else if (d == best) {
            ++hits;
        }
    }
    if (hits > 1 && ties == TieBreak::Error) {
        throw DecodeError("ambiguous block: " + std::to_string(hits) + " codewords at distance " + std::to_string(best));
    }
    return *winner;
}

BitWord correct_block(const CyclicCode& code, const BitWord& received) {
    return BalancedCodebook::from_code(code).correct(received);
}

}  // namespace vlbal
