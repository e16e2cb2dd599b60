#include "vlbal/scheme_a.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "vlbal/errors.hpp"
#include "vlbal/lattice.hpp"

namespace vlbal {
namespace {

constexpr int kMaxAnalyticLength = 4096;

void check_analytic(int n, int q) {
    if (n > kMaxAnalyticLength) throw CapacityError("exact Scheme A analysis limited to n <= 4096");
    check_length_and_q(static_cast<std::size_t>(n), q);
}

std::size_t target_weight(std::size_t n, int q) { return n / 2 + static_cast<std::size_t>(q); }

}  // namespace

Classification classify(const BitWord& x, int q) {
    check_length_and_q(x.size(), q);
    if (q == 0) return Classification::Type1Good;
    const std::size_t target = target_weight(x.size(), q);
    if (first_index_reaching_weight(x, target)) return Classification::Type1Good;
    if (first_index_reaching_weight(complement(x), target)) return Classification::Type0Good;
    const std::size_t m = x.size() / 2;
    const BitWord head = x.prefix(x.size() - 2 * static_cast<std::size_t>(q));
    return weight(head) <= m - static_cast<std::size_t>(q) ? Classification::Type0Bad : Classification::Type1Bad;
}

std::vector<std::size_t> gamma_set_a(const BitWord& c, int q) {
    check_length_and_q(c.size(), q);
    if (weight(c) != target_weight(c.size(), q)) throw DomainError("codeword weight must be n/2 + q");
    const auto r = running_sum(c);
    std::vector<std::size_t> out{0};
    int hi = 0;
    int lo = 0;
    for (std::size_t j = 1; j < r.size(); ++j) {
        if (r[j] > hi) {
            hi = r[j];
            out.push_back(j);
        } else if (r[j] < lo) {
            lo = r[j];
            out.push_back(j);
        }
    }
    return out;
}

EncodeResult encode_a(const BitWord& x, int q) {
    const Classification cls = classify(x, q);
    const std::size_t n = x.size();
    const auto tail = 2 * static_cast<std::size_t>(q);

    BitWord xhat;
    switch (cls) {
        case Classification::Type1Good: xhat = x; break;
        case Classification::Type0Good: xhat = complement(x); break;
        case Classification::Type1Bad:
        case Classification::Type0Bad:
            xhat = x.prefix(n - tail) + BitWord::repeat(type_bit(cls), tail);
            break;
    }

    const auto tau = first_index_reaching_weight(xhat, target_weight(n, q));
    if (!tau) throw std::logic_error("replacement word has no balancing index");

    EncodeResult out;
    out.codeword = flip_prefix(xhat, *tau);
    out.classification = cls;
    out.tau = *tau;

    const auto gamma = gamma_set_a(out.codeword, q);
    const auto rank = static_cast<std::uint64_t>(std::find(gamma.begin(), gamma.end(), *tau) - gamma.begin());
    if (q > 0) {
        out.prefix.append(is_bad(cls));
        out.prefix.append(type_bit(cls));
    }
    out.prefix.append(encode_field(rank, bits_for(gamma.size())));
    if (is_bad(cls)) out.prefix.append(x.suffix(tail));
    return out;
}

BitWord decode_a(const BitWord& c, const BitWord& p, std::size_t n, int q) {
    check_length_and_q(n, q);
    if (c.size() != n) throw DecodeError("codeword length differs from n");
    if (weight(c) != target_weight(n, q)) throw DecodeError("codeword weight must be n/2 + q");

    const auto gamma = gamma_set_a(c, q);
    const std::size_t width = bits_for(gamma.size());
    const auto tail = 2 * static_cast<std::size_t>(q);

    std::size_t pos = 0;
    bool bad = false;
    bool type = true;
    if (q > 0) {
        if (p.size() < 2) throw DecodeError("prefix too short");
        bad = p[0];
        type = p[1];
        pos = 2;
    }
    const std::uint64_t rank = decode_field(p, pos, width);
    pos += width;
    if (rank >= gamma.size()) throw DecodeError("rank exceeds gamma set size");
    if (p.size() != pos + (bad ? tail : 0)) throw DecodeError("prefix length mismatch");

    const BitWord xhat = flip_prefix(c, gamma[rank]);
    if (bad) return xhat.prefix(n - tail) + p.suffix(tail);
    return type ? xhat : complement(xhat);
}

BigCount count_bad(int n, int q) {
    check_analytic(n, q);
    if (q == 0) return 0;
    const std::int64_t m = n / 2;
    const PathBand band(-q + 1, q - 1);
    const BandedPathCounter counter(n);
    BigCount total = 0;
    for (std::int64_t y = 1 - q; y <= q - 1; ++y) total += counter.count({0, y}, {m + y, m}, band);
    return total;
}

std::vector<BigCount> gamma_distribution_a(int n, int q) {
    check_analytic(n, q);
    const std::int64_t m = n / 2;
    const LatticePoint from{0, q};
    const LatticePoint to{m + q, m};
    const BandedPathCounter counter(n);
    std::map<std::pair<std::int64_t, std::int64_t>, BigCount> memo;
    auto banded = [&](std::int64_t s, std::int64_t t) -> BigCount {
        if (s > t) return 0;
        auto [it, fresh] = memo.try_emplace({s, t});
        if (fresh) it->second = counter.count(from, to, PathBand(s, t));
        return it->second;
    };

    std::vector<BigCount> gamma(static_cast<std::size_t>(n) + 2);
    for (std::int64_t i = 1; i <= n + 1; ++i) {
        BigCount sum = 0;
        for (std::int64_t t = q; t <= i - 1 - q; ++t) {
            const std::int64_t s = t - i + 1;
            sum += banded(s, t);
            sum -= banded(s + 1, t);
            sum -= banded(s, t - 1);
            sum += banded(s + 1, t - 1);
        }
        gamma[static_cast<std::size_t>(i)] = sum;
    }
    return gamma;
}

BigCount gamma_count_a(int i, int n, int q) {
    check_analytic(n, q);
    if (i < 1 || i > n + 1) return 0;
    return gamma_distribution_a(n, q)[static_cast<std::size_t>(i)];
}

BoundTerms rho_a_terms(int n, int q, LogConvention convention) {
    const auto gamma = gamma_distribution_a(n, q);
    auto lg = [convention](double v) { return convention == LogConvention::Real ? std::log2(v) : std::ceil(std::log2(v)); };

    BoundTerms terms;
    for (std::size_t i = 2; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        terms.good_term += ratio_pow2(gamma[i] * i, n) * lg(static_cast<double>(i));
    }
    if (q > 0) {
        terms.fixed_bits = 2.0;
        const double overhead = convention == LogConvention::Real ? std::log2(static_cast<double>(n))
                                                                  : std::ceil(std::log2(static_cast<double>(n + 1)));
        terms.bad_term = ratio_pow2(count_bad(n, q), n) * (2.0 * q + overhead);
    }
    return terms;
}

double rho_a_bound(int n, int q) { return rho_a_terms(n, q).total(); }

}  // namespace vlbal
