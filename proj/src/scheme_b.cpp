#include "vlbal/scheme_b.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vlbal/errors.hpp"
#include "vlbal/lattice.hpp"
#include "vlbal/scheme_a.hpp"

namespace vlbal {
namespace {

constexpr int kMaxExactLength = 4096;

struct Targets {
    std::size_t low;
    std::size_t high;
};

Targets targets(std::size_t n, int q) {
    const std::size_t m = n / 2;
    const auto uq = static_cast<std::size_t>(q);
    return {m + uq - 1, m + uq};
}

void check_message(const BitWord& x, const SchemeBParams& params) {
    check_length_and_q(params.n, params.q);
    if (x.size() != params.n - 1) throw DomainError("message length must be n - 1");
    if (params.bad_run > params.n - 1) throw DomainError("bad-word run longer than message");
}

std::optional<std::size_t> first_target_index(const BitWord& x, Targets tg) {
    auto wt = static_cast<std::int64_t>(weight(x));
    for (std::size_t j = 0;; ++j) {
        if (wt == static_cast<std::int64_t>(tg.low) || wt == static_cast<std::int64_t>(tg.high)) return j;
        if (j == x.size()) return std::nullopt;
        wt += x[j] ? -1 : 1;
    }
}

}  // namespace

SchemeBParams SchemeBParams::standard(std::size_t n, int q) {
    check_length_and_q(n, q);
    return {n, q, q >= 1 ? static_cast<std::size_t>(2 * q - 2) : 0};
}

std::vector<std::size_t> t_b(const BitWord& x, int q) {
    const std::size_t n = x.size() + 1;
    check_length_and_q(n, q);
    const Targets tg = targets(n, q);
    auto low = indices_reaching_weight(x, tg.low);
    auto high = indices_reaching_weight(x, tg.high);
    std::vector<std::size_t> out;
    std::merge(low.begin(), low.end(), high.begin(), high.end(), std::back_inserter(out));
    return out;
}

Classification classify_b(const BitWord& x, int q) { return classify_b(x, SchemeBParams::standard(x.size() + 1, q)); }

Classification classify_b(const BitWord& x, const SchemeBParams& params) {
    check_message(x, params);
    if (params.q == 0) return Classification::Type1Good;
    const Targets tg = targets(params.n, params.q);
    if (first_target_index(x, tg)) return Classification::Type1Good;
    if (first_target_index(complement(x), tg)) return Classification::Type0Good;
    const std::size_t m = params.n / 2;
    const BitWord head = x.prefix(x.size() - params.bad_run);
    return weight(head) <= m - static_cast<std::size_t>(params.q) ? Classification::Type0Bad : Classification::Type1Bad;
}

std::vector<std::size_t> gamma_set_b(const BitWord& c, int q) {
    const std::size_t n = c.size() + 1;
    check_length_and_q(n, q);
    const Targets tg = targets(n, q);
    const std::size_t wt = weight(c);
    if (wt != tg.low && wt != tg.high) throw DomainError("word weight must be n/2 + q - 1 or n/2 + q");
    const bool rising = wt == tg.low;
    const auto r = running_sum(c);
    std::vector<std::size_t> out{0};
    int record = 0;
    for (std::size_t j = 1; j < c.size() + 1; ++j) {
        if (rising ? r[j] > record : r[j] < record) {
            record = r[j];
            out.push_back(j);
        }
    }
    return out;
}

EncodeResult encode_b(const BitWord& x, int q) { return encode_b(x, SchemeBParams::standard(x.size() + 1, q)); }

EncodeResult encode_b(const BitWord& x, const SchemeBParams& params) {
    const Classification cls = classify_b(x, params);
    const Targets tg = targets(params.n, params.q);

    BitWord xhat;
    switch (cls) {
        case Classification::Type1Good: xhat = x; break;
        case Classification::Type0Good: xhat = complement(x); break;
        case Classification::Type1Bad:
        case Classification::Type0Bad:
            xhat = x.prefix(x.size() - params.bad_run) + BitWord::repeat(type_bit(cls), params.bad_run);
            break;
    }

    const auto tau = first_target_index(xhat, tg);
    if (!tau) throw std::logic_error("replacement word has no balancing index");

    const BitWord c = flip_prefix(xhat, *tau);
    EncodeResult out;
    out.codeword = c;
    out.codeword.append(weight(c) == tg.low);
    out.classification = cls;
    out.tau = *tau;

    const auto gamma = gamma_set_b(c, params.q);
    const auto rank = static_cast<std::uint64_t>(std::find(gamma.begin(), gamma.end(), *tau) - gamma.begin());
    if (params.q > 0) {
        out.prefix.append(is_bad(cls));
        out.prefix.append(type_bit(cls));
    }
    out.prefix.append(encode_field(rank, bits_for(gamma.size())));
    if (is_bad(cls)) out.prefix.append(x.suffix(params.bad_run));
    return out;
}

BitWord decode_b(const BitWord& c, const BitWord& p, std::size_t n, int q) {
    return decode_b(c, p, SchemeBParams::standard(n, q));
}

BitWord decode_b(const BitWord& cprime, const BitWord& p, const SchemeBParams& params) {
    check_length_and_q(params.n, params.q);
    if (cprime.size() != params.n) throw DecodeError("codeword length differs from n");
    if (weight(cprime) != params.n / 2 + static_cast<std::size_t>(params.q)) {
        throw DecodeError("codeword weight must be n/2 + q");
    }
    const BitWord c = cprime.prefix(params.n - 1);
    const auto gamma = gamma_set_b(c, params.q);
    const std::size_t width = bits_for(gamma.size());

    std::size_t pos = 0;
    bool bad = false;
    bool type = true;
    if (params.q > 0) {
        if (p.size() < 2) throw DecodeError("prefix too short");
        bad = p[0];
        type = p[1];
        pos = 2;
    }
    const std::uint64_t rank = decode_field(p, pos, width);
    pos += width;
    if (rank >= gamma.size()) throw DecodeError("rank exceeds gamma set size");
    if (p.size() != pos + (bad ? params.bad_run : 0)) throw DecodeError("prefix length mismatch");

    const BitWord xhat = flip_prefix(c, gamma[rank]);
    if (bad) return xhat.prefix(xhat.size() - params.bad_run) + p.suffix(params.bad_run);
    return type ? xhat : complement(xhat);
}

BigCount count_bad_b(int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    if (n > kMaxExactLength) throw CapacityError("exact Scheme B analysis limited to n <= 4096");
    if (q <= 1) return 0;
    const std::int64_t m = n / 2;
    const PathBand band(-q + 1, q - 2);
    const BandedPathCounter counter(n - 1);
    BigCount total = 0;
    for (std::int64_t y = 1 - q; y <= q - 2; ++y) total += counter.count({0, y}, {m + y, m - 1}, band);
    return total;
}

std::vector<BigCount> gamma_distribution_b(int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    if (n > kMaxExactLength) throw CapacityError("exact Scheme B analysis limited to n <= 4096");
    const std::int64_t m = n / 2;
    const BinomialRow row(n - 1);
    std::vector<BigCount> gamma(static_cast<std::size_t>(m + q) + 1);
    for (std::int64_t i = 1; i <= m + q; ++i) {
        BigCount g = 0;
        if (i >= std::max<std::int64_t>(1, 2 * q)) g += row(m + i - q - 1) - row(m + i - q);
        if (i <= m - q) g += row(m + i + q - 1) - row(m + i + q);
        gamma[static_cast<std::size_t>(i)] = g;
    }
    return gamma;
}

BigCount gamma_count_b(int i, int n, int q) {
    const auto gamma = gamma_distribution_b(n, q);
    if (i < 1 || static_cast<std::size_t>(i) >= gamma.size()) return 0;
    return gamma[static_cast<std::size_t>(i)];
}

BoundTerms rho_b_terms(int n, int q, LogConvention convention) {
    const auto gamma = gamma_distribution_b(n, q);
    auto lg = [convention](double v) { return convention == LogConvention::Real ? std::log2(v) : std::ceil(std::log2(v)); };
    BoundTerms terms;
    terms.fixed_bits = q == 0 ? 1.0 : 3.0;
    for (std::size_t i = 2; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        terms.good_term += ratio_pow2(gamma[i] * i, n - 1) * lg(static_cast<double>(i));
    }
    if (q > 0) terms.bad_term = ratio_pow2(count_bad_b(n, q), n - 1) * (2.0 * q - 2.0 + lg(static_cast<double>(n)));
    return terms;
}

double rho_b(int n, int q) {
    if (n > kMaxExactLength) return rho_b_logspace(n, q);
    return rho_b_terms(n, q).total();
}

double rho_b_table_convention(int n, int q) {
    BoundTerms terms = rho_b_terms(n, q);
    if (q > 0) terms.bad_term = ratio_pow2(count_bad(n, q), n - 1) * (2.0 * q - 2.0 + std::log2(static_cast<double>(n)));
    return terms.total();
}

double rho_b_logspace(int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    const double m = n / 2;
    const double dn = n;
    const double scale = (dn - 1) * std::numbers::ln2;
    auto branch = [&](double i, double shift) {
        const double lead = 2 * i + 2 * shift;
        const double lb = log_binomial(dn, m + i + shift);
        if (lead <= 0 || !std::isfinite(lb)) return 0.0;
        return std::exp(std::log(lead / dn) + lb - scale);
    };
    double good = 0.0;
    for (int i = 2; i <= n / 2 + q; ++i) {
        double g = 0.0;
        if (i >= std::max(1, 2 * q)) g += branch(i, -q);
        if (i <= n / 2 - q) g += branch(i, q);
        good += g * i * std::log2(static_cast<double>(i));
    }
    if (q == 0) return 1.0 + good;

    const std::int64_t mm = n / 2;
    double bad = 0.0;
    if (q > 1) {
        const PathBand band(-q + 1, q - 2);
        for (std::int64_t y = 1 - q; y <= q - 2; ++y) bad += banded_fraction_trig({0, y}, {mm + y, mm - 1}, band);
    }
    return 3.0 + good + bad * (2.0 * q - 2.0 + std::log2(dn));
}

double asymptote_offset() {
    const double ln4 = 2.0 * std::numbers::ln2;
    const double beta = (2.0 - ln4 - std::numbers::egamma) / ln4 - 0.5;
    return 1.0 + beta;
}

double rho_b_asymptote(int n, int q) {
    return 0.5 * std::log2(static_cast<double>(n)) + asymptote_offset() + (q > 0 ? 2.0 : 0.0);
}

}  // namespace vlbal
