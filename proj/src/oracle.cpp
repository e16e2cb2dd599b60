#include "vlbal/oracle.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "vlbal/errors.hpp"
#include "vlbal/scheme_a.hpp"
#include "vlbal/scheme_b.hpp"
#include "vlbal/scheme_c.hpp"
#include "vlbal/trellis.hpp"

namespace vlbal {
namespace {

void check_space(int bits) {
    if (bits > kMaxOracleBits) throw CapacityError("oracle message space limited to 2^22");
}

std::size_t message_length(SchemeId scheme, int n) {
    return scheme == SchemeId::A ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n - 1);
}

void for_each_word(std::size_t length, const std::function<void(const BitWord&)>& visit) {
    check_space(static_cast<int>(length));
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) visit(BitWord::from_uint(v, length));
}

bool has_index(SchemeId scheme, const BitWord& x, int q) { return min_index_by_scan(scheme, x, q).has_value(); }

EncodeResult encode(SchemeId scheme, const BitWord& x, int q, const CyclicCode* code) {
    switch (scheme) {
        case SchemeId::A: return encode_a(x, q);
        case SchemeId::B: return encode_b(x, q);
        default: return encode_c(*code, x);
    }
}

BitWord decode(SchemeId scheme, const EncodeResult& r, int n, int q, const CyclicCode* code) {
    switch (scheme) {
        case SchemeId::A: return decode_a(r.codeword, r.prefix, static_cast<std::size_t>(n), q);
        case SchemeId::B: return decode_b(r.codeword, r.prefix, static_cast<std::size_t>(n), q);
        default: return decode_c(*code, r.codeword, r.prefix);
    }
}

RoundTripResult roundtrip(SchemeId scheme, int n, int q, const CyclicCode* code,
                          const std::function<void(const std::function<void(const BitWord&)>&)>& messages) {
    RoundTripResult res;
    const std::size_t target = static_cast<std::size_t>(n / 2 + q);
    messages([&](const BitWord& x) {
        if (!res.passed) return;
        ++res.checked;
        try {
            const EncodeResult r = encode(scheme, x, q, code);
            if (r.codeword.size() != static_cast<std::size_t>(n) || weight(r.codeword) != target) {
                res.passed = false;
                res.detail = "codeword " + r.codeword.to_string() + " has wrong length or weight";
            } else if (decode(scheme, r, n, q, code) != x) {
                res.passed = false;
                res.detail = "decode mismatch for codeword " + r.codeword.to_string() + " prefix " + r.prefix.to_string();
            }
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = e.what();
        }
        if (!res.passed) res.counterexample = x;
    });
    return res;
}

struct Tally {
    std::map<int, BigCount> gamma;
    double analytical = 0.0;
    double operational = 0.0;
    std::uint64_t messages = 0;
    BigCount bad = 0;
};

void add_message(Tally& t, SchemeId scheme, const BitWord& x, int n, int q, const CyclicCode* code) {
    const EncodeResult r = encode(scheme, x, q, code);
    const double redundancy = static_cast<double>(r.codeword.size() + r.prefix.size()) - static_cast<double>(x.size());
    t.operational += redundancy;

    const BitWord body = scheme == SchemeId::A ? r.codeword : r.codeword.prefix(r.codeword.size() - 1);
    const auto gamma = definitional_gamma(scheme == SchemeId::CCode ? SchemeId::CFullSpace : scheme, body, n, q);
    const auto width = static_cast<double>(bits_for(gamma.size()));
    t.analytical += redundancy - width + std::log2(static_cast<double>(gamma.size()));
    if (r.classification && is_bad(*r.classification)) t.bad += 1;
    ++t.messages;
}

}  // namespace

std::optional<std::size_t> min_index_by_scan(SchemeId scheme, const BitWord& x, int q) {
    if (scheme == SchemeId::A) {
        const std::size_t target = x.size() / 2 + static_cast<std::size_t>(q);
        for (std::size_t j = 0; j <= x.size(); ++j) {
            if (weight(flip_prefix(x, j)) == target) return j;
        }
        return std::nullopt;
    }
    if (scheme == SchemeId::B) {
        const std::size_t m = (x.size() + 1) / 2;
        const std::size_t lo = m + static_cast<std::size_t>(q) - 1;
        for (std::size_t j = 0; j <= x.size(); ++j) {
            const std::size_t wt = weight(flip_prefix(x, j));
            if (wt == lo || wt == lo + 1) return j;
        }
        return std::nullopt;
    }
    const std::size_t m = (x.size() + 1) / 2;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const std::size_t wt = weight(flip_c(cyclic_shift(x, static_cast<std::int64_t>(j))));
        if (wt == m - 1 || wt == m) return j;
    }
    return std::nullopt;
}

std::vector<std::size_t> definitional_gamma(SchemeId scheme, const BitWord& c, int n, int q) {
    std::vector<std::size_t> out;
    if (scheme == SchemeId::A || scheme == SchemeId::B) {
        for (std::size_t j = 0; j <= c.size(); ++j) {
            if (min_index_by_scan(scheme, flip_prefix(c, j), q) == j) out.push_back(j);
        }
        return out;
    }
    (void)n;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const BitWord x = cyclic_shift(flip_c(c), -static_cast<std::int64_t>(j));
        if (min_index_by_scan(SchemeId::CFullSpace, x, 0) == j) out.push_back(j);
    }
    return out;
}

std::map<int, BigCount> gamma_histogram(SchemeId scheme, int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    if (scheme == SchemeId::CCode) throw DomainError("code histograms need a code");
    if (scheme == SchemeId::CFullSpace && q != 0) throw DomainError("full-space cyclic balancing is defined for q = 0");
    const std::size_t len = message_length(scheme, n);
    const std::size_t m = static_cast<std::size_t>(n / 2);
    std::set<std::size_t> weights;
    if (scheme == SchemeId::A) weights = {m + static_cast<std::size_t>(q)};
    else if (scheme == SchemeId::B) weights = {m + static_cast<std::size_t>(q) - 1, m + static_cast<std::size_t>(q)};
    else weights = {m - 1, m};

    std::map<int, BigCount> hist;
    for_each_word(len, [&](const BitWord& c) {
        if (!weights.count(weight(c))) return;
        hist[static_cast<int>(definitional_gamma(scheme, c, n, q).size())] += 1;
    });
    return hist;
}

std::map<int, BigCount> gamma_histogram(const CyclicCode& code) {
    std::set<BitWord> seen;
    std::map<int, BigCount> hist;
    const int n = static_cast<int>(code.length()) + 1;
    code.for_each_codeword([&](const BitWord& x) {
        const BitWord c = encode_c(code, x).codeword.prefix(code.length());
        if (seen.insert(c).second) hist[static_cast<int>(definitional_gamma(SchemeId::CCode, c, n, 0).size())] += 1;
    });
    return hist;
}

BigCount bad_census_a(int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    BigCount bad = 0;
    for_each_word(static_cast<std::size_t>(n), [&](const BitWord& x) {
        if (!has_index(SchemeId::A, x, q) && !has_index(SchemeId::A, complement(x), q)) bad += 1;
    });
    return bad;
}

BigCount bad_census_b(int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    BigCount bad = 0;
    for_each_word(static_cast<std::size_t>(n - 1), [&](const BitWord& x) {
        if (!has_index(SchemeId::B, x, q) && !has_index(SchemeId::B, complement(x), q)) bad += 1;
    });
    return bad;
}

RoundTripResult roundtrip_all(SchemeId scheme, int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    if (scheme == SchemeId::CCode) throw DomainError("code round trips need a code");
    if (scheme == SchemeId::CFullSpace) {
        if (q != 0) throw DomainError("full-space cyclic balancing is defined for q = 0");
        return roundtrip_all(CyclicCode::full_space(static_cast<std::size_t>(n - 1)));
    }
    const std::size_t len = message_length(scheme, n);
    return roundtrip(scheme, n, q, nullptr, [&](const auto& visit) { for_each_word(len, visit); });
}

RoundTripResult roundtrip_all(const CyclicCode& code) {
    check_space(static_cast<int>(code.dimension()));
    const int n = static_cast<int>(code.length()) + 1;
    return roundtrip(SchemeId::CCode, n, 0, &code, [&](const auto& visit) { code.for_each_codeword(visit); });
}

RedundancyReport exhaustive_redundancy(SchemeId scheme, int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    if (scheme == SchemeId::CCode) throw DomainError("code reports need a code");
    if (scheme == SchemeId::CFullSpace) {
        if (q != 0) throw DomainError("full-space cyclic balancing is defined for q = 0");
        RedundancyReport r = exhaustive_redundancy(CyclicCode::full_space(static_cast<std::size_t>(n - 1)));
        r.scheme = std::string(to_string(SchemeId::CFullSpace));
        r.bound = formula_report(SchemeId::CFullSpace, n, 0).bound;
        return r;
    }
    Tally t;
    for_each_word(message_length(scheme, n), [&](const BitWord& x) { add_message(t, scheme, x, n, q, nullptr); });

    RedundancyReport r = formula_report(scheme, n, q);
    r.gamma = gamma_histogram(scheme, n, q);
    r.analytical_mean = t.analytical / static_cast<double>(t.messages);
    r.operational_mean = t.operational / static_cast<double>(t.messages);
    r.bad_words = t.bad;
    return r;
}

RedundancyReport exhaustive_redundancy(const CyclicCode& code) {
    check_space(static_cast<int>(code.dimension()));
    const int n = static_cast<int>(code.length()) + 1;
    Tally t;
    code.for_each_codeword([&](const BitWord& x) { add_message(t, SchemeId::CCode, x, n, 0, &code); });

    RedundancyReport r;
    r.scheme = std::string(to_string(SchemeId::CCode));
    r.n = n;
    r.gamma = gamma_histogram(code);
    r.analytical_mean = t.analytical / static_cast<double>(t.messages);
    r.operational_mean = t.operational / static_cast<double>(t.messages);
    r.bound.fixed_bits = 1.0;
    r.bound.good_term = rho_c(code) - 1.0;
    r.optimal = optimal_redundancy(n, 0);
    return r;
}

}  // namespace vlbal
