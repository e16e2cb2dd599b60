#include "vlbal/trellis.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <unordered_map>

#include "vlbal/errors.hpp"

namespace vlbal {
namespace {

struct Key {
    int cr;
    int wt;
    int index;
    std::uint64_t syn;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = k.syn * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.cr)) + 0x7F4A7C15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.wt)) + 0x2545F491ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.index)) + 0x4F6CDD1Dull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using Layer = std::unordered_map<Key, BigCount, KeyHash>;

int half_length(const CyclicCode& code) {
    if (code.length() % 2 == 0) throw DomainError("trellis needs an odd code length");
    return static_cast<int>(code.length() + 1) / 2;
}

}  // namespace

std::size_t TrellisResult::state_count() const {
    std::size_t total = 0;
    for (auto s : states_per_level) total += s;
    return total;
}

BigCount TrellisResult::codebook_size() const {
    BigCount total = 0;
    for (const auto& [i, g] : gamma) total += g;
    return total;
}

TrellisResult build_and_count(const CyclicCode& code) {
    if (code.redundancy() > kMaxTrellisRedundancy) {
        throw CapacityError("trellis limited to n - k <= 20; use the enumeration oracle");
    }
    const int m = half_length(code);

    TrellisResult result;
    Layer layer;
    layer.emplace(Key{0, 0, TrellisState::kUnknownIndex, 0}, BigCount(1));
    result.states_per_level.push_back(1);

    for (int level = 1; level < m; ++level) {
        const std::uint64_t h_low = code.parity_column(static_cast<std::size_t>(level - 1));
        const std::uint64_t h_high = code.parity_column(static_cast<std::size_t>(level - 1 + m));
        const int remaining = 2 * (m - 1 - level) + 1;
        Layer next;
        for (const auto& [key, count] : layer) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    Key k = key;
                    k.cr += (a ? 1 : -1) + (b ? 1 : -1);
                    k.wt += a + b;
                    if (k.wt > m || k.wt + remaining < m - 1) continue;
                    if (!a) k.syn ^= h_low;
                    if (b) k.syn ^= h_high;
                    if (k.index == TrellisState::kUnknownIndex && k.cr == 0) k.index = level;
                    next[k] += count;
                }
            }
        }
        layer = std::move(next);
        result.states_per_level.push_back(layer.size());
    }

    const std::uint64_t h_mid = code.parity_column(static_cast<std::size_t>(m - 1));
    Layer finals;
    for (const auto& [key, count] : layer) {
        for (int a = 0; a < 2; ++a) {
            Key k = key;
            k.wt += a;
            if (!a) k.syn ^= h_mid;
            if (k.syn != 0 || (k.wt != m - 1 && k.wt != m)) continue;
            k.cr = 0;
            if (k.index == TrellisState::kUnknownIndex) k.index = m;
            finals[k] += count;
        }
    }
    result.states_per_level.push_back(finals.size());

    for (const auto& [key, count] : finals) {
        result.final_states.push_back({TrellisState{m, key.cr, key.wt, key.syn, key.index}, count});
        result.gamma[key.index] += count;
    }
    std::sort(result.final_states.begin(), result.final_states.end(), [](const TrellisCount& x, const TrellisCount& y) {
        return std::tie(x.state.index, x.state.wt) < std::tie(y.state.index, y.state.wt);
    });
    return result;
}

double rho_c(const CyclicCode& code) {
    const auto result = build_and_count(code);
    double sum = 0.0;
    for (const auto& [i, g] : result.gamma) {
        if (i > 1) sum += ratio_pow2(g * i, static_cast<std::int64_t>(code.dimension())) * std::log2(static_cast<double>(i));
    }
    return 1.0 + sum;
}

BigCount codebook_size(const CyclicCode& code) { return build_and_count(code).codebook_size(); }

double trellis_state_bound(const CyclicCode& code) {
    const double m = half_length(code);
    return (m + 1) * (2 * m + 1) * (m + 1) * std::ldexp(1.0, static_cast<int>(code.redundancy())) * (m + 2);
}

}  // namespace vlbal
