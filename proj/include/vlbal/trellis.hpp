#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "vlbal/bigcount.hpp"
#include "vlbal/cyclic_code.hpp"

namespace vlbal {

// Level l of the trellis decides the symbol pair (c_l, c_{l+m}); the final
// level m decides c_m alone. A path is accepted when its weight is m-1 or m
// and flip_c of the word it spells has zero syndrome.
struct TrellisState {
    static constexpr int kUnknownIndex = -1;

    int level = 0;
    int cr = 0;
    int wt = 0;
    std::uint64_t syn = 0;
    // First level at which cr returned to zero; m if it never did.
    int index = kUnknownIndex;

    friend bool operator==(const TrellisState&, const TrellisState&) = default;
};

struct TrellisCount {
    TrellisState state;
    BigCount count;
};

struct TrellisResult {
    std::vector<TrellisCount> final_states;
    // i -> number of balanced codewords whose gamma set has size i.
    std::map<int, BigCount> gamma;
    std::vector<std::size_t> states_per_level;

    std::size_t state_count() const;
    BigCount codebook_size() const;
};

constexpr std::size_t kMaxTrellisRedundancy = 20;

TrellisResult build_and_count(const CyclicCode& code);
double rho_c(const CyclicCode& code);
BigCount codebook_size(const CyclicCode& code);

// (m+1)(2m+1)(m+1) 2^(n-k) (m+2) for a code of length 2m-1.
double trellis_state_bound(const CyclicCode& code);

}  // namespace vlbal
