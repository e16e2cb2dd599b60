#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vlbal/bigcount.hpp"
#include "vlbal/bitword.hpp"
#include "vlbal/codec.hpp"
#include "vlbal/cyclic_code.hpp"
#include "vlbal/report.hpp"

namespace vlbal {

// Brute-force ground truth over whole message spaces. Balancing indices are
// found by direct weight scans; no running-sum shortcuts are used.

constexpr int kMaxOracleBits = 22;

// Smallest balancing index of x: flip prefix (A, B) or cyclic shift (C).
std::optional<std::size_t> min_index_by_scan(SchemeId scheme, const BitWord& x, int q);

// {j : the preimage of c under index j encodes with index j}. For A and B
// the preimage is flip_prefix(c, j); for C it is cyclic_shift(flip_c(c), -j).
std::vector<std::size_t> definitional_gamma(SchemeId scheme, const BitWord& c, int n, int q);

// |definitional_gamma| over every word the encoder can emit.
std::map<int, BigCount> gamma_histogram(SchemeId scheme, int n, int q);
std::map<int, BigCount> gamma_histogram(const CyclicCode& code);

// Messages for which neither the word nor its complement has a balancing index.
BigCount bad_census_a(int n, int q);
BigCount bad_census_b(int n, int q);

struct RoundTripResult {
    bool passed = true;
    std::uint64_t checked = 0;
    std::optional<BitWord> counterexample;
    std::string detail;
};

RoundTripResult roundtrip_all(SchemeId scheme, int n, int q);
RoundTripResult roundtrip_all(const CyclicCode& code);

// Operational mean uses the transmitted prefix bits, the analytical mean
// real log2 |Gamma|; both count the appended bit of B and C.
RedundancyReport exhaustive_redundancy(SchemeId scheme, int n, int q);
RedundancyReport exhaustive_redundancy(const CyclicCode& code);

}  // namespace vlbal
