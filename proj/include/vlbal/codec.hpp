#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "vlbal/bitword.hpp"

namespace vlbal {

enum class Classification { Type1Good, Type0Good, Type1Bad, Type0Bad };

std::string_view to_string(Classification c);
bool is_bad(Classification c);
// Type bit carried in the prefix: 1 for Type1*, 0 for Type0*.
bool type_bit(Classification c);

struct EncodeResult {
    BitWord codeword;
    BitWord prefix;
    std::optional<Classification> classification;
    std::size_t tau = 0;
};

// Average prefix redundancy split into fixed flag bits, good-word and bad-word parts.
struct BoundTerms {
    double fixed_bits = 0.0;
    double good_term = 0.0;
    double bad_term = 0.0;
    double total() const { return fixed_bits + good_term + bad_term; }
};

// Real log2 of |Gamma| versus the integer ceil(log2 |Gamma|) actually transmitted.
enum class LogConvention { Real, Ceil };

enum class SchemeId { A, B, CFullSpace, CCode };

std::string_view to_string(SchemeId s);

// Checks n even, n >= 2, 0 <= q <= n/2.
void check_length_and_q(std::size_t n, int q);

}  // namespace vlbal
