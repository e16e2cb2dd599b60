#include "vlbal/codec.hpp"

#include "vlbal/errors.hpp"

namespace vlbal {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Type1Good: return "Type1Good";
        case Classification::Type0Good: return "Type0Good";
        case Classification::Type1Bad: return "Type1Bad";
        case Classification::Type0Bad: return "Type0Bad";
    }
    return "?";
}

std::string_view to_string(SchemeId s) {
    switch (s) {
        case SchemeId::A: return "A";
        case SchemeId::B: return "B";
        case SchemeId::CFullSpace: return "C-fullspace";
        case SchemeId::CCode: return "C-code";
    }
    return "?";
}

bool is_bad(Classification c) { return c == Classification::Type1Bad || c == Classification::Type0Bad; }

bool type_bit(Classification c) { return c == Classification::Type1Good || c == Classification::Type1Bad; }

void check_length_and_q(std::size_t n, int q) {
    if (n < 2 || n % 2 != 0) throw DomainError("length n must be even and at least 2");
    if (q < 0) throw DomainError("q must be nonnegative");
    if (static_cast<std::size_t>(q) > n / 2) throw DomainError("q must not exceed n/2");
}

}  // namespace vlbal
