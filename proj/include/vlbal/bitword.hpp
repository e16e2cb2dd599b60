#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vlbal {

// Binary word with explicit length. Textual form is "0110...", leftmost
// character is position 1; operator[] takes the 0-based index (position - 1).
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::size_t length, bool fill = false);

    static BitWord parse(std::string_view text);
    // Big-endian: position 1 holds the most significant of `length` bits.
    static BitWord from_uint(std::uint64_t value, std::size_t length);
    static BitWord repeat(bool bit, std::size_t count);

    std::uint64_t to_uint() const;
    std::string to_string() const;

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t index) const { return bits_[index] != 0; }
    void set(std::size_t index, bool bit) { bits_[index] = bit ? 1 : 0; }

    // First j symbols / last j symbols.
    BitWord prefix(std::size_t j) const;
    BitWord suffix(std::size_t j) const;
    BitWord slice(std::size_t start, std::size_t count) const;

    BitWord& append(bool bit);
    BitWord& append(const BitWord& tail);
    friend BitWord operator+(BitWord head, const BitWord& tail) { return head.append(tail); }

    friend bool operator==(const BitWord&, const BitWord&) = default;
    friend auto operator<=>(const BitWord&, const BitWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

std::size_t weight(const BitWord& w);
std::size_t hamming_distance(const BitWord& a, const BitWord& b);

// Complement the first j symbols, 0 <= j <= len.
BitWord flip_prefix(const BitWord& w, std::size_t j);
BitWord complement(const BitWord& w);
// Right rotation by i (negative rotates left): result[j] = w[j - i mod n].
BitWord cyclic_shift(const BitWord& w, std::int64_t i);

// R_0 = 0, R_j = R_{j-1} + (w_j ? 1 : -1).
std::vector<int> running_sum(const BitWord& w);
// Odd length 2m-1: CR_0 = 0, CR_i = CR_{i-1} + s(w_i) + s(w_{i+m}), i = 1..m-1.
std::vector<int> cyclic_running_sum(const BitWord& w);

// All j in [0, len] with weight(flip_prefix(w, j)) == target.
std::vector<std::size_t> indices_reaching_weight(const BitWord& w, std::size_t target);
std::optional<std::size_t> first_index_reaching_weight(const BitWord& w, std::size_t target);

// T(w, q): indices making a length-2m word reach weight m + q.
std::vector<std::size_t> balancing_indices(const BitWord& w, int q);

// Fixed-width big-endian field helpers for prefixes.
BitWord encode_field(std::uint64_t value, std::size_t width);
std::uint64_t decode_field(const BitWord& w, std::size_t start, std::size_t width);

// ceil(log2(count)) for count >= 1.
std::size_t bits_for(std::uint64_t count);

}  // namespace vlbal
