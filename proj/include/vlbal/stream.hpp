#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vlbal/bitword.hpp"
#include "vlbal/cyclic_code.hpp"
#include "vlbal/scheme_c.hpp"

namespace vlbal {

// Prefix-chained block stream over Scheme C. Each packet of k message bits
// starts with the previous frame's prefix and is filled with fresh payload;
// the last packet is zero padded and its own prefix travels in the header.
struct StreamFrame {
    std::size_t payload_bits = 0;
    BitWord codeword;
    BitWord prefix;
};

struct StreamContainer {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<BitWord> frames;
    std::size_t pad_bits = 0;
    BitWord tail_prefix;
};

struct StreamEncoding {
    std::vector<StreamFrame> frames;
    StreamContainer container;
};

StreamEncoding stream_encode(const CyclicCode& code, const BitWord& payload);
BitWord stream_decode(const CyclicCode& code, const StreamContainer& container);

// Replaces every frame by its nearest codeword in the balanced codebook.
StreamContainer correct_frames(const BalancedCodebook& book, StreamContainer container);

// Binary form: "VLBS", version, n, k, frame count, pad length, tail prefix,
// then one (bit length, packed bits) block per frame. Big-endian integers.
std::vector<std::uint8_t> serialize(const StreamContainer& container);
StreamContainer parse_container(std::span<const std::uint8_t> bytes);

}  // namespace vlbal
