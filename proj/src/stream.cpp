#include "vlbal/stream.hpp"

#include <array>

#include "vlbal/errors.hpp"

namespace vlbal {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'V', 'L', 'B', 'S'};
constexpr std::uint8_t kVersion = 1;

void put(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
    for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_bits(std::vector<std::uint8_t>& out, const BitWord& w) {
    put(out, w.size(), 2);
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc = static_cast<std::uint8_t>(acc | (w[i] << (7 - i % 8)));
        if (i % 8 == 7) {
            out.push_back(acc);
            acc = 0;
        }
    }
    if (w.size() % 8 != 0) out.push_back(acc);
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t get(int bytes) {
        need(static_cast<std::size_t>(bytes));
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; ++i) v = (v << 8) | bytes_[pos_++];
        return v;
    }

    BitWord get_bits() {
        const auto len = static_cast<std::size_t>(get(2));
        need((len + 7) / 8);
        BitWord w(len);
        for (std::size_t i = 0; i < len; ++i) w.set(i, (bytes_[pos_ + i / 8] >> (7 - i % 8)) & 1);
        pos_ += (len + 7) / 8;
        return w;
    }

    bool done() const { return pos_ == bytes_.size(); }

private:
    void need(std::size_t count) const {
        if (bytes_.size() - pos_ < count) throw FrameError("stream container truncated");
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

std::size_t prefix_width(const BitWord& cprime) {
    const BitWord c = cprime.prefix(cprime.size() - 1);
    if (weight(cprime) != cprime.size() / 2) throw DecodeError("frame is not balanced");
    return bits_for(gamma_size_c(c));
}

}  // namespace

StreamEncoding stream_encode(const CyclicCode& code, const BitWord& payload) {
    const std::size_t k = code.dimension();
    const std::size_t m = (code.length() + 1) / 2;
    if (code.length() % 2 == 0) throw DomainError("stream code needs odd length");
    if (k <= bits_for(m)) throw CapacityError("code dimension too small to carry a chained prefix");

    StreamEncoding enc;
    enc.container.n = code.length() + 1;
    enc.container.k = k;
    BitWord carry;
    std::size_t pos = 0;
    while (pos < payload.size()) {
        const std::size_t room = k - carry.size();
        const std::size_t fresh = std::min(room, payload.size() - pos);
        BitWord packet = carry + payload.slice(pos, fresh) + BitWord(room - fresh);
        const EncodeResult r = encode_c(code, code.encode_systematic(packet));
        enc.frames.push_back({fresh, r.codeword, r.prefix});
        enc.container.frames.push_back(r.codeword);
        enc.container.pad_bits = room - fresh;
        carry = r.prefix;
        pos += fresh;
    }
    enc.container.tail_prefix = carry;
    return enc;
}

BitWord stream_decode(const CyclicCode& code, const StreamContainer& container) {
    const std::size_t k = code.dimension();
    if (container.n != code.length() + 1 || container.k != k) throw FrameError("container does not match code");
    const auto& frames = container.frames;
    if (frames.empty()) {
        if (container.pad_bits != 0 || !container.tail_prefix.empty()) throw FrameError("empty stream with trailing state");
        return {};
    }
    std::vector<std::size_t> widths;
    for (const auto& f : frames) {
        if (f.size() != container.n) throw FrameError("frame length differs from n");
        widths.push_back(prefix_width(f));
    }

    std::vector<BitWord> fresh(frames.size());
    BitWord prefix = container.tail_prefix;
    for (std::size_t t = frames.size(); t-- > 0;) {
        const BitWord packet = decode_c(code, frames[t], prefix).prefix(k);
        const std::size_t carried = t > 0 ? widths[t - 1] : 0;
        std::size_t count = k - carried;
        if (t + 1 == frames.size()) {
            if (container.pad_bits > count) throw FrameError("pad longer than final packet");
            if (weight(packet.suffix(container.pad_bits)) != 0) throw FrameError("nonzero padding");
            count -= container.pad_bits;
        }
        fresh[t] = packet.slice(carried, count);
        prefix = packet.prefix(carried);
    }
    BitWord out;
    for (const auto& f : fresh) out.append(f);
    return out;
}

StreamContainer correct_frames(const BalancedCodebook& book, StreamContainer container) {
    for (auto& f : container.frames) f = book.correct(f);
    return container;
}

std::vector<std::uint8_t> serialize(const StreamContainer& container) {
    std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    put(out, container.n, 2);
    put(out, container.k, 2);
    put(out, container.frames.size(), 4);
    put(out, container.pad_bits, 2);
    put_bits(out, container.tail_prefix);
    for (const auto& f : container.frames) put_bits(out, f);
    return out;
}

StreamContainer parse_container(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    for (auto b : kMagic) {
        if (in.get(1) != b) throw FrameError("not a stream container");
    }
    if (in.get(1) != kVersion) throw FrameError("unsupported container version");
    StreamContainer c;
    c.n = static_cast<std::size_t>(in.get(2));
    c.k = static_cast<std::size_t>(in.get(2));
    const auto count = in.get(4);
    c.pad_bits = static_cast<std::size_t>(in.get(2));
    c.tail_prefix = in.get_bits();
    for (std::uint64_t i = 0; i < count; ++i) c.frames.push_back(in.get_bits());
    if (!in.done()) throw FrameError("trailing bytes after last frame");
    return c;
}

}  // namespace vlbal
