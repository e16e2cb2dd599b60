#include "vlbal/bitword.hpp"

#include <algorithm>

#include "vlbal/errors.hpp"

namespace vlbal {

BitWord::BitWord(std::size_t length, bool fill) : bits_(length, fill ? 1 : 0) {}

BitWord BitWord::parse(std::string_view text) {
    BitWord w;
    w.bits_.reserve(text.size());
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            w.bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
        } else if (ch != ' ' && ch != '_') {
            throw DomainError(std::string("not a bit: '") + ch + "'");
        }
    }
    return w;
}

BitWord BitWord::from_uint(std::uint64_t value, std::size_t length) {
    if (length > 64) throw DomainError("from_uint supports at most 64 bits");
    BitWord w(length);
    for (std::size_t i = 0; i < length; ++i) w.set(length - 1 - i, (value >> i) & 1u);
    return w;
}

BitWord BitWord::repeat(bool bit, std::size_t count) { return BitWord(count, bit); }

std::uint64_t BitWord::to_uint() const {
    if (size() > 64) throw DomainError("to_uint supports at most 64 bits");
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
}

std::string BitWord::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) s[i] = bits_[i] ? '1' : '0';
    return s;
}

BitWord BitWord::prefix(std::size_t j) const {
    if (j > size()) throw std::out_of_range("prefix longer than word");
    return slice(0, j);
}

BitWord BitWord::suffix(std::size_t j) const {
    if (j > size()) throw std::out_of_range("suffix longer than word");
    return slice(size() - j, j);
}

BitWord BitWord::slice(std::size_t start, std::size_t count) const {
    if (start > size() || count > size() - start) throw std::out_of_range("slice out of range");
    BitWord w;
    w.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(start),
                   bits_.begin() + static_cast<std::ptrdiff_t>(start + count));
    return w;
}

BitWord& BitWord::append(bool bit) {
    bits_.push_back(bit ? 1 : 0);
    return *this;
}

BitWord& BitWord::append(const BitWord& tail) {
    bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
    return *this;
}

std::size_t weight(const BitWord& w) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w.size(); ++i) n += w[i];
    return n;
}

std::size_t hamming_distance(const BitWord& a, const BitWord& b) {
    if (a.size() != b.size()) throw DomainError("hamming distance needs equal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

BitWord flip_prefix(const BitWord& w, std::size_t j) {
    if (j > w.size()) throw std::out_of_range("flip index beyond word length");
    BitWord r = w;
    for (std::size_t i = 0; i < j; ++i) r.set(i, !w[i]);
    return r;
}

BitWord complement(const BitWord& w) { return flip_prefix(w, w.size()); }

BitWord cyclic_shift(const BitWord& w, std::int64_t i) {
    const auto n = static_cast<std::int64_t>(w.size());
    if (n == 0) return w;
    const std::int64_t k = ((i % n) + n) % n;
    BitWord r(w.size());
    for (std::int64_t j = 0; j < n; ++j) r.set(static_cast<std::size_t>((j + k) % n), w[static_cast<std::size_t>(j)]);
    return r;
}

std::vector<int> running_sum(const BitWord& w) {
    std::vector<int> r(w.size() + 1, 0);
    for (std::size_t j = 0; j < w.size(); ++j) r[j + 1] = r[j] + (w[j] ? 1 : -1);
    return r;
}

std::vector<int> cyclic_running_sum(const BitWord& w) {
    if (w.size() % 2 == 0) throw DomainError("cyclic running sum needs odd length");
    const std::size_t m = (w.size() + 1) / 2;
    std::vector<int> r(m, 0);
    for (std::size_t i = 1; i < m; ++i) r[i] = r[i - 1] + (w[i - 1] ? 1 : -1) + (w[i - 1 + m] ? 1 : -1);
    return r;
}

std::vector<std::size_t> indices_reaching_weight(const BitWord& w, std::size_t target) {
    std::vector<std::size_t> out;
    auto wt = static_cast<std::int64_t>(weight(w));
    const auto goal = static_cast<std::int64_t>(target);
    for (std::size_t j = 0;; ++j) {
        if (wt == goal) out.push_back(j);
        if (j == w.size()) break;
        wt += w[j] ? -1 : 1;
    }
    return out;
}

std::optional<std::size_t> first_index_reaching_weight(const BitWord& w, std::size_t target) {
    auto wt = static_cast<std::int64_t>(weight(w));
    const auto goal = static_cast<std::int64_t>(target);
    for (std::size_t j = 0;; ++j) {
        if (wt == goal) return j;
        if (j == w.size()) return std::nullopt;
        wt += w[j] ? -1 : 1;
    }
}

std::vector<std::size_t> balancing_indices(const BitWord& w, int q) {
    if (w.size() % 2 != 0) throw DomainError("balancing indices need even length");
    const auto m = static_cast<std::int64_t>(w.size() / 2);
    if (q < -m || q > m) throw DomainError("q outside [-n/2, n/2]");
    return indices_reaching_weight(w, static_cast<std::size_t>(m + q));
}

BitWord encode_field(std::uint64_t value, std::size_t width) {
    if (width < 64 && (value >> width) != 0) throw DomainError("value does not fit field width");
    return BitWord::from_uint(value, width);
}

std::uint64_t decode_field(const BitWord& w, std::size_t start, std::size_t width) {
    if (start > w.size() || width > w.size() - start) throw DecodeError("prefix too short");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = (v << 1) | w[start + i];
    return v;
}

std::size_t bits_for(std::uint64_t count) {
    std::size_t b = 0;
    while (b < 64 && (std::uint64_t{1} << b) < count) ++b;
    return b;
}

}  // namespace vlbal
