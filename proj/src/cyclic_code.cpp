#include "vlbal/cyclic_code.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "vlbal/errors.hpp"

namespace vlbal {

Gf2Poly::Gf2Poly(std::vector<std::uint8_t> coefficients) : coef_(std::move(coefficients)) {
    for (auto& c : coef_) c = c ? 1 : 0;
    trim();
}

void Gf2Poly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
    std::vector<std::uint8_t> c;
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            c.push_back(static_cast<std::uint8_t>(ch - '0'));
        } else if (ch != ',' && ch != ' ' && ch != '\t') {
            throw DomainError(std::string("bad polynomial coefficient '") + ch + "'");
        }
    }
    return Gf2Poly(std::move(c));
}

Gf2Poly Gf2Poly::cyclic_modulus(std::size_t n) {
    std::vector<std::uint8_t> c(n + 1, 0);
    c[0] = 1;
    c[n] = 1;
    return Gf2Poly(std::move(c));
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
    std::vector<std::uint8_t> c(std::max(a.coef_.size(), b.coef_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) ^ b.coefficient(i);
    return Gf2Poly(std::move(c));
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint8_t> c(a.coef_.size() + b.coef_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
        if (!a.coef_[i]) continue;
        for (std::size_t j = 0; j < b.coef_.size(); ++j) c[i + j] ^= b.coef_[j];
    }
    return Gf2Poly(std::move(c));
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divide(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<std::uint8_t> rem = a.coef_;
    const int db = b.degree();
    std::vector<std::uint8_t> quot(std::max(0, a.degree() - db + 1), 0);
    for (int d = a.degree(); d >= db; --d) {
        if (!rem[static_cast<std::size_t>(d)]) continue;
        quot[static_cast<std::size_t>(d - db)] = 1;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(d - db + j)] ^= b.coef_[static_cast<std::size_t>(j)];
    }
    return {Gf2Poly(std::move(quot)), Gf2Poly(std::move(rem))};
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (!coef_[i]) continue;
        if (!s.empty()) s += '+';
        if (i == 0) s += '1';
        else if (i == 1) s += 'X';
        else s += "X^" + std::to_string(i);
    }
    return s;
}

struct CyclicCode::DistanceCache {
    std::once_flag once;
    int value = 0;
};

CyclicCode CyclicCode::from_generator(std::size_t n, const Gf2Poly& generator) {
    if (n == 0) throw DomainError("code length must be positive");
    if (generator.is_zero() || generator.degree() > static_cast<int>(n)) throw DomainError("generator degree out of range");
    auto [check, rem] = Gf2Poly::divide(Gf2Poly::cyclic_modulus(n), generator);
    if (!rem.is_zero()) throw DomainError("generator does not divide X^n - 1");

    CyclicCode code;
    code.n_ = n;
    code.k_ = n - static_cast<std::size_t>(generator.degree());
    if (code.redundancy() > kMaxRedundancy) throw CapacityError("parity-check matrices limited to 64 rows");
    code.generator_ = generator;

    // Basis X^i g(X) is unit upper triangular on the first k positions;
    // back substitution makes it systematic.
    std::vector<BitWord> rows;
    for (std::size_t i = 0; i < code.k_; ++i) {
        BitWord r(n);
        for (int j = 0; j <= generator.degree(); ++j) r.set(i + static_cast<std::size_t>(j), generator.coefficient(static_cast<std::size_t>(j)));
        rows.push_back(std::move(r));
    }
    for (std::size_t col = code.k_; col-- > 0;) {
        for (std::size_t r = 0; r < col; ++r) {
            if (!rows[r][col]) continue;
            for (std::size_t p = 0; p < n; ++p) rows[r].set(p, rows[r][p] ^ rows[col][p]);
        }
    }
    code.basis_ = std::move(rows);

    // Row j of H: reversed check polynomial shifted by j.
    std::vector<BitWord> h;
    for (std::size_t j = 0; j < code.redundancy(); ++j) {
        BitWord r(n);
        for (std::size_t t = 0; t <= code.k_; ++t) r.set(j + t, check.coefficient(code.k_ - t));
        h.push_back(std::move(r));
    }
    code.set_parity_rows(std::move(h));
    code.distance_ = std::make_shared<DistanceCache>();
    return code;
}

CyclicCode CyclicCode::full_space(std::size_t n) { return from_generator(n, Gf2Poly({1})); }

void CyclicCode::set_parity_rows(std::vector<BitWord> rows) {
    parity_rows_ = std::move(rows);
    columns_.assign(n_, 0);
    for (std::size_t r = 0; r < parity_rows_.size(); ++r) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (parity_rows_[r][i]) columns_[i] |= std::uint64_t{1} << r;
        }
    }
}

CyclicCode CyclicCode::with_parity_rows(const std::vector<BitWord>& rows) const {
    if (rows.size() != redundancy()) throw DomainError("parity-check matrix needs n - k rows");
    for (const auto& r : rows) {
        if (r.size() != n_) throw DomainError("parity-check row length differs from n");
        for (const auto& b : basis_) {
            bool dot = false;
            for (std::size_t i = 0; i < n_; ++i) dot ^= r[i] && b[i];
            if (dot) throw DomainError("parity-check row is not orthogonal to the code");
        }
    }
    // Rank check by elimination on bitmask columns.
    std::vector<BitWord> m = rows;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_ && rank < m.size(); ++col) {
        auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(), [col](const BitWord& w) { return w[col]; });
        if (pivot == m.end()) continue;
        std::swap(*pivot, m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || !m[r][col]) continue;
            for (std::size_t p = 0; p < n_; ++p) m[r].set(p, m[r][p] ^ m[rank][p]);
        }
        ++rank;
    }
    if (rank != rows.size()) throw DomainError("parity-check rows are linearly dependent");

    CyclicCode out = *this;
    out.set_parity_rows(rows);
    return out;
}

BitWord CyclicCode::encode_systematic(const BitWord& message) const {
    if (message.size() != k_) throw DomainError("message length must equal code dimension k");
    BitWord x(n_);
    for (std::size_t j = 0; j < k_; ++j) {
        if (!message[j]) continue;
        for (std::size_t p = 0; p < n_; ++p) x.set(p, x[p] ^ basis_[j][p]);
    }
    return x;
}

std::uint64_t CyclicCode::syndrome(const BitWord& w) const {
    if (w.size() != n_) throw DomainError("word length differs from code length");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (w[i]) s ^= columns_[i];
    }
    return s;
}

bool CyclicCode::contains(const BitWord& w) const { return w.size() == n_ && syndrome(w) == 0; }

void CyclicCode::check_enumerable() const {
    if (k_ > kMaxEnumerationDimension) throw CapacityError("codeword enumeration limited to k <= 24");
}

void CyclicCode::for_each_codeword(const std::function<void(const BitWord&)>& visit) const {
    check_enumerable();
    BitWord x(n_);
    visit(x);
    // Gray-code walk: step g flips basis row ctz(g).
    const std::uint64_t total = std::uint64_t{1} << k_;
    for (std::uint64_t g = 1; g < total; ++g) {
        const auto row = static_cast<std::size_t>(__builtin_ctzll(g));
        for (std::size_t p = 0; p < n_; ++p) x.set(p, x[p] ^ basis_[row][p]);
        visit(x);
    }
}

std::vector<BitWord> CyclicCode::codewords() const {
    check_enumerable();
    std::vector<BitWord> out;
    out.reserve(std::size_t{1} << k_);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k_); ++v) out.push_back(encode_systematic(BitWord::from_uint(v, k_)));
    return out;
}

int CyclicCode::min_distance() const {
    std::call_once(distance_->once, [this] {
        std::size_t best = n_;
        bool any = false;
        for_each_codeword([&](const BitWord& w) {
            const std::size_t wt = weight(w);
            if (wt == 0) return;
            any = true;
            best = std::min(best, wt);
        });
        distance_->value = any ? static_cast<int>(best) : 0;
    });
    return distance_->value;
}

CyclicCode parse_code_spec(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError("code spec line " + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    auto require = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw DomainError("code spec missing '" + key + "'");
        return it->second;
    };
    auto to_size = [](const std::string& key, const std::string& v) {
        try {
            std::size_t used = 0;
            const long long x = std::stoll(v, &used);
            if (used != v.size() || x <= 0) throw DomainError("");
            return static_cast<std::size_t>(x);
        } catch (const std::exception&) {
            throw DomainError("code spec '" + key + "' must be a positive integer");
        }
    };

    const std::size_t n = to_size("n", require("n"));
    CyclicCode code = CyclicCode::from_generator(n, Gf2Poly::parse(require("generator")));
    if (auto it = kv.find("k"); it != kv.end() && to_size("k", it->second) != code.dimension()) {
        throw DomainError("code spec k disagrees with generator degree");
    }

    std::vector<BitWord> rows;
    for (std::size_t j = 1;; ++j) {
        auto it = kv.find("parity_row_" + std::to_string(j));
        if (it == kv.end()) break;
        std::string bits;
        for (char ch : it->second) {
            if (ch != ',') bits += ch;
        }
        rows.push_back(BitWord::parse(bits));
    }
    for (const auto& [key, value] : kv) {
        const bool known = key == "n" || key == "k" || key == "generator" || key.rfind("parity_row_", 0) == 0;
        if (!known) throw DomainError("code spec has unknown key '" + key + "'");
    }
    if (!rows.empty()) code = code.with_parity_rows(rows);
    return code;
}

CyclicCode load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open code spec '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_spec(buf.str());
}

}  // namespace vlbal
