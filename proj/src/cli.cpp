#include "vlbal/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <span>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlbal/errors.hpp"
#include "vlbal/oracle.hpp"
#include "vlbal/report.hpp"
#include "vlbal/scheme_a.hpp"
#include "vlbal/scheme_b.hpp"
#include "vlbal/scheme_c.hpp"
#include "vlbal/stream.hpp"
#include "vlbal/trellis.hpp"

namespace vlbal::cli {
namespace {

using nlohmann::ordered_json;

const std::vector<int> kTable1Lengths{8, 16, 32, 64, 128, 256, 512};
const std::vector<int> kTable2Lengths{16, 32, 64, 128, 256, 512, 1000};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string scheme;
    int n = 0;
    int q = 0;
    std::string input;
    std::string input_file;
    std::string codeword;
    std::string prefix;
    std::string code_file;
    std::string in_file;
    std::string out_file;
    std::string expect;
    bool table1 = false;
    bool table2 = false;
    bool oracle = false;
    bool want_gamma = false;
    bool want_rho = false;
    bool want_size = false;
    int flips = 0;
    unsigned seed = 1;
};

ordered_json gamma_json(const std::map<int, BigCount>& gamma) {
    ordered_json g = ordered_json::object();
    for (const auto& [i, count] : gamma) g[std::to_string(i)] = to_string(count);
    return g;
}

ordered_json report_json(const RedundancyReport& r) {
    ordered_json j;
    j["scheme"] = r.scheme;
    j["n"] = r.n;
    j["q"] = r.q;
    j["gamma"] = gamma_json(r.gamma);
    j["analytical_mean"] = r.analytical_mean;
    j["operational_mean"] = r.operational_mean;
    j["bound"] = {{"fixed_bits", r.bound.fixed_bits}, {"good_term", r.bound.good_term}, {"bad_term", r.bound.bad_term}};
    j["optimal"] = r.optimal;
    if (r.bad_words) j["bad_words"] = to_string(*r.bad_words);
    return j;
}

SchemeId scheme_of(const std::string& s) {
    if (s == "a") return SchemeId::A;
    if (s == "b") return SchemeId::B;
    if (s == "c") return SchemeId::CFullSpace;
    throw DomainError("unknown scheme '" + s + "'");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

BitWord input_bits(const Options& o) {
    if (!o.input_file.empty()) {
        std::string text = read_text(o.input_file);
        text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }), text.end());
        return BitWord::parse(text);
    }
    return BitWord::parse(o.input);
}

void cmd_encode(const Options& o, std::ostream& out) {
    const BitWord x = input_bits(o);
    ordered_json j;
    EncodeResult r;
    if (o.scheme == "c") {
        if (o.code_file.empty()) throw DomainError("scheme c needs --code");
        const CyclicCode code = load_code_spec(o.code_file);
        const BitWord cw = x.size() == code.dimension() ? code.encode_systematic(x) : x;
        r = encode_c(code, cw);
        j["scheme"] = "C";
        j["n"] = code.length() + 1;
        j["input"] = x.to_string();
        j["code_word"] = cw.to_string();
    } else {
        const SchemeId s = scheme_of(o.scheme);
        r = s == SchemeId::A ? encode_a(x, o.q) : encode_b(x, o.q);
        if (o.n != 0 && static_cast<std::size_t>(o.n) != r.codeword.size()) throw DomainError("input length does not match -n");
        j["scheme"] = std::string(to_string(s));
        j["n"] = r.codeword.size();
        j["q"] = o.q;
        j["input"] = x.to_string();
    }
    j["codeword"] = r.codeword.to_string();
    j["prefix"] = r.prefix.to_string();
    if (r.classification) j["classification"] = std::string(to_string(*r.classification));
    j["tau"] = r.tau;
    out << j.dump() << '\n';
}

void cmd_decode(const Options& o, std::ostream& out) {
    const BitWord c = BitWord::parse(o.codeword);
    const BitWord p = BitWord::parse(o.prefix);
    BitWord x;
    if (o.scheme == "c") {
        if (o.code_file.empty()) throw DomainError("scheme c needs --code");
        x = decode_c(load_code_spec(o.code_file), c, p);
    } else {
        const std::size_t n = o.n != 0 ? static_cast<std::size_t>(o.n) : c.size();
        x = scheme_of(o.scheme) == SchemeId::A ? decode_a(c, p, n, o.q) : decode_b(c, p, n, o.q);
    }
    ordered_json j;
    j["codeword"] = c.to_string();
    j["prefix"] = p.to_string();
    j["message"] = x.to_string();
    out << j.dump() << '\n';
}

void cmd_redundancy(const Options& o, std::ostream& out) {
    if (o.table1) return write_csv(out, table1(kTable1Lengths));
    if (o.table2) return write_csv(out, table2(kTable2Lengths, o.q == 0 ? 6 : o.q));
    if (o.scheme == "optimal") {
        ordered_json j{{"scheme", "optimal"}, {"n", o.n}, {"q", o.q}, {"redundancy", optimal_redundancy(o.n, o.q)}};
        out << j.dump() << '\n';
        return;
    }
    const SchemeId s = scheme_of(o.scheme);
    const RedundancyReport r = o.oracle ? exhaustive_redundancy(s, o.n, o.q) : formula_report(s, o.n, o.q);
    out << report_json(r).dump() << '\n';
}

void cmd_gamma(const Options& o, std::ostream& out) {
    const SchemeId s = scheme_of(o.scheme);
    std::map<int, BigCount> gamma;
    if (o.oracle) {
        gamma = gamma_histogram(s, o.n, o.q);
    } else {
        gamma = formula_report(s, o.n, o.q).gamma;
    }
    out << "i,count,source\n";
    for (const auto& [i, count] : gamma) out << i << ',' << to_string(count) << ',' << (o.oracle ? "oracle" : "formula") << '\n';
}

void cmd_badwords(const Options& o, std::ostream& out) {
    const SchemeId s = scheme_of(o.scheme);
    if (s == SchemeId::CFullSpace) throw DomainError("bad words exist only for schemes a and b");
    const bool a = s == SchemeId::A;
    const BigCount count = a ? count_bad(o.n, o.q) : count_bad_b(o.n, o.q);
    const int bits = a ? o.n : o.n - 1;
    ordered_json j{{"scheme", std::string(to_string(s))}, {"n", o.n}, {"q", o.q}, {"count", to_string(count)},
                   {"fraction", ratio_pow2(count, bits)}};
    if (o.oracle) {
        const BigCount census = a ? bad_census_a(o.n, o.q) : bad_census_b(o.n, o.q);
        j["census"] = to_string(census);
        if (census != count) {
            out << j.dump() << '\n';
            throw VerificationFailure("bad-word count differs from census");
        }
    }
    out << j.dump() << '\n';
}

void cmd_trellis(const Options& o, std::ostream& out) {
    const CyclicCode code = load_code_spec(o.code_file);
    const TrellisResult t = build_and_count(code);
    const bool all = !o.want_gamma && !o.want_rho && !o.want_size;
    ordered_json j{{"n", code.length() + 1}, {"k", code.dimension()}};
    if (all || o.want_gamma) j["gamma"] = gamma_json(t.gamma);
    if (all || o.want_size) j["size"] = to_string(t.codebook_size());
    if (all || o.want_rho) {
        double sum = 0.0;
        for (const auto& [i, g] : t.gamma) {
            if (i > 1) sum += ratio_pow2(g * i, static_cast<std::int64_t>(code.dimension())) * std::log2(static_cast<double>(i));
        }
        j["rho"] = 1.0 + sum;
    }
    j["states"] = t.state_count();
    out << j.dump() << '\n';
}

void cmd_verify(const Options& o, std::ostream& out) {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    bool ok = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail = {}) {
        ordered_json c{{"check", name}, {"pass", pass}};
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        ok = ok && pass;
    };

    if (o.scheme == "c" && !o.code_file.empty()) {
        const CyclicCode code = load_code_spec(o.code_file);
        const auto rt = roundtrip_all(code);
        record("roundtrip", rt.passed, rt.detail);
        record("trellis_gamma", build_and_count(code).gamma == gamma_histogram(code));
        j["scheme"] = "C-code";
        j["n"] = code.length() + 1;
    } else {
        const SchemeId s = scheme_of(o.scheme);
        const auto rt = roundtrip_all(s, o.n, o.q);
        record("roundtrip", rt.passed, rt.detail);
        record("gamma_formula", formula_report(s, o.n, o.q).gamma == gamma_histogram(s, o.n, o.q));
        if (s == SchemeId::A) record("bad_count", count_bad(o.n, o.q) == bad_census_a(o.n, o.q));
        if (s == SchemeId::B) record("bad_count", count_bad_b(o.n, o.q) == bad_census_b(o.n, o.q));
        j["scheme"] = std::string(to_string(s));
        j["n"] = o.n;
        j["q"] = o.q;
    }
    j["checks"] = checks;
    j["pass"] = ok;
    out << j.dump() << '\n';
    if (!ok) throw VerificationFailure("oracle verification failed");
}

void cmd_stream_encode(const Options& o, std::ostream& out) {
    const CyclicCode code = load_code_spec(o.code_file);
    const StreamEncoding enc = stream_encode(code, input_bits(o));
    const auto bytes = serialize(enc.container);
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file, std::ios::binary);
        if (!f) throw DomainError("cannot write '" + o.out_file + "'");
        f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
    ordered_json frames = ordered_json::array();
    for (const auto& fr : enc.frames) {
        frames.push_back({{"codeword", fr.codeword.to_string()}, {"prefix", fr.prefix.to_string()}, {"payload_bits", fr.payload_bits}});
    }
    ordered_json j{{"n", enc.container.n},
                   {"k", enc.container.k},
                   {"frames", frames},
                   {"pad_bits", enc.container.pad_bits},
                   {"tail_prefix", enc.container.tail_prefix.to_string()},
                   {"bytes", bytes.size()}};
    out << j.dump() << '\n';
}

void cmd_stream_decode(const Options& o, std::ostream& out) {
    const CyclicCode code = load_code_spec(o.code_file);
    const std::string raw = read_text(o.in_file);
    StreamContainer c = parse_container(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
    ordered_json j;
    if (o.flips > 0) {
        if (static_cast<std::size_t>(o.flips) > c.n) throw DomainError("more flips than block length");
        std::mt19937 rng(o.seed);
        std::vector<std::size_t> positions(c.n);
        for (auto& f : c.frames) {
            std::iota(positions.begin(), positions.end(), std::size_t{0});
            std::shuffle(positions.begin(), positions.end(), rng);
            for (int t = 0; t < o.flips; ++t) f.set(positions[static_cast<std::size_t>(t)], !f[positions[static_cast<std::size_t>(t)]]);
        }
        const BalancedCodebook book = BalancedCodebook::from_code(code);
        j["flips_per_block"] = o.flips;
        j["correction_radius"] = book.radius();
        c = correct_frames(book, std::move(c));
    }
    j["frames"] = c.frames.size();
    const BitWord payload = stream_decode(code, c);
    j["payload"] = payload.to_string();
    if (!o.expect.empty()) j["matches_expected"] = payload == BitWord::parse(o.expect);
    out << j.dump() << '\n';
    if (!o.expect.empty() && !j["matches_expected"].get<bool>()) throw VerificationFailure("payload differs from --expect");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variable-length balancing codes: codecs, redundancy analysis, trellis counts"};
    app.name("vlbal");
    app.require_subcommand(1);
    Options o;

    auto scheme_opts = [&o](CLI::App* cmd, std::vector<std::string> choices) {
        cmd->add_option("--scheme", o.scheme, "Balancing scheme")->required()->check(CLI::IsMember(std::move(choices)));
        cmd->add_option("-n", o.n, "Codeword length (even)");
        cmd->add_option("-q", o.q, "Target imbalance parameter")->check(CLI::NonNegativeNumber);
    };

    auto* encode = app.add_subcommand("encode", "Encode one message");
    scheme_opts(encode, {"a", "b", "c"});
    auto* in_opt = encode->add_option("--input", o.input, "Message bits");
    encode->add_option("--input-file", o.input_file, "File holding message bits")->excludes(in_opt);
    encode->add_option("--code", o.code_file, "Code-spec file (scheme c)");

    auto* decode = app.add_subcommand("decode", "Decode one codeword and prefix");
    scheme_opts(decode, {"a", "b", "c"});
    decode->add_option("--codeword", o.codeword, "Balanced codeword bits")->required();
    decode->add_option("--prefix", o.prefix, "Prefix bits (may be empty)");
    decode->add_option("--code", o.code_file, "Code-spec file (scheme c)");

    auto* analyze = app.add_subcommand("analyze", "Redundancy, gamma and bad-word analysis");
    analyze->require_subcommand(1);
    auto* redundancy = analyze->add_subcommand("redundancy", "Average redundancy report or table");
    auto* t1 = redundancy->add_flag("--table1", o.table1, "CSV of q = 0 redundancies for n = 8..512");
    redundancy->add_flag("--table2", o.table2, "CSV of q > 0 redundancies for n = 16..1000 (q defaults to 6)")->excludes(t1);
    redundancy->add_option("--scheme", o.scheme, "Scheme")->check(CLI::IsMember({"a", "b", "c", "optimal"}));
    redundancy->add_option("-n", o.n, "Codeword length (even)");
    redundancy->add_option("-q", o.q, "Target imbalance parameter")->check(CLI::NonNegativeNumber);
    redundancy->add_flag("--oracle", o.oracle, "Exhaustive simulation instead of closed forms");
    auto* gamma = analyze->add_subcommand("gamma", "Gamma-size distribution as CSV");
    scheme_opts(gamma, {"a", "b", "c"});
    gamma->add_flag("--oracle", o.oracle, "Exhaustive histogram instead of closed forms");
    auto* bad = analyze->add_subcommand("badwords", "Bad-word count");
    scheme_opts(bad, {"a", "b"});
    bad->add_flag("--oracle", o.oracle, "Also run the exhaustive census");

    auto* trellis = app.add_subcommand("trellis", "Trellis count for a cyclic code");
    trellis->add_option("--code", o.code_file, "Code-spec file")->required();
    trellis->add_flag("--gamma", o.want_gamma, "Gamma distribution");
    trellis->add_flag("--rho", o.want_rho, "Average redundancy");
    trellis->add_flag("--size", o.want_size, "Balanced codebook size");

    auto* oracle = app.add_subcommand("oracle", "Brute-force verification");
    oracle->require_subcommand(1);
    auto* verify = oracle->add_subcommand("verify", "Round trips and formula equivalence");
    scheme_opts(verify, {"a", "b", "c"});
    verify->add_option("--code", o.code_file, "Code-spec file (scheme c)");

    auto* stream = app.add_subcommand("stream", "Prefix-chained stream codec");
    stream->require_subcommand(1);
    auto* s_enc = stream->add_subcommand("encode", "Encode a bit stream into a container");
    s_enc->add_option("--code", o.code_file, "Code-spec file")->required();
    auto* s_in = s_enc->add_option("--input", o.input, "Payload bits");
    s_enc->add_option("--input-file", o.input_file, "File holding payload bits")->excludes(s_in);
    s_enc->add_option("--out", o.out_file, "Container output file");
    auto* s_dec = stream->add_subcommand("decode", "Decode a container");
    s_dec->add_option("--code", o.code_file, "Code-spec file")->required();
    s_dec->add_option("--in", o.in_file, "Container file")->required();
    s_dec->add_option("--flip-per-block", o.flips, "Random bit errors injected per block")->check(CLI::NonNegativeNumber);
    s_dec->add_option("--seed", o.seed, "Error-injection seed");
    s_dec->add_option("--expect", o.expect, "Expected payload bits; a mismatch exits with status 2");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitDomain;
    }

    try {
        if (encode->parsed()) cmd_encode(o, out);
        else if (decode->parsed()) cmd_decode(o, out);
        else if (redundancy->parsed()) {
            if (!o.table1 && !o.table2 && (o.scheme.empty() || o.n == 0)) throw DomainError("need --table1, --table2 or --scheme with -n");
            cmd_redundancy(o, out);
        } else if (gamma->parsed()) cmd_gamma(o, out);
        else if (bad->parsed()) cmd_badwords(o, out);
        else if (trellis->parsed()) cmd_trellis(o, out);
        else if (verify->parsed()) cmd_verify(o, out);
        else if (s_enc->parsed()) cmd_stream_encode(o, out);
        else if (s_dec->parsed()) cmd_stream_decode(o, out);
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace vlbal::cli
