#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vlbal/errors.hpp"
#include "vlbal/lattice.hpp"
#include "vlbal/report.hpp"
#include "vlbal/scheme_a.hpp"
#include "vlbal/scheme_b.hpp"
#include "vlbal/scheme_c.hpp"
#include "vlbal/stream.hpp"
#include "vlbal/trellis.hpp"

namespace py = pybind11;
using namespace vlbal;

namespace {

py::int_ to_py(const BigCount& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigCount>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

py::dict to_py(const std::map<int, BigCount>& values) {
    py::dict out;
    for (const auto& [k, v] : values) out[py::int_(k)] = to_py(v);
    return out;
}

py::tuple encoded(const EncodeResult& r) {
    return py::make_tuple(r.codeword.to_string(), r.prefix.to_string(), r.tau);
}

BitWord bits(const std::string& s) { return BitWord::parse(s); }

}  // namespace

PYBIND11_MODULE(_vlbal, m) {
    m.doc() = "Variable-length balancing codes";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

    m.def("encode_a", [](const std::string& x, int q) { return encoded(encode_a(bits(x), q)); }, py::arg("message"),
          py::arg("q") = 0, "Returns (codeword, prefix, index).");
    m.def("decode_a", [](const std::string& c, const std::string& p, std::size_t n, int q) { return decode_a(bits(c), bits(p), n, q).to_string(); },
          py::arg("codeword"), py::arg("prefix"), py::arg("n"), py::arg("q") = 0);
    m.def("encode_b", [](const std::string& x, int q) { return encoded(encode_b(bits(x), q)); }, py::arg("message"),
          py::arg("q") = 0, "Returns (codeword, prefix, index).");
    m.def("decode_b", [](const std::string& c, const std::string& p, std::size_t n, int q) { return decode_b(bits(c), bits(p), n, q).to_string(); },
          py::arg("codeword"), py::arg("prefix"), py::arg("n"), py::arg("q") = 0);

    py::class_<CyclicCode>(m, "CyclicCode")
        .def_static("from_generator", [](std::size_t n, const std::string& g) { return CyclicCode::from_generator(n, Gf2Poly::parse(g)); },
                    py::arg("n"), py::arg("generator"))
        .def_static("full_space", &CyclicCode::full_space, py::arg("n"))
        .def_static("load", [](const std::string& path) { return load_code_spec(path); }, py::arg("path"))
        .def_property_readonly("length", &CyclicCode::length)
        .def_property_readonly("dimension", &CyclicCode::dimension)
        .def("encode", [](const CyclicCode& c, const std::string& msg) { return c.encode_systematic(bits(msg)).to_string(); })
        .def("contains", [](const CyclicCode& c, const std::string& w) { return c.contains(bits(w)); })
        .def("min_distance", &CyclicCode::min_distance);

    m.def("encode_c", [](const CyclicCode& code, const std::string& x) { return encoded(encode_c(code, bits(x))); },
          py::arg("code"), py::arg("codeword"), "Returns (balanced word, prefix, shift).");
    m.def("decode_c", [](const CyclicCode& code, const std::string& c, const std::string& p) { return decode_c(code, bits(c), bits(p)).to_string(); },
          py::arg("code"), py::arg("balanced"), py::arg("prefix"));
    m.def("balanced_code", [](const CyclicCode& code) {
        std::vector<std::string> out;
        for (const auto& w : build_balanced_code(code)) out.push_back(w.to_string());
        return out;
    });

    m.def("stream_encode", [](const CyclicCode& code, const std::string& payload) {
        const auto bytes = serialize(stream_encode(code, bits(payload)).container);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    });
    m.def("stream_decode", [](const CyclicCode& code, const py::bytes& data) {
        const std::string raw = data;
        const auto container = parse_container(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
        return stream_decode(code, container).to_string();
    });

    m.def("rho_a", &rho_a_bound, py::arg("n"), py::arg("q") = 0);
    m.def("rho_b", &rho_b, py::arg("n"), py::arg("q") = 0);
    m.def("rho_b_logspace", &rho_b_logspace, py::arg("n"), py::arg("q") = 0);
    m.def("rho_c_fullspace", &rho_c_fullspace, py::arg("n"));
    m.def("rho_c", &rho_c, py::arg("code"));
    m.def("optimal_redundancy", &optimal_redundancy, py::arg("n"), py::arg("q") = 0);

    m.def("count_bad_a", [](int n, int q) { return to_py(count_bad(n, q)); }, py::arg("n"), py::arg("q"));
    m.def("count_bad_b", [](int n, int q) { return to_py(count_bad_b(n, q)); }, py::arg("n"), py::arg("q"));
    m.def("gamma_a", [](int n, int q) { return to_py(gamma_distribution_a(n, q)); }, py::arg("n"), py::arg("q") = 0);
    m.def("gamma_b", [](int n, int q) { return to_py(gamma_distribution_b(n, q)); }, py::arg("n"), py::arg("q") = 0);
    m.def("gamma_fullspace", [](int n) { return to_py(gamma_distribution_fullspace(n)); }, py::arg("n"));
    m.def("trellis_gamma", [](const CyclicCode& code) { return to_py(build_and_count(code).gamma); }, py::arg("code"));

    m.def("count_banded", [](std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1, std::int64_t lower, std::int64_t upper) {
        return to_py(count_banded({x0, y0}, {x1, y1}, PathBand(lower, upper)));
    }, py::arg("x0"), py::arg("y0"), py::arg("x1"), py::arg("y1"), py::arg("lower"), py::arg("upper"));
}
