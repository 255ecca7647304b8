// pybind11 bindings for the core generators and metrics.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "emn/bench.hpp"
#include "emn/gamma.hpp"
#include "emn/generators.hpp"
#include "emn/mt19937.hpp"
#include "emn/sha256.hpp"
#include "emn/stats.hpp"

namespace py = pybind11;

namespace {

std::vector<std::uint8_t> to_byte_vector(const py::bytes& data) {
    const std::string_view view = data;
    return {view.begin(), view.end()};
}

emn::Block256 block_from_hex(const std::string& hex) {
    return emn::Block256::from_hex(hex);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entropy-mixing RNG and randomness evaluation core";

    py::class_<emn::Block256>(m, "Block256")
        .def_static("from_hex", &block_from_hex)
        .def("to_hex", &emn::Block256::to_hex)
        .def("__xor__",
             [](const emn::Block256& a, const emn::Block256& b) { return a ^ b; })
        .def("__eq__",
             [](const emn::Block256& a, const emn::Block256& b) { return a == b; });

    m.def("sha256_hex", [](const py::bytes& data) {
        return emn::sha256(to_byte_vector(data)).to_hex();
    });

    py::class_<emn::Mt19937>(m, "Mt19937")
        .def(py::init<std::uint32_t>(), py::arg("seed") = 5489u)
        .def(py::init([](const std::vector<std::uint32_t>& key) {
                 return emn::Mt19937(std::span<const std::uint32_t>(key));
             }),
             py::arg("key"))
        .def("next_u32", &emn::Mt19937::next_u32)
        .def("next_block", &emn::Mt19937::next_block);

    py::class_<emn::EmnGenerator>(m, "EmnGenerator")
        .def(py::init([](const std::string& seed_hex, std::uint64_t injection_frequency,
                         bool persist_mixed_state) {
                 return emn::EmnGenerator(
                     std::make_unique<emn::MtSource>(block_from_hex(seed_hex)),
                     injection_frequency, emn::os_entropy_fn(), persist_mixed_state);
             }),
             py::arg("seed_hex"), py::arg("injection_frequency") = 1,
             py::arg("persist_mixed_state") = false)
        .def("next_block", &emn::EmnGenerator::next_block)
        .def_property_readonly("cycle", &emn::EmnGenerator::cycle)
        .def_property_readonly("hash_invocations", &emn::EmnGenerator::hash_invocations)
        .def("bytes", [](emn::EmnGenerator& self, std::size_t n) {
            const auto sample = emn::source_bytes(self, n);
            return py::bytes(reinterpret_cast<const char*>(sample.bytes.data()),
                             sample.bytes.size());
        });

    m.def("os_entropy", [](std::size_t n) {
        const auto bytes = emn::os_entropy(n);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    });

    m.def("mt_bytes", [](const std::string& seed_hex, std::size_t n) {
        emn::MtSource src(block_from_hex(seed_hex));
        const auto sample = emn::source_bytes(src, n);
        return py::bytes(reinterpret_cast<const char*>(sample.bytes.data()),
                         sample.bytes.size());
    });

    m.def("gamma_q", &emn::gamma_q, py::arg("a"), py::arg("x"));
    m.def("chi_squared_sf", &emn::chi_squared_sf, py::arg("x"), py::arg("dof"));

    m.def("chi_squared_test", [](const py::bytes& data) {
        const auto result = emn::chi_squared_test(to_byte_vector(data));
        return py::make_tuple(result.statistic, result.p_value, result.dof);
    });
    m.def("shannon_entropy", [](const py::bytes& data) {
        return emn::shannon_entropy(to_byte_vector(data)).bits;
    });
    m.def("predictability", [](const py::bytes& data) {
        return emn::predictability(to_byte_vector(data)).r;
    });
    m.def("runs_test", [](const py::bytes& data) {
        const auto result = emn::runs_test(to_byte_vector(data));
        return py::make_tuple(result.observed, result.expected, result.z_score);
    });
    m.def("autocorrelation", [](const py::bytes& data, std::size_t max_lag) {
        return emn::autocorrelation(to_byte_vector(data), max_lag).correlation;
    });
    m.def("power_spectrum", [](const py::bytes& data, std::size_t n_fft) {
        const auto series = emn::power_spectrum(to_byte_vector(data), n_fft);
        return py::make_tuple(series.frequencies, series.power);
    });
}
