#include "brauer/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace brauer;

namespace {

Flavor flavor_arg(const std::string& s)
{
    auto f = parse_flavor(s);
    if (!f) throw std::invalid_argument("unknown flavor " + s);
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Murphy bases of Brauer algebras and kernels of tensor-space representations";
    py::register_exception<CapExceeded>(m, "CapExceeded");

    // everything structured crosses as JSON text; the package wrapper decodes it
    m.def(
        "basis_json",
        [](const std::string& flavor, int r, bool dual) {
            py::gil_scoped_release nogil;
            MurphyBasis b(r, BasisKind{flavor_arg(flavor) != Flavor::symmetric, dual});
            return murphy_json(b).dump();
        },
        py::arg("flavor"), py::arg("r"), py::arg("dual") = false);
    m.def(
        "split_basis_json",
        [](const std::string& flavor, int N, int r, int jobs) {
            py::gil_scoped_release nogil;
            return split_json(SplitBasis(flavor_arg(flavor), N, r, jobs)).dump();
        },
        py::arg("flavor"), py::arg("N"), py::arg("r"), py::arg("jobs") = 1);
    m.def(
        "certify_json",
        [](const std::string& flavor, int N, int r, long p, std::size_t max_tensor_dim, int jobs) {
            py::gil_scoped_release nogil;
            CertifyOptions o;
            o.p = p;
            o.max_tensor_dim = max_tensor_dim;
            o.jobs = jobs;
            return certificate_json(certify_sft(flavor_arg(flavor), N, r, o)).dump();
        },
        py::arg("flavor"), py::arg("N"), py::arg("r"), py::arg("p") = 0, py::arg("max_tensor_dim") = 65536,
        py::arg("jobs") = 1);
    m.def(
        "dims_json",
        [](const std::string& flavor, int N, int max_r, long p, std::size_t max_tensor_dim, int jobs) {
            py::gil_scoped_release nogil;
            return dims_json(dims_table(flavor_arg(flavor), N, max_r, max_r, max_tensor_dim, p, jobs)).dump();
        },
        py::arg("flavor"), py::arg("N"), py::arg("max_r"), py::arg("p") = 0, py::arg("max_tensor_dim") = 65536,
        py::arg("jobs") = 1);
    m.def("diagram_count", [](int r) { return all_diagrams(r).size(); }, py::arg("r"));
}
