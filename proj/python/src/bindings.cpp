#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spg/error.hpp"
#include "spg/graph.hpp"
#include "spg/group.hpp"
#include "spg/poly.hpp"
#include "spg/spectra.hpp"
#include "spg/verify.hpp"

namespace py = pybind11;

namespace {

// Big integers cross the boundary as Python ints built from decimal strings.
py::list to_pyints(const spg::IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(py::int_(py::str(c.get_str())));
  return out;
}

py::list matrix_rows(const spg::IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.size(); ++j) row.append(m(i, j).get_si());
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strong power graphs of finite groups: exact characteristic polynomials and spectra.";

  // Raised for every library error; `code` holds the error kind name.
  static PyObject* error_type = PyErr_NewException("spgraph._core.SpgError", PyExc_ValueError, nullptr);
  m.attr("SpgError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const spg::Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("code") = spg::errc_name(e.code());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<spg::GroupSpec>(m, "Group")
      .def_property_readonly("order", &spg::GroupSpec::order)
      .def_property_readonly("is_cyclic", [](const spg::GroupSpec& g) { return spg::is_cyclic(g); })
      .def("describe", &spg::GroupSpec::describe)
      .def("label", &spg::GroupSpec::label)
      .def("__repr__", [](const spg::GroupSpec& g) { return "<Group " + g.describe() + ">"; });

  m.def("cyclic", &spg::GroupSpec::cyclic, py::arg("n"));
  m.def("direct_product", &spg::GroupSpec::direct_product, py::arg("orders"));
  m.def("dihedral", &spg::GroupSpec::dihedral, py::arg("m"));
  m.def("parse_group", &spg::parse_group_spec, py::arg("spec"));
  m.def("cayley_from_json", [](const std::string& text) { return spg::load_cayley_table(nlohmann::json::parse(text)); },
        py::arg("text"));

  m.def("totient", &spg::totient);
  m.def("is_prime", &spg::is_prime);

  m.def("edges", [](const spg::GroupSpec& g) { return spg::strong_power_graph(g).edges(); },
        "Edges (u < v) of the strong power graph.");
  m.def("is_complete", [](const spg::GroupSpec& g) { return spg::is_complete(spg::strong_power_graph(g)); });
  m.def("adjacency_matrix", [](const spg::GroupSpec& g) {
    return matrix_rows(spg::adjacency_matrix(spg::strong_power_graph(g)));
  });
  m.def("distance_matrix", [](const spg::GroupSpec& g) {
    return matrix_rows(spg::distance_matrix(spg::strong_power_graph(g)));
  });

  m.def("distance_charpoly_closed", [](std::uint64_t n) { return to_pyints(spg::distance_charpoly_closed(n)); },
        "Ascending integer coefficients of the closed-form distance polynomial of Z_n.");
  m.def("adjacency_charpoly_closed", [](std::uint64_t n) { return to_pyints(spg::adjacency_charpoly_closed(n)); },
        "Ascending integer coefficients of the closed-form adjacency polynomial of Z_n.");
  m.def("spectral_radius_distance", &spg::spectral_radius_distance);
  m.def("spectral_radius_adjacency", &spg::spectral_radius_adjacency);

  // Documents are returned as JSON text; the Python package decodes them.
  m.def("_charpoly_json", [](const spg::GroupSpec& g, const std::string& matrix) {
    return spg::charpoly_document(g, spg::matrix_kind_from_string(matrix)).dump();
  });
  m.def("_spectrum_json", [](const spg::GroupSpec& g, const std::string& matrix, double tol) {
    return spg::spectrum_document(g, spg::matrix_kind_from_string(matrix), tol).dump();
  });
  m.def("_verify_json", [](std::uint64_t lo, std::uint64_t hi, double tol, unsigned workers) {
    spg::VerificationReport report;
    {
      py::gil_scoped_release release;
      report = spg::run_verification(lo, hi, tol, workers);
    }
    return spg::to_json(report).dump();
  });
}
