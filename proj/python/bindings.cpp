#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grassorbit/error.hpp"
#include "grassorbit/parse.hpp"
#include "grassorbit/wedge.hpp"

namespace py = pybind11;
using namespace grassorbit;

namespace {

using Rows = std::vector<std::vector<Code>>;

Rows to_rows(const Matrix& m) {
  Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

Matrix from_rows(const Field& f, const Rows& rows) {
  if (rows.empty() || rows.front().empty()) throw UsageError("empty matrix");
  std::vector<Code> data;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw UsageError("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(f, rows.size(), rows.front().size(), std::move(data));
}

Field make_field(Code q, const std::optional<std::string>& modulus) {
  const Field guess = Field::of_order(q);
  if (!modulus) return guess;
  const Field base = Field::prime(guess.characteristic());
  return Field::extension(guess.characteristic(), parse_polynomial(base, *modulus).coeffs());
}

}  // namespace

PYBIND11_MODULE(grassorbit, m) {
  m.doc() = "Cyclic orbit codes in the Grassmannian and their Plücker coordinates";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<AlgebraError>(m, "AlgebraError", base.ptr());

  py::class_<Field>(m, "Field")
      .def(py::init(&make_field), py::arg("q"), py::arg("modulus") = py::none())
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("__repr__", &Field::name);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init(&parse_polynomial), py::arg("field"), py::arg("text"))
      .def_property_readonly("coeffs", &Polynomial::coeffs)
      .def("is_irreducible", [](const Polynomial& p) { return is_irreducible(p); })
      .def("is_primitive", [](const Polynomial& p) { return is_primitive(p); })
      .def("__mul__", &Polynomial::operator*)
      .def("__mod__", [](const Polynomial& a, const Polynomial& b) { return a % b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__str__", [](const Polynomial& p) { return to_string(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + to_string(p) + ")"; });

  py::class_<GeneratorSpec>(m, "Generator")
      .def(py::init([](const Field& f, const std::string& blocks) {
             return GeneratorSpec(f, parse_polynomial_list(f, blocks));
           }),
           py::arg("field"), py::arg("blocks"))
      .def_property_readonly("n", &GeneratorSpec::n)
      .def("classify", [](const GeneratorSpec& g) { return to_string(classify(g)); })
      .def("order", &generator_order)
      .def("matrix", [](const GeneratorSpec& g) { return to_rows(generator_matrix(g)); });

  py::class_<Subspace>(m, "Subspace")
      .def(py::init([](const Field& f, const Rows& rows) { return Subspace(from_rows(f, rows)); }),
           py::arg("field"), py::arg("rows"))
      .def(py::init([](const Field& f, const std::string& text) {
             return Subspace(parse_matrix(f, text));
           }),
           py::arg("field"), py::arg("text"))
      .def_property_readonly("basis", [](const Subspace& s) { return to_rows(s.basis()); })
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("ambient", &Subspace::ambient)
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; })
      .def("__repr__",
           [](const Subspace& s) { return "Subspace(" + format_matrix(s.basis()) + ")"; });

  m.def("subspace_distance", &subspace_distance);
  m.def("plucker_direct", [](const Subspace& u) { return plucker_direct(u).coords(); });
  m.def("plucker_orbit", [](const GeneratorSpec& g, const Subspace& seed) {
    std::vector<std::vector<Code>> out;
    for (const auto& p : plucker_orbit(g, seed)) out.push_back(p.coords());
    return out;
  });
  m.def("orbit", [](const GeneratorSpec& g, const Subspace& seed) {
    const OrbitCode code = orbit(g, seed);
    py::dict d;
    py::list words;
    for (const auto& w : code.codewords) words.append(py::cast(w));
    d["codewords"] = words;
    d["orbit_length"] = code.orbit_length;
    d["min_distance"] = code.min_distance ? py::cast(*code.min_distance) : py::none();
    return d;
  });
  m.def("ball_membership", &ball_membership, py::arg("center"), py::arg("query"), py::arg("t"));
  m.def("ball_membership_by_distance", &ball_membership_by_distance, py::arg("center"),
        py::arg("query"), py::arg("t"));
  m.def("enumerate_grassmannian",
        [](const Field& f, int k, int n) { return enumerate_grassmannian(f, k, n); });
  m.def("compound_matrix", [](const Field& f, const Rows& a, int k) {
    return to_rows(compound_matrix(from_rows(f, a), k));
  });
  m.def("wedge_string", [](const GeneratorSpec& g, const Subspace& u) {
    return format_wedge(wedge_of(g, u));
  });
}
