#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptdefects/fields.hpp"
#include "ptdefects/numerics.hpp"
#include "ptdefects/perturb.hpp"
#include "ptdefects/schrodinger.hpp"

namespace py = pybind11;
using namespace ptdefects;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deformed-defect profiles, fluctuation spectra and continuum modes";
  m.attr("__version__") = "0.1.0";

  py::enum_<DefectFamily>(m, "DefectFamily")
      .value("Phi4Kink", DefectFamily::Phi4Kink)
      .value("Chi4Lump", DefectFamily::Chi4Lump)
      .value("SineGordonLump", DefectFamily::SineGordonLump);
  m.def("family_from_string", &family_from_string, py::arg("name"));

  py::enum_<PotentialMode>(m, "PotentialMode")
      .value("Exact", PotentialMode::Exact)
      .value("ExpandedOrderK2", PotentialMode::ExpandedOrderK2)
      .value("PoschlTellerLimit", PotentialMode::PoschlTellerLimit);

  py::class_<DeformParam>(m, "DeformParam")
      .def(py::init<double>(), py::arg("k"))
      .def_property_readonly("value", &DeformParam::value)
      .def_property_readonly("use_series", &DeformParam::use_series)
      .def("__repr__", [](const DeformParam& k) {
        return "DeformParam(" + std::to_string(k.value()) + ")";
      });

  py::class_<Grid>(m, "Grid")
      .def(py::init<double, double, std::size_t>(), py::arg("y_min"),
           py::arg("y_max"), py::arg("n"))
      .def_readonly("y_min", &Grid::y_min)
      .def_readonly("y_max", &Grid::y_max)
      .def_readonly("n", &Grid::n)
      .def_property_readonly("spacing", &Grid::spacing)
      .def("nodes", &Grid::nodes);

  py::class_<Profile>(m, "Profile")
      .def_readonly("grid", &Profile::grid)
      .def_readonly("values", &Profile::values);

  // fields
  m.def("primitive_field", &primitive_field, py::arg("family"), py::arg("y"));
  m.def("primitive_potential", &primitive_potential, py::arg("family"), py::arg("v"));
  m.def(
      "deformed_field",
      [](DefectFamily f, double k, double y) {
        return deformed_field(f, DeformParam(k), y);
      },
      py::arg("family"), py::arg("k"), py::arg("y"));
  m.def(
      "deformed_field_deriv",
      [](DefectFamily f, double k, double y) {
        return deformed_field_deriv(f, DeformParam(k), y);
      },
      py::arg("family"), py::arg("k"), py::arg("y"));
  m.def(
      "energy_density",
      [](DefectFamily f, double k, double y) {
        return energy_density(f, DeformParam(k), y);
      },
      py::arg("family"), py::arg("k"), py::arg("y"));
  m.def(
      "topological_charge",
      [](DefectFamily f, double k) { return topological_charge(f, DeformParam(k)); },
      py::arg("family"), py::arg("k"));
  m.def(
      "topological_mass_closed",
      [](DefectFamily f, double k) {
        return topological_mass_closed(f, DeformParam(k));
      },
      py::arg("family"), py::arg("k"));
  m.def(
      "topological_mass_quad",
      [](DefectFamily f, double k, double tol) {
        return topological_mass_quad(f, DeformParam(k), tol);
      },
      py::arg("family"), py::arg("k"), py::arg("tol") = 1e-10);
  m.def(
      "parametric_potential",
      [](DefectFamily f, double k, const Grid& grid) {
        return parametric_potential(f, DeformParam(k), grid);
      },
      py::arg("family"), py::arg("k"), py::arg("grid"));

  // schrodinger
  m.def(
      "vqm",
      [](DefectFamily f, double k, PotentialMode mode, double y) {
        return vqm(QMPotentialSpec{f, DeformParam(k), mode}, y);
      },
      py::arg("family"), py::arg("k"), py::arg("mode"), py::arg("y"));
  m.def("potential_asymptote", &potential_asymptote, py::arg("family"));
  m.def(
      "zero_mode_exact",
      [](DefectFamily f, double k, const Grid& grid) {
        return zero_mode_exact(f, DeformParam(k), grid);
      },
      py::arg("family"), py::arg("k"), py::arg("grid"));
  m.def("pt_bound_mode", &pt_bound_mode, py::arg("level"), py::arg("y"));
  m.def("pt_eigenvalue", &pt_eigenvalue, py::arg("level"));
  m.def("continuum_omega2", &continuum_omega2, py::arg("q"));
  m.def(
      "continuum_norm_constant",
      [](double q, double L) { return continuum_norm_constant(q, ContinuumBox(L)); },
      py::arg("q"), py::arg("L"));
  m.def(
      "pt_continuum_mode",
      [](double q, double L, double y) {
        return pt_continuum_mode(q, ContinuumBox(L), y);
      },
      py::arg("q"), py::arg("L"), py::arg("y"));

  // perturb
  m.def("delta_v", &delta_v, py::arg("family"), py::arg("y"));
  m.def(
      "first_order_shift",
      [](const std::function<double(double)>& density, DefectFamily f, double k,
         double b, double tol) {
        return first_order_shift(density, f, DeformParam(k), b, tol);
      },
      py::arg("state_density"), py::arg("family"), py::arg("k"), py::arg("b"),
      py::arg("tol") = 1e-10);
  m.def(
      "omega0_perturbed", [](double k) { return omega0_perturbed(DeformParam(k)); },
      py::arg("k"));
  m.def(
      "omega1_perturbed", [](double k) { return omega1_perturbed(DeformParam(k)); },
      py::arg("k"));
  m.def(
      "omega2_perturbed",
      [](double k, double L) { return omega2_perturbed(DeformParam(k), L); },
      py::arg("k"), py::arg("L"));
  m.def(
      "omega_q_perturbed",
      [](double q, double k, double L) {
        return omega_q_perturbed(q, DeformParam(k), L);
      },
      py::arg("q"), py::arg("k"), py::arg("L"));
  m.def("f_factor", &f_factor, py::arg("q"), py::arg("L"));

  // numerics
  py::class_<QuadResult>(m, "QuadResult")
      .def_readonly("value", &QuadResult::value)
      .def_readonly("error_estimate", &QuadResult::error_estimate)
      .def_readonly("evaluations", &QuadResult::evaluations)
      .def_readonly("converged", &QuadResult::converged);
  m.def(
      "quad",
      [](const std::function<double(double)>& f, double a, double b, double tol) {
        return quad(f, a, b, tol);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);
  m.def(
      "quad_line",
      [](const std::function<double(double)>& f, double tol) {
        return quad_line(f, tol);
      },
      py::arg("f"), py::arg("tol") = 1e-10);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("eigenfunctions", &Spectrum::eigenfunctions)
      .def_readonly("grid", &Spectrum::grid);
  m.def(
      "solve_spectrum",
      [](DefectFamily f, double k, PotentialMode mode, const Grid& grid,
         std::size_t levels) {
        return solve_spectrum(QMPotentialSpec{f, DeformParam(k), mode}, grid, levels);
      },
      py::arg("family"), py::arg("k"), py::arg("mode"), py::arg("grid"),
      py::arg("levels"));
  m.def(
      "solve_spectrum_potential",
      [](const std::function<double(double)>& potential, const Grid& grid,
         std::size_t levels) { return solve_spectrum(potential, grid, levels); },
      py::arg("potential"), py::arg("grid"), py::arg("levels"));

  py::register_exception<NumericsError>(m, "NumericsError", PyExc_RuntimeError);
}
