#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ptdefects {

/// The three defect families: a tanh kink and two bell-shaped lumps.
enum class DefectFamily { Phi4Kink, Chi4Lump, SineGordonLump };

/// Parses "phi4", "chi4" or "sg"; throws std::invalid_argument otherwise.
DefectFamily family_from_string(const std::string& name);
std::string to_string(DefectFamily family);

/// Deformation half-width k.  Every deformed quantity is even in k, so the
/// value is canonicalized to |k| on construction.  Below series_threshold
/// the closed forms are evaluated through their small-k Taylor branch
/// (they are 0/0 at k = 0).
class DeformParam {
 public:
  static constexpr double series_threshold = 1e-4;

  explicit DeformParam(double k);
  double value() const { return k_; }
  bool use_series() const { return k_ < series_threshold; }

 private:
  double k_;
};

/// Uniform 1D grid with n nodes on [y_min, y_max].
struct Grid {
  double y_min;
  double y_max;
  std::size_t n;

  Grid(double y_min, double y_max, std::size_t n);

  double spacing() const { return (y_max - y_min) / static_cast<double>(n - 1); }
  // exact at both ends so downstream range checks never see a 1-ulp overshoot
  double node(std::size_t i) const {
    return i + 1 == n ? y_max : y_min + spacing() * static_cast<double>(i);
  }
  std::vector<double> nodes() const;
};

/// Field (or wave-function) values sampled on a grid.
struct Profile {
  Grid grid;
  std::vector<double> values;
};

/// Primitive defects: tanh(y), sech^2(y), sech(y).
double primitive_field(DefectFamily family, double y);

/// Scalar-field potentials evaluated at a field value v:
/// (1-v^2)^2/2,  2 v^2 (1-v),  v^2 (1-v^2)/2.
double primitive_potential(DefectFamily family, double v);

/// Deformed profile: the symmetric difference quotient of the primitive
/// field's antiderivative over [y-k, y+k].
double deformed_field(DefectFamily family, DeformParam k, double y);

/// Spatial derivative of the deformed profile (the BPS superpotential
/// derivative u'(y)).
double deformed_field_deriv(DefectFamily family, DeformParam k, double y);

/// Energy density rho(y) = (deformed_field_deriv)^2.
double energy_density(DefectFamily family, DeformParam k, double y);

/// field(+inf) - field(-inf), from the analytic asymptotes: 2 for the kink,
/// 0 for both lumps.
double topological_charge(DefectFamily family, DeformParam k);

/// Closed-form mass M(k) = \int rho dy.  Limits at k -> 0: 4/3, 16/15, 2/3.
double topological_mass_closed(DefectFamily family, DeformParam k);

/// Independent oracle: adaptive quadrature of the energy density over the
/// real line.  Throws NumericsError if the quadrature does not converge.
double topological_mass_quad(DefectFamily family, DeformParam k, double tol = 1e-10);

/// (field value, potential value) pairs with U = deriv^2 / 2, suitable for
/// plotting the effective potential against the field.
std::vector<std::pair<double, double>> parametric_potential(DefectFamily family,
                                                            DeformParam k,
                                                            const Grid& grid);

namespace detail {

// Both branches of the deformed quantities, exposed for branch-seam tests.
double deformed_field_closed(DefectFamily family, double k, double y);
double deformed_field_series(DefectFamily family, double k, double y);
double deformed_field_deriv_closed(DefectFamily family, double k, double y);
double deformed_field_deriv_series(DefectFamily family, double k, double y);
double topological_mass_closed_branch(DefectFamily family, double k);
double topological_mass_limit_branch(DefectFamily family, double k);

double sech(double y);

}  // namespace detail

}  // namespace ptdefects
