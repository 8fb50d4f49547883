#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptdefects/fields.hpp"
#include "ptdefects/schrodinger.hpp"

namespace ptdefects {

/// Thrown when an iterative numerical procedure fails to converge.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature on [a, b] to absolute
/// tolerance tol.  On subdivision exhaustion returns the best estimate
/// with converged = false.
QuadResult quad(const std::function<double(double)>& f, double a, double b, double tol);

/// Integral over the real line via the substitution y = t/(1 - t^2);
/// intended for exponentially decaying integrands.
QuadResult quad_line(const std::function<double(double)>& f, double tol);

/// Eigenpairs of -d^2/dy^2 + V on a uniform grid with Dirichlet edges.
struct Spectrum {
  std::vector<double> eigenvalues;        // ascending
  std::vector<Profile> eigenfunctions;    // unit discrete L2 norm
  Grid grid;
};

/// Lowest m eigenpairs of the symmetric tridiagonal central-difference
/// discretization.  Eigenvalues by Sturm-sequence bisection, vectors by
/// inverse iteration.  Throws NumericsError on non-convergence and
/// std::invalid_argument if m exceeds the interior dimension.
Spectrum solve_spectrum(const std::function<double(double)>& potential,
                        const Grid& grid, std::size_t m);

Spectrum solve_spectrum(const QMPotentialSpec& spec, const Grid& grid, std::size_t m);

}  // namespace ptdefects
