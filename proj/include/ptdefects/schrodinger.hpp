#pragma once

#include <complex>

#include "ptdefects/fields.hpp"

namespace ptdefects {

/// How the quantum-fluctuation potential is evaluated.
enum class PotentialMode { Exact, ExpandedOrderK2, PoschlTellerLimit };

PotentialMode potential_mode_from_string(const std::string& name);
std::string to_string(PotentialMode mode);

struct QMPotentialSpec {
  DefectFamily family;
  DeformParam k;
  PotentialMode mode;
};

/// Fluctuation potential V(y) = u'''(y)/u'(y) of the Schroedinger-like
/// stability equation, in the requested evaluation mode.
double vqm(const QMPotentialSpec& spec, double y);

/// k^2 coefficient of the expansion of the exact potential about its
/// sech^2 (Poschl-Teller) limit.
double vqm_k2_coefficient(DefectFamily family, double y);

/// Value of the potential at |y| -> inf: 4, 4, 1.
double potential_asymptote(DefectFamily family);

/// The exact omega^2 = 0 eigenstate: deformed_field_deriv sampled on the
/// grid and normalized to unit discrete L2 norm (h * sum psi_i^2 = 1).
Profile zero_mode_exact(DefectFamily family, DeformParam k, const Grid& grid);

/// Unit-normalized bound states of V = 4 - 6 sech^2:
/// level 0: sqrt(3)/2 sech^2(y); level 1: sqrt(3/2) sinh(y) sech^2(y).
double pt_bound_mode(int level, double y);

/// Discrete eigenvalues of V = 4 - 6 sech^2: 0 and 3.
double pt_eigenvalue(int level);

/// Continuum dispersion omega^2(q) = 4 + q^2.
double continuum_omega2(double q);

/// Normalization box [-L, L] for the continuum modes.
struct ContinuumBox {
  double half_width;
  explicit ContinuumBox(double L);
};

/// Box-normalized scattering state at wave number q.
struct ContinuumMode {
  double q;
  ContinuumBox box;
  double normalization;  // N_q

  ContinuumMode(double q, ContinuumBox box);

  /// psi_q(y); rejects |y| > L (the mode lives inside the box).
  std::complex<double> psi(double y) const;
};

/// Closed-form N_q = 2L(4 + 5q^2 + q^4) - 6 tanh(L)(2 + q^2 - sech^2 L).
double continuum_norm_constant(double q, const ContinuumBox& box);

std::complex<double> pt_continuum_mode(double q, const ContinuumBox& box, double y);

}  // namespace ptdefects
