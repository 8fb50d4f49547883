#pragma once

#include <functional>
#include <variant>

#include "ptdefects/fields.hpp"

namespace ptdefects {

/// k^2 coefficient of the fluctuation potential about its sech^2 limit;
/// for the kink family: 14 sech^4(y) - 12 sech^2(y).
double delta_v(DefectFamily family, double y);

/// First-order energy shift k^2 \int_{-b}^{b} |psi|^2 deltaV dy by adaptive
/// quadrature; b may be infinity (bound levels) or the box half-width L.
/// Throws NumericsError if the quadrature does not converge.
double first_order_shift(const std::function<double(double)>& state_density,
                         DefectFamily family, DeformParam k, double b,
                         double tol = 1e-10);

struct LevelZero {};
struct LevelOne {};
struct LevelTwo {
  double box_half_width;
};
struct LevelContinuum {
  double q;
  double box_half_width;
};
using LevelSpec = std::variant<LevelZero, LevelOne, LevelTwo, LevelContinuum>;

struct PerturbedLevel {
  LevelSpec level;
  DeformParam k;
  double omega2;
};

/// Closed-form perturbed eigenvalues (all even in k):
///   omega0^2(k) = (32/105) k^4
///   omega1^2(k) = 3 - (8/5) k^2 + (24/35) k^4
///   omega2^2(k, L) = 4 + k^2 sech^7(L) (360 sinh L - 147 sinh 3L
///                    + 31 sinh 5L - 2 sinh 7L) / (120 L + 90 sech^2 L tanh L)
///   omega_q^2(k, L) = 4 + q^2 + 2 k^2 (tanh L / 15) F(q, L)
PerturbedLevel omega_perturbed(const LevelSpec& level, DeformParam k);

double omega0_perturbed(DeformParam k);
double omega1_perturbed(DeformParam k);
double omega2_perturbed(DeformParam k, double box_half_width);
double omega_q_perturbed(double q, DeformParam k, double box_half_width);

/// Box-size factor of the continuum shift; vanishes as L -> inf.  Throws
/// std::domain_error if the denominator magnitude falls below 1e-12.
double f_factor(double q, double box_half_width);

}  // namespace ptdefects
