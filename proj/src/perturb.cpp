#include "ptdefects/perturb.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ptdefects/numerics.hpp"
#include "ptdefects/schrodinger.hpp"

namespace ptdefects {

double delta_v(DefectFamily family, double y) {
  if (!std::isfinite(y)) throw std::invalid_argument("y must be finite");
  return vqm_k2_coefficient(family, y);
}

double first_order_shift(const std::function<double(double)>& state_density,
                         DefectFamily family, DeformParam k, double b, double tol) {
  if (!(b > 0.0)) throw std::invalid_argument("integration bound must be positive");
  const auto integrand = [&state_density, family](double y) {
    return state_density(y) * delta_v(family, y);
  };
  const QuadResult r = std::isinf(b) ? quad_line(integrand, tol)
                                     : quad(integrand, -b, b, tol);
  if (!r.converged)
    throw NumericsError("energy-shift quadrature did not converge; error estimate " +
                        std::to_string(r.error_estimate));
  return k.value() * k.value() * r.value;
}

double omega0_perturbed(DeformParam k) {
  const double k2 = k.value() * k.value();
  return 32.0 / 105.0 * k2 * k2;
}

double omega1_perturbed(DeformParam k) {
  const double k2 = k.value() * k.value();
  return 3.0 - 8.0 / 5.0 * k2 + 24.0 / 35.0 * k2 * k2;
}

double omega2_perturbed(DeformParam k, double box_half_width) {
  const double L = box_half_width;
  if (!std::isfinite(L) || !(L > 0.0))
    throw std::invalid_argument("box half-width must be positive and finite");
  // sech^7 L (360 sinh L - 147 sinh 3L + 31 sinh 5L - 2 sinh 7L)
  // evaluated through w = e^{-2L}: sech^7 L sinh mL
  //   = 64 e^{(m-7)L} (1 - w^m) / (1 + w)^7
  const double w = std::exp(-2.0 * L);
  const auto sech7_sinh = [L, w](int m) {
    double wm = 1.0;
    for (int i = 0; i < m; ++i) wm *= w;
    return std::exp((m - 7.0) * L) * (1.0 - wm);
  };
  double onepw7 = 1.0;
  for (int i = 0; i < 7; ++i) onepw7 *= 1.0 + w;
  const double num = 64.0 *
                     (360.0 * sech7_sinh(1) - 147.0 * sech7_sinh(3) +
                      31.0 * sech7_sinh(5) - 2.0 * sech7_sinh(7)) /
                     onepw7;
  const double sL = detail::sech(L);
  const double den = 120.0 * L + 90.0 * sL * sL * std::tanh(L);
  const double k2 = k.value() * k.value();
  return 4.0 + k2 * num / den;
}

double f_factor(double q, double box_half_width) {
  const double L = box_half_width;
  if (!std::isfinite(L) || !(L > 0.0))
    throw std::invalid_argument("box half-width must be positive and finite");
  const double q2 = q * q;
  const double s2 = detail::sech(L) * detail::sech(L);
  const double num = (4.0 + q2) * (41.0 + 35.0 * q2) * s2 -
                     63.0 * (4.0 + q2) * s2 * s2 + 135.0 * s2 * s2 * s2 -
                     4.0 * (4.0 + q2) * (2.0 + 5.0 * q2);
  const double den =
      (4.0 + 5.0 * q2 + q2 * q2) * L - 3.0 * std::tanh(L) * (2.0 + q2 - s2);
  if (std::abs(den) < 1e-12)
    throw std::domain_error("F(q, L) denominator vanishes at this box size");
  return num / den;
}

double omega_q_perturbed(double q, DeformParam k, double box_half_width) {
  const double k2 = k.value() * k.value();
  return 4.0 + q * q +
         2.0 * k2 * std::tanh(box_half_width) / 15.0 * f_factor(q, box_half_width);
}

PerturbedLevel omega_perturbed(const LevelSpec& level, DeformParam k) {
  const double omega2 = std::visit(
      [&k](const auto& spec) -> double {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, LevelZero>)
          return omega0_perturbed(k);
        else if constexpr (std::is_same_v<T, LevelOne>)
          return omega1_perturbed(k);
        else if constexpr (std::is_same_v<T, LevelTwo>)
          return omega2_perturbed(k, spec.box_half_width);
        else
          return omega_q_perturbed(spec.q, k, spec.box_half_width);
      },
      level);
  return PerturbedLevel{level, k, omega2};
}

}  // namespace ptdefects
