#include "ptdefects/fields.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptdefects/numerics.hpp"

namespace ptdefects {

DefectFamily family_from_string(const std::string& name) {
  if (name == "phi4") return DefectFamily::Phi4Kink;
  if (name == "chi4") return DefectFamily::Chi4Lump;
  if (name == "sg") return DefectFamily::SineGordonLump;
  throw std::invalid_argument("unknown defect family '" + name + "' (expected phi4, chi4 or sg)");
}

std::string to_string(DefectFamily family) {
  switch (family) {
    case DefectFamily::Phi4Kink: return "phi4";
    case DefectFamily::Chi4Lump: return "chi4";
    case DefectFamily::SineGordonLump: return "sg";
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

DeformParam::DeformParam(double k) : k_(std::abs(k)) {
  if (!std::isfinite(k)) throw std::invalid_argument("deformation parameter k must be finite");
}

Grid::Grid(double y_min_, double y_max_, std::size_t n_) : y_min(y_min_), y_max(y_max_), n(n_) {
  if (!std::isfinite(y_min) || !std::isfinite(y_max) || !(y_min < y_max))
    throw std::invalid_argument("grid requires finite y_min < y_max");
  if (n < 3) throw std::invalid_argument("grid requires at least 3 nodes");
}

std::vector<double> Grid::nodes() const {
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = node(i);
  return y;
}

namespace detail {

// 2 e^{-|y|} / (1 + e^{-2|y|}); never overflows.
double sech(double y) {
  const double e = std::exp(-std::abs(y));
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace detail

namespace {

using detail::sech;

double sech2(double y) {
  const double s = sech(y);
  return s * s;
}

double sign(double y) { return y > 0.0 ? 1.0 : (y < 0.0 ? -1.0 : 0.0); }

// sinh(2k) / (k (cosh 2y + cosh 2k)): the kink derivative and, equally, the
// chi4 deformed profile.  Scaled by e^{-max} so no intermediate overflows.
double kink_deriv_closed(double k, double y) {
  const double t = 2.0 * std::abs(y);
  const double s = 2.0 * k;
  const double m = std::max(t, s);
  const double et = std::exp(t - m);
  const double es = std::exp(s - m);
  const double num = 0.5 * es * (-std::expm1(-2.0 * s));
  const double den = 0.5 * (et * (1.0 + std::exp(-2.0 * t)) + es * (1.0 + std::exp(-2.0 * s)));
  return num / (k * den);
}

// -2 sinh(2y) sinh(2k) / (k (cosh 2y + cosh 2k)^2)
double chi_deriv_closed(double k, double y) {
  const double t = 2.0 * std::abs(y);
  const double s = 2.0 * k;
  const double m = std::max(t, s);
  const double et = std::exp(t - m);
  const double es = std::exp(s - m);
  // sinh t sinh s e^{-2m}
  const double num = 0.25 * et * es * std::expm1(-2.0 * t) * std::expm1(-2.0 * s);
  const double c = 0.5 * (et * (1.0 + std::exp(-2.0 * t)) + es * (1.0 + std::exp(-2.0 * s)));
  return sign(y) * -2.0 * num / (k * c * c);
}

// -(2/k) sinh(k) sinh(y) / (cosh 2k + cosh 2y)
double sg_deriv_closed(double k, double y) {
  const double t = 2.0 * std::abs(y);
  const double s = 2.0 * k;
  const double m = std::max(t, s);
  // sinh(k) sinh(|y|) e^{-m}
  const double num =
      0.25 * std::exp(0.5 * (s + t) - m) * std::expm1(-s) * std::expm1(-t);
  const double den = 0.5 * (std::exp(t - m) * (1.0 + std::exp(-2.0 * t)) +
                            std::exp(s - m) * (1.0 + std::exp(-2.0 * s)));
  return sign(y) * -2.0 * num / (k * den);
}

}  // namespace

double primitive_field(DefectFamily family, double y) {
  switch (family) {
    case DefectFamily::Phi4Kink: return std::tanh(y);
    case DefectFamily::Chi4Lump: return sech2(y);
    case DefectFamily::SineGordonLump: return sech(y);
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

double primitive_potential(DefectFamily family, double v) {
  switch (family) {
    case DefectFamily::Phi4Kink: {
      const double w = 1.0 - v * v;
      return 0.5 * w * w;
    }
    case DefectFamily::Chi4Lump: return 2.0 * v * v * (1.0 - v);
    case DefectFamily::SineGordonLump: return 0.5 * v * v * (1.0 - v * v);
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

namespace detail {

double deformed_field_closed(DefectFamily family, double k, double y) {
  switch (family) {
    case DefectFamily::Phi4Kink: {
      // (1/2k) ln[cosh(y+k)/cosh(y-k)] == atanh(tanh y tanh k)/k
      const double t = std::tanh(y) * std::tanh(k);
      // both factors round to 1 once |y|, k >= ~19; the profile is linear
      // in min(|y|, k) there up to e^{-2|y-k|} corrections
      if (std::abs(t) >= 1.0) return sign(y) * std::min(std::abs(y), k) / k;
      return std::atanh(t) / k;
    }
    case DefectFamily::Chi4Lump:
      return kink_deriv_closed(k, y);
    case DefectFamily::SineGordonLump: {
      // (1/k)(atan tanh((y+k)/2) - atan tanh((y-k)/2)) == atan(sinh k sech y)/k
      const double a = std::abs(y);
      const double lg = k - a;
      const double arg = lg > 700.0 ? std::numeric_limits<double>::infinity()
                                    : std::exp(lg) * (-std::expm1(-2.0 * k)) /
                                          (1.0 + std::exp(-2.0 * a));
      return std::atan(arg) / k;
    }
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

// Taylor branch in k of the difference quotient: a + (k^2/6) a'' + (k^4/120) a''''
// with a the primitive field.
double deformed_field_series(DefectFamily family, double k, double y) {
  const double k2 = k * k;
  switch (family) {
    case DefectFamily::Phi4Kink: {
      const double t = std::tanh(y);
      const double s2 = sech2(y);
      const double a2 = -2.0 * s2 * t;
      const double a4 = -8.0 * s2 * t * t * t + 16.0 * s2 * s2 * t;
      return t + k2 / 6.0 * a2 + k2 * k2 / 120.0 * a4;
    }
    case DefectFamily::Chi4Lump: {
      const double s2 = sech2(y);
      const double a2 = 4.0 * s2 - 6.0 * s2 * s2;
      const double a4 = 16.0 * s2 - 120.0 * s2 * s2 + 120.0 * s2 * s2 * s2;
      return s2 + k2 / 6.0 * a2 + k2 * k2 / 120.0 * a4;
    }
    case DefectFamily::SineGordonLump: {
      const double s = sech(y);
      const double s3 = s * s * s;
      const double a2 = s - 2.0 * s3;
      const double a4 = s - 20.0 * s3 + 24.0 * s3 * s * s;
      return s + k2 / 6.0 * a2 + k2 * k2 / 120.0 * a4;
    }
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

double deformed_field_deriv_closed(DefectFamily family, double k, double y) {
  switch (family) {
    case DefectFamily::Phi4Kink: return kink_deriv_closed(k, y);
    case DefectFamily::Chi4Lump: return chi_deriv_closed(k, y);
    case DefectFamily::SineGordonLump: return sg_deriv_closed(k, y);
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

double deformed_field_deriv_series(DefectFamily family, double k, double y) {
  const double k2 = k * k;
  const double t = std::tanh(y);
  switch (family) {
    case DefectFamily::Phi4Kink: {
      const double s2 = sech2(y);
      const double a3 = 4.0 * s2 - 6.0 * s2 * s2;
      const double a5 = 16.0 * s2 - 120.0 * s2 * s2 + 120.0 * s2 * s2 * s2;
      return s2 + k2 / 6.0 * a3 + k2 * k2 / 120.0 * a5;
    }
    case DefectFamily::Chi4Lump: {
      const double s2 = sech2(y);
      const double a3 = t * (24.0 * s2 * s2 - 8.0 * s2);
      const double a5 = t * (-32.0 * s2 + 480.0 * s2 * s2 - 720.0 * s2 * s2 * s2);
      return -2.0 * s2 * t + k2 / 6.0 * a3 + k2 * k2 / 120.0 * a5;
    }
    case DefectFamily::SineGordonLump: {
      const double s = sech(y);
      const double s3 = s * s * s;
      const double a3 = t * (6.0 * s3 - s);
      const double a5 = t * (-s + 60.0 * s3 - 120.0 * s3 * s * s);
      return -s * t + k2 / 6.0 * a3 + k2 * k2 / 120.0 * a5;
    }
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

}  // namespace detail

double deformed_field(DefectFamily family, DeformParam k, double y) {
  if (!std::isfinite(y)) throw std::invalid_argument("y must be finite");
  return k.use_series() ? detail::deformed_field_series(family, k.value(), y)
                        : detail::deformed_field_closed(family, k.value(), y);
}

double deformed_field_deriv(DefectFamily family, DeformParam k, double y) {
  if (!std::isfinite(y)) throw std::invalid_argument("y must be finite");
  return k.use_series() ? detail::deformed_field_deriv_series(family, k.value(), y)
                        : detail::deformed_field_deriv_closed(family, k.value(), y);
}

double energy_density(DefectFamily family, DeformParam k, double y) {
  const double u = deformed_field_deriv(family, k, y);
  return u * u;
}

double topological_charge(DefectFamily family, DeformParam /*k*/) {
  // Asymptotes are exact: the kink runs -1 -> +1, the lumps return to 0.
  return family == DefectFamily::Phi4Kink ? 2.0 : 0.0;
}

namespace {

// x cosh x - sinh x = sum_{j>=1} 2j x^{2j+1}/(2j+1)!
double xcosh_minus_sinh(double x) {
  if (x >= 1.0) return x * std::cosh(x) - std::sinh(x);
  double term = x * x * x / 3.0;  // j = 1: 2 x^3/3!
  double sum = term;
  for (int j = 2; j < 30; ++j) {
    term *= x * x * j / ((j - 1.0) * (2.0 * j) * (2.0 * j + 1.0));
    const double next = sum + term;
    if (next == sum) break;
    sum = next;
  }
  return sum;
}

// sinh x - x = sum_{j>=1} x^{2j+1}/(2j+1)!
double sinh_minus_x(double x) {
  if (x >= 1.0) return std::sinh(x) - x;
  double term = x * x * x / 6.0;
  double sum = term;
  for (int j = 2; j < 30; ++j) {
    term *= x * x / ((2.0 * j) * (2.0 * j + 1.0));
    const double next = sum + term;
    if (next == sum) break;
    sum = next;
  }
  return sum;
}

// sinh 3x + 9 sinh x - 12 x cosh x = sum_{odd j>=5} (3^j + 9 - 12j) x^j / j!
double lump_mass_numerator(double x) {
  if (x >= 1.0) return std::sinh(3.0 * x) + 9.0 * std::sinh(x) - 12.0 * x * std::cosh(x);
  double sum = 0.0;
  double xpow = x * x * x * x * x;  // x^5
  double fact = 120.0;              // 5!
  double pow3 = 243.0;              // 3^5
  for (int j = 5; j < 40; j += 2) {
    const double term = (pow3 + 9.0 - 12.0 * j) / fact * xpow;
    const double next = sum + term;
    if (next == sum && j > 7) break;
    sum = next;
    xpow *= x * x;
    fact *= (j + 1.0) * (j + 2.0);
    pow3 *= 9.0;
  }
  return sum;
}

}  // namespace

namespace detail {

double topological_mass_limit_branch(DefectFamily family, double k) {
  const double k2 = k * k;
  switch (family) {
    case DefectFamily::Phi4Kink: return 4.0 / 3.0 - 16.0 / 45.0 * k2;
    case DefectFamily::Chi4Lump: return 16.0 / 15.0 - 64.0 / 63.0 * k2;
    case DefectFamily::SineGordonLump: return 2.0 / 3.0 - 14.0 / 45.0 * k2;
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

double topological_mass_closed_branch(DefectFamily family, double k) {
  const double x = 2.0 * k;
  if (x >= 20.0) {
    // coth, csch, sech are at their asymptotes to machine precision.
    switch (family) {
      case DefectFamily::Phi4Kink: return (2.0 * k - 1.0) / (k * k);
      case DefectFamily::Chi4Lump: return 2.0 / (3.0 * k * k);
      case DefectFamily::SineGordonLump: return 1.0 / (k * k);
    }
  }
  const double sh = std::sinh(x);
  switch (family) {
    case DefectFamily::Phi4Kink:
      // (2k coth 2k - 1)/k^2
      return 4.0 * xcosh_minus_sinh(x) / (x * x * sh);
    case DefectFamily::Chi4Lump:
      // csch^3(2k) (sinh 6k + 9 sinh 2k - 24k cosh 2k) / (6 k^2)
      return 2.0 / 3.0 * lump_mass_numerator(x) / (x * x * sh * sh * sh);
    case DefectFamily::SineGordonLump:
      // (1 - k csch k sech k)/k^2 = (1 - 2k csch 2k)/k^2
      return 4.0 * sinh_minus_x(x) / (x * x * sh);
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

}  // namespace detail

double topological_mass_closed(DefectFamily family, DeformParam k) {
  return k.use_series() ? detail::topological_mass_limit_branch(family, k.value())
                        : detail::topological_mass_closed_branch(family, k.value());
}

double topological_mass_quad(DefectFamily family, DeformParam k, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  const auto rho = [family, k](double y) { return energy_density(family, k, y); };
  const QuadResult r = quad_line(rho, tol);
  if (!r.converged)
    throw NumericsError("mass quadrature did not converge; error estimate " +
                        std::to_string(r.error_estimate));
  return r.value;
}

std::vector<std::pair<double, double>> parametric_potential(DefectFamily family,
                                                            DeformParam k,
                                                            const Grid& grid) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double y = grid.node(i);
    const double u = deformed_field_deriv(family, k, y);
    pairs.emplace_back(deformed_field(family, k, y), 0.5 * u * u);
  }
  return pairs;
}

}  // namespace ptdefects
