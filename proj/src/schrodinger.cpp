#include "ptdefects/schrodinger.hpp"

#include <cmath>
#include <stdexcept>

namespace ptdefects {

using detail::sech;

PotentialMode potential_mode_from_string(const std::string& name) {
  if (name == "exact") return PotentialMode::Exact;
  if (name == "expanded") return PotentialMode::ExpandedOrderK2;
  if (name == "pt") return PotentialMode::PoschlTellerLimit;
  throw std::invalid_argument("unknown potential mode '" + name +
                              "' (expected exact, expanded or pt)");
}

std::string to_string(PotentialMode mode) {
  switch (mode) {
    case PotentialMode::Exact: return "exact";
    case PotentialMode::ExpandedOrderK2: return "expanded";
    case PotentialMode::PoschlTellerLimit: return "pt";
  }
  throw std::invalid_argument("invalid PotentialMode tag");
}

double potential_asymptote(DefectFamily family) {
  return family == DefectFamily::SineGordonLump ? 1.0 : 4.0;
}

namespace {

double sech2(double y) {
  const double s = sech(y);
  return s * s;
}

double pt_limit_potential(DefectFamily family, double y) {
  switch (family) {
    case DefectFamily::Phi4Kink: return 4.0 - 6.0 * sech2(y);
    case DefectFamily::Chi4Lump: return 4.0 - 12.0 * sech2(y);
    case DefectFamily::SineGordonLump: return 1.0 - 6.0 * sech2(y);
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

double exact_potential(DefectFamily family, double k, double y) {
  switch (family) {
    case DefectFamily::Phi4Kink: {
      // 2 (sech^2(y-k) tanh(y-k) - sech^2(y+k) tanh(y+k)) / (tanh(y+k) - tanh(y-k))
      // reduces to a polynomial in the two tanh values; regular at k = 0.
      const double tp = std::tanh(y + k);
      const double tm = std::tanh(y - k);
      return 2.0 * (tp * tp + tp * tm + tm * tm - 1.0);
    }
    case DefectFamily::Chi4Lump:
      return 4.0 - 6.0 * (sech2(y - k) + sech2(y + k));
    case DefectFamily::SineGordonLump: {
      // (cosh 4k - 8 cosh 2y - 4 cosh 2k (2 + 3 cosh 2y) + cosh 4y - 14)
      //   / (2 (cosh 2k + cosh 2y)^2)
      //  == 1 - r (8K + 4 + (4K + 8) r) / (1 + K r)^2, K = cosh 2k, r = sech 2y
      const double K = std::cosh(2.0 * k);
      if (!std::isfinite(K)) return 1.0;  // V -> 1 - 8/(K r) as K grows
      const double r = sech(2.0 * y);
      const double w = 1.0 + K * r;
      return 1.0 - r * (8.0 * K + 4.0 + (4.0 * K + 8.0) * r) / (w * w);
    }
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

}  // namespace

double vqm_k2_coefficient(DefectFamily family, double y) {
  const double s2 = sech2(y);
  switch (family) {
    case DefectFamily::Phi4Kink: return (14.0 * s2 - 12.0) * s2;
    case DefectFamily::Chi4Lump: return (36.0 * s2 - 24.0) * s2;
    case DefectFamily::SineGordonLump: return (14.0 * s2 - 8.0) * s2;
  }
  throw std::invalid_argument("invalid DefectFamily tag");
}

double vqm(const QMPotentialSpec& spec, double y) {
  if (!std::isfinite(y)) throw std::invalid_argument("y must be finite");
  const double k = spec.k.value();
  switch (spec.mode) {
    case PotentialMode::Exact: return exact_potential(spec.family, k, y);
    case PotentialMode::ExpandedOrderK2:
      return pt_limit_potential(spec.family, y) + k * k * vqm_k2_coefficient(spec.family, y);
    case PotentialMode::PoschlTellerLimit: return pt_limit_potential(spec.family, y);
  }
  throw std::invalid_argument("invalid PotentialMode tag");
}

Profile zero_mode_exact(DefectFamily family, DeformParam k, const Grid& grid) {
  std::vector<double> values(grid.n);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    values[i] = deformed_field_deriv(family, k, grid.node(i));
    norm2 += values[i] * values[i];
  }
  const double scale = 1.0 / std::sqrt(grid.spacing() * norm2);
  for (double& v : values) v *= scale;
  return Profile{grid, std::move(values)};
}

double pt_bound_mode(int level, double y) {
  switch (level) {
    case 0:
      return std::sqrt(3.0) / 2.0 * sech2(y);
    case 1:
      // sinh sech^2 written as tanh sech; unit norm needs sqrt(3/2).
      return std::sqrt(1.5) * std::tanh(y) * sech(y);
    default:
      throw std::invalid_argument("bound level must be 0 or 1");
  }
}

double pt_eigenvalue(int level) {
  switch (level) {
    case 0: return 0.0;
    case 1: return 3.0;
    default: throw std::invalid_argument("bound level must be 0 or 1");
  }
}

double continuum_omega2(double q) { return 4.0 + q * q; }

ContinuumBox::ContinuumBox(double L) : half_width(L) {
  if (!std::isfinite(L) || !(L > 0.0))
    throw std::invalid_argument("continuum box half-width must be positive and finite");
}

double continuum_norm_constant(double q, const ContinuumBox& box) {
  const double L = box.half_width;
  const double q2 = q * q;
  const double sL = sech(L);
  return 2.0 * L * (4.0 + 5.0 * q2 + q2 * q2) -
         6.0 * std::tanh(L) * (2.0 + q2 - sL * sL);
}

ContinuumMode::ContinuumMode(double q_, ContinuumBox box_)
    : q(q_), box(box_), normalization(continuum_norm_constant(q_, box_)) {}

std::complex<double> ContinuumMode::psi(double y) const {
  if (std::abs(y) > box.half_width)
    throw std::domain_error("continuum mode sampled outside its box [-L, L]");
  const double t = std::tanh(y);
  const std::complex<double> amplitude(3.0 * t * t - 1.0 - q * q, -3.0 * q * t);
  const std::complex<double> phase(std::cos(q * y), std::sin(q * y));
  return phase * amplitude / std::sqrt(normalization);
}

std::complex<double> pt_continuum_mode(double q, const ContinuumBox& box, double y) {
  return ContinuumMode(q, box).psi(y);
}

}  // namespace ptdefects
