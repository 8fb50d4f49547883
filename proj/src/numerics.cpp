#include "ptdefects/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace ptdefects {

namespace {

// 15-point Kronrod abscissae (positive half); even indices are the
// embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double value;
  double abserr;
};

// QUADPACK dqk15-style panel rule with the rescaled error estimate.
PanelResult kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double eps = std::numeric_limits<double>::epsilon();

  double fv1[7], fv2[7];
  const double fc = f(centr);
  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;  // Gauss node indices 1, 3, 5
    const double absc = hlgth * kXgk[jtw];
    fv1[jtw] = f(centr - absc);
    fv2[jtw] = f(centr + absc);
    const double fsum = fv1[jtw] + fv2[jtw];
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
    resabs += kWgk[jtw] * (std::abs(fv1[jtw]) + std::abs(fv2[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;  // Kronrod-only node indices 0, 2, 4, 6
    const double absc = hlgth * kXgk[jtwm1];
    fv1[jtwm1] = f(centr - absc);
    fv2[jtwm1] = f(centr + absc);
    const double fsum = fv1[jtwm1] + fv2[jtwm1];
    resk += kWgk[jtwm1] * fsum;
    resabs += kWgk[jtwm1] * (std::abs(fv1[jtwm1]) + std::abs(fv2[jtwm1]));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double dhlgth = std::abs(hlgth);
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0)
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) abserr = std::max(eps * 50.0 * resabs, abserr);
  return {resk * hlgth, abserr};
}

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& other) const { return err < other.err; }
};

constexpr std::size_t kMaxSegments = 4096;

}  // namespace

QuadResult quad(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("quadrature endpoints must be finite");
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  const double fsign = a < b ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);

  std::vector<Segment> heap;
  const PanelResult first = kronrod15(f, lo, hi);
  heap.push_back({lo, hi, first.value, first.abserr});
  out.evaluations = 15;
  double total_err = first.abserr;

  while (total_err > tol && heap.size() < kMaxSegments) {
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable at double precision
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end());
      break;
    }
    const PanelResult left = kronrod15(f, worst.a, mid);
    const PanelResult right = kronrod15(f, mid, worst.b);
    out.evaluations += 30;
    total_err += left.abserr + right.abserr - worst.err;
    heap.push_back({worst.a, mid, left.value, left.abserr});
    std::push_heap(heap.begin(), heap.end());
    heap.push_back({mid, worst.b, right.value, right.abserr});
    std::push_heap(heap.begin(), heap.end());
  }

  double value = 0.0, err = 0.0;
  for (const Segment& s : heap) {
    value += s.value;
    err += s.err;
  }
  out.value = fsign * value;
  out.error_estimate = err;
  out.converged = err <= tol;
  return out;
}

QuadResult quad_line(const std::function<double(double)>& f, double tol) {
  const auto g = [&f](double t) {
    const double w = 1.0 - t * t;
    if (w <= 0.0) return 0.0;
    const double y = t / w;
    if (!std::isfinite(y)) return 0.0;
    const double fy = f(y);
    if (fy == 0.0) return 0.0;
    return fy * (1.0 + t * t) / (w * w);
  };
  return quad(g, -1.0, 1.0, tol);
}

namespace {

// Number of eigenvalues of the tridiagonal (d, e) strictly below x,
// by the Sturm sequence of LDL^T pivots.
std::size_t sturm_count(const std::vector<double>& d, double e2, double x, double pivmin) {
  std::size_t count = 0;
  double p = d[0] - x;
  if (p < pivmin && p > -pivmin) p = -pivmin;
  if (p < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    p = d[i] - x - e2 / p;
    if (p < pivmin && p > -pivmin) p = -pivmin;
    if (p < 0.0) ++count;
  }
  return count;
}

// Solves (T - sigma I) x = b for the constant-off-diagonal tridiagonal T,
// by LU with partial pivoting (the dgttrf/dgtts2 scheme); b is overwritten
// with the solution.  Near-singular pivots are floored, which is exactly
// what inverse iteration wants.
void shifted_tridiag_solve(const std::vector<double>& d, double e, double sigma,
                           double pivot_floor, std::vector<double>& b) {
  const std::size_t n = d.size();
  std::vector<double> dd(n), dl(n - 1), du(n - 1), du2(n >= 2 ? n - 2 : 0, 0.0);
  std::vector<char> swapped(n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) dd[i] = d[i] - sigma;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    dl[i] = e;
    du[i] = e;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(dd[i]) >= std::abs(dl[i])) {
      if (std::abs(dd[i]) < pivot_floor) dd[i] = dd[i] < 0.0 ? -pivot_floor : pivot_floor;
      const double fact = dl[i] / dd[i];
      dl[i] = fact;
      dd[i + 1] -= fact * du[i];
    } else {
      swapped[i] = 1;
      const double fact = dd[i] / dl[i];
      dd[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = dd[i + 1];
      dd[i + 1] = temp - fact * dd[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] *= -fact;
      }
    }
  }
  if (std::abs(dd[n - 1]) < pivot_floor)
    dd[n - 1] = dd[n - 1] < 0.0 ? -pivot_floor : pivot_floor;

  // forward substitution with the recorded row interchanges
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped[i]) {
      b[i + 1] -= dl[i] * b[i];
    } else {
      const double temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - dl[i] * b[i];
    }
  }
  // back substitution
  b[n - 1] /= dd[n - 1];
  if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / dd[n - 2];
  for (std::size_t ii = n - 2; ii-- > 0;)
    b[ii] = (b[ii] - du[ii] * b[ii + 1] - du2[ii] * b[ii + 2]) / dd[ii];
}

}  // namespace

Spectrum solve_spectrum(const std::function<double(double)>& potential,
                        const Grid& grid, std::size_t m) {
  if (m < 1) throw std::invalid_argument("at least one eigenpair must be requested");
  const std::size_t dim = grid.n - 2;
  if (m > dim)
    throw std::invalid_argument("requested more eigenpairs than interior grid nodes");

  const double h = grid.spacing();
  const double h2inv = 1.0 / (h * h);
  const double e = -h2inv;
  const double e2 = h2inv * h2inv;

  std::vector<double> d(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d[i] = 2.0 * h2inv + potential(grid.node(i + 1));
    if (!std::isfinite(d[i])) throw NumericsError("potential is not finite on the grid");
  }

  const auto [dmin_it, dmax_it] = std::minmax_element(d.begin(), d.end());
  double lo = *dmin_it - 2.0 * std::abs(e);
  double hi = *dmax_it + 2.0 * std::abs(e);
  const double scale = std::max(std::abs(lo), std::abs(hi));
  const double eps = std::numeric_limits<double>::epsilon();
  const double pivmin = std::max(std::numeric_limits<double>::min(), eps * eps * e2);

  std::vector<double> eigenvalues(m);
  for (std::size_t j = 0; j < m; ++j) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 210 && (b - a) > 2.0 * eps * scale; ++iter) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(d, e2, mid, pivmin) > j)
        b = mid;
      else
        a = mid;
    }
    eigenvalues[j] = 0.5 * (a + b);
  }

  // inverse iteration for the eigenvectors
  std::vector<std::vector<double>> vectors(m, std::vector<double>(dim));
  std::uint64_t lcg = 0x9e3779b97f4a7c15ull;
  const auto next_unit = [&lcg]() {
    lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(lcg >> 11) / 9007199254740992.0 - 0.5;
  };
  const double res_tol = 1e-6 * scale;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double>& v = vectors[j];
    for (std::size_t i = 0; i < dim; ++i) v[i] = next_unit();
    bool ok = false;
    for (int iter = 0; iter < 10; ++iter) {
      shifted_tridiag_solve(d, e, eigenvalues[j], pivmin, v);
      // project out previously found eigenvectors
      for (std::size_t p = 0; p < j; ++p) {
        double dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += v[i] * vectors[p][i];
        for (std::size_t i = 0; i < dim; ++i) v[i] -= dot * vectors[p][i];
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (norm == 0.0 || !std::isfinite(norm)) {
        for (std::size_t i = 0; i < dim; ++i) v[i] = next_unit();
        continue;
      }
      for (std::size_t i = 0; i < dim; ++i) v[i] /= norm;
      // residual ||(T - lambda) v||_inf
      double res = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        double r = (d[i] - eigenvalues[j]) * v[i];
        if (i > 0) r += e * v[i - 1];
        if (i + 1 < dim) r += e * v[i + 1];
        res = std::max(res, std::abs(r));
      }
      if (res <= res_tol && iter >= 1) {
        ok = true;
        break;
      }
    }
    if (!ok) throw NumericsError("inverse iteration failed for eigenpair " + std::to_string(j));
  }

  Spectrum spectrum{std::move(eigenvalues), {}, grid};
  spectrum.eigenfunctions.reserve(m);
  const double inv_sqrt_h = 1.0 / std::sqrt(h);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> values(grid.n, 0.0);
    // discrete L2 normalization: h * sum psi^2 = 1
    std::size_t imax = 0;
    for (std::size_t i = 1; i < dim; ++i)
      if (std::abs(vectors[j][i]) > std::abs(vectors[j][imax])) imax = i;
    const double flip = vectors[j][imax] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < dim; ++i) values[i + 1] = flip * vectors[j][i] * inv_sqrt_h;
    spectrum.eigenfunctions.push_back(Profile{grid, std::move(values)});
  }
  return spectrum;
}

Spectrum solve_spectrum(const QMPotentialSpec& spec, const Grid& grid, std::size_t m) {
  return solve_spectrum([&spec](double y) { return vqm(spec, y); }, grid, m);
}

}  // namespace ptdefects
