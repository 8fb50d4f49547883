#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "ptdefects/fields.hpp"
#include "ptdefects/numerics.hpp"
#include "testutil.hpp"

using namespace ptdefects;
namespace tu = testutil;

namespace {
constexpr DefectFamily kFamilies[] = {DefectFamily::Phi4Kink, DefectFamily::Chi4Lump,
                                      DefectFamily::SineGordonLump};
}

TEST_CASE("family tags parse and print") {
  CHECK(family_from_string("phi4") == DefectFamily::Phi4Kink);
  CHECK(family_from_string("chi4") == DefectFamily::Chi4Lump);
  CHECK(family_from_string("sg") == DefectFamily::SineGordonLump);
  CHECK_THROWS_AS(family_from_string("phi"), std::invalid_argument);
  for (auto f : kFamilies) CHECK(family_from_string(to_string(f)) == f);
}

TEST_CASE("deform parameter canonicalizes and validates") {
  CHECK(DeformParam(-0.5).value() == 0.5);
  CHECK(DeformParam(0.0).use_series());
  CHECK_FALSE(DeformParam(1e-3).use_series());
  CHECK_THROWS_AS(DeformParam(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS((DeformParam(std::numeric_limits<double>::infinity())),
                  std::invalid_argument);
}

TEST_CASE("grid validation and node layout") {
  CHECK_THROWS_AS(Grid(1.0, -1.0, 11), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, 1.0, 2), std::invalid_argument);
  const Grid g(-2.0, 2.0, 5);
  CHECK(g.spacing() == doctest::Approx(1.0));
  CHECK(g.node(0) == -2.0);
  CHECK(g.node(4) == doctest::Approx(2.0));
  CHECK(g.nodes().size() == 5);
}

TEST_CASE("primitive fields at reference points") {
  CHECK(primitive_field(DefectFamily::Phi4Kink, 0.0) == 0.0);
  CHECK(primitive_field(DefectFamily::Chi4Lump, 0.0) == doctest::Approx(1.0));
  CHECK(primitive_field(DefectFamily::SineGordonLump, 0.0) == doctest::Approx(1.0));
  CHECK(primitive_field(DefectFamily::Phi4Kink, 40.0) == doctest::Approx(1.0));
  CHECK(primitive_field(DefectFamily::Phi4Kink, -40.0) == doctest::Approx(-1.0));
}

TEST_CASE("primitive potentials vanish at their vacua") {
  CHECK(primitive_potential(DefectFamily::Phi4Kink, 1.0) == 0.0);
  CHECK(primitive_potential(DefectFamily::Phi4Kink, -1.0) == 0.0);
  CHECK(primitive_potential(DefectFamily::Chi4Lump, 0.0) == 0.0);
  CHECK(primitive_potential(DefectFamily::SineGordonLump, 1.0) == 0.0);
  CHECK(primitive_potential(DefectFamily::SineGordonLump, 0.0) == 0.0);
  CHECK(primitive_potential(DefectFamily::Phi4Kink, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("deformed fields match the reference forms at moderate arguments") {
  const auto ys = tu::uniform_samples(-15.0, 15.0, 40, 11);
  const auto ks = tu::uniform_samples(0.05, 3.0, 25, 13);
  for (double y : ys) {
    for (double kv : ks) {
      const DeformParam k(kv);
      CHECK(deformed_field(DefectFamily::Phi4Kink, k, y) ==
            doctest::Approx(tu::naive::kink_field(kv, y)).epsilon(1e-12));
      CHECK(deformed_field(DefectFamily::Chi4Lump, k, y) ==
            doctest::Approx(tu::naive::chi_field(kv, y)).epsilon(1e-10).scale(1.0));
      CHECK(deformed_field(DefectFamily::SineGordonLump, k, y) ==
            doctest::Approx(tu::naive::sg_field(kv, y)).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("deformed derivatives match the reference forms") {
  const auto ys = tu::uniform_samples(-15.0, 15.0, 30, 17);
  const auto ks = tu::uniform_samples(0.05, 3.0, 20, 19);
  for (double y : ys) {
    for (double kv : ks) {
      const DeformParam k(kv);
      CHECK(deformed_field_deriv(DefectFamily::Phi4Kink, k, y) ==
            doctest::Approx(tu::naive::kink_deriv(kv, y)).epsilon(1e-10).scale(1.0));
      CHECK(deformed_field_deriv(DefectFamily::Chi4Lump, k, y) ==
            doctest::Approx(tu::naive::chi_deriv(kv, y)).epsilon(1e-10).scale(1.0));
      CHECK(deformed_field_deriv(DefectFamily::SineGordonLump, k, y) ==
            doctest::Approx(tu::naive::sg_deriv(kv, y)).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("deformed field reference values") {
  CHECK(deformed_field(DefectFamily::Phi4Kink, DeformParam(0.5), 0.0) == 0.0);
  // k -> 0 recovers the primitive profiles
  for (auto f : kFamilies)
    for (double y : {-3.0, -0.7, 0.4, 2.2})
      CHECK(deformed_field(f, DeformParam(1e-9), y) ==
            doctest::Approx(primitive_field(f, y)).epsilon(1e-14));
  // derivative at the center
  const double kv = 0.7;
  CHECK(deformed_field_deriv(DefectFamily::Phi4Kink, DeformParam(kv), 0.0) ==
        doctest::Approx(std::tanh(kv) / kv).epsilon(1e-14));
  CHECK(deformed_field_deriv(DefectFamily::Chi4Lump, DeformParam(kv), 0.0) == 0.0);
  CHECK(deformed_field_deriv(DefectFamily::SineGordonLump, DeformParam(kv), 0.0) == 0.0);
}

TEST_CASE("parity in k, including on the raw reference forms") {
  const auto ys = tu::uniform_samples(-8.0, 8.0, 20, 23);
  for (double y : ys) {
    for (double kv : {0.2, 0.9, 2.5}) {
      for (auto f : kFamilies) {
        CHECK(deformed_field(f, DeformParam(-kv), y) ==
              deformed_field(f, DeformParam(kv), y));
        CHECK(deformed_field_deriv(f, DeformParam(-kv), y) ==
              deformed_field_deriv(f, DeformParam(kv), y));
      }
      CHECK(tu::naive::kink_field(-kv, y) ==
            doctest::Approx(tu::naive::kink_field(kv, y)).epsilon(1e-13));
      CHECK(tu::naive::chi_field(-kv, y) ==
            doctest::Approx(tu::naive::chi_field(kv, y)).epsilon(1e-13));
      CHECK(tu::naive::sg_field(-kv, y) ==
            doctest::Approx(tu::naive::sg_field(kv, y)).epsilon(1e-13));
    }
  }
}

TEST_CASE("parity in y: odd kink, even lumps, complementary derivatives") {
  const auto ys = tu::uniform_samples(0.01, 12.0, 25, 29);
  for (double y : ys) {
    for (double kv : {0.0, 0.3, 1.7}) {
      const DeformParam k(kv);
      CHECK(deformed_field(DefectFamily::Phi4Kink, k, -y) ==
            doctest::Approx(-deformed_field(DefectFamily::Phi4Kink, k, y))
                .epsilon(1e-12));
      CHECK(deformed_field(DefectFamily::Chi4Lump, k, -y) ==
            doctest::Approx(deformed_field(DefectFamily::Chi4Lump, k, y)).epsilon(1e-12));
      CHECK(deformed_field(DefectFamily::SineGordonLump, k, -y) ==
            doctest::Approx(deformed_field(DefectFamily::SineGordonLump, k, y))
                .epsilon(1e-12));
      CHECK(deformed_field_deriv(DefectFamily::Phi4Kink, k, -y) ==
            doctest::Approx(deformed_field_deriv(DefectFamily::Phi4Kink, k, y))
                .epsilon(1e-12));
      CHECK(deformed_field_deriv(DefectFamily::Chi4Lump, k, -y) ==
            doctest::Approx(-deformed_field_deriv(DefectFamily::Chi4Lump, k, y))
                .epsilon(1e-12));
      CHECK(deformed_field_deriv(DefectFamily::SineGordonLump, k, -y) ==
            doctest::Approx(-deformed_field_deriv(DefectFamily::SineGordonLump, k, y))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("series and closed branches agree at the threshold seam") {
  const double eps_k = DeformParam::series_threshold;
  for (double y = -20.0; y <= 20.0; y += 0.25) {
    for (auto f : kFamilies) {
      CHECK(std::abs(detail::deformed_field_series(f, eps_k, y) -
                     detail::deformed_field_closed(f, eps_k, y)) < 1e-12);
      CHECK(std::abs(detail::deformed_field_deriv_series(f, eps_k, y) -
                     detail::deformed_field_deriv_closed(f, eps_k, y)) < 1e-12);
    }
  }
  for (auto f : kFamilies)
    CHECK(std::abs(detail::topological_mass_limit_branch(f, eps_k) -
                   detail::topological_mass_closed_branch(f, eps_k)) < 1e-12);
}

TEST_CASE("central finite difference matches the derivative") {
  const double h = 1e-5;
  for (auto f : kFamilies) {
    for (double kv : {0.0, 0.4, 1.3, 2.8}) {
      const DeformParam k(kv);
      for (double y : {-4.1, -1.0, 0.3, 2.7}) {
        const double fd =
            (deformed_field(f, k, y + h) - deformed_field(f, k, y - h)) / (2.0 * h);
        CHECK(deformed_field_deriv(f, k, y) == doctest::Approx(fd).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("energy density values and symmetry") {
  CHECK(energy_density(DefectFamily::Phi4Kink, DeformParam(0.0), 0.0) ==
        doctest::Approx(1.0));
  CHECK(energy_density(DefectFamily::Chi4Lump, DeformParam(1.2), 0.0) == 0.0);
  for (auto f : kFamilies)
    for (double kv : {0.0, 0.6, 2.0})
      for (double y : {0.4, 1.9, 6.0}) {
        CHECK(energy_density(f, DeformParam(kv), y) >= 0.0);
        CHECK(energy_density(f, DeformParam(kv), -y) ==
              doctest::Approx(energy_density(f, DeformParam(kv), y)).epsilon(1e-12));
      }
}

TEST_CASE("kink derivative is strictly positive, lump derivatives vanish only at 0") {
  const auto ys = tu::uniform_samples(-18.0, 18.0, 60, 31);
  for (double kv : {0.0, 0.5, 1.5, 3.0}) {
    const DeformParam k(kv);
    for (double y : ys) CHECK(deformed_field_deriv(DefectFamily::Phi4Kink, k, y) > 0.0);
    for (auto f : {DefectFamily::Chi4Lump, DefectFamily::SineGordonLump}) {
      const Grid g(-12.0, 12.0, 2401);
      std::vector<double> u(g.n);
      for (std::size_t i = 0; i < g.n; ++i) u[i] = deformed_field_deriv(f, k, g.node(i));
      CHECK(deformed_field_deriv(f, k, 0.0) == 0.0);
      CHECK(tu::count_sign_changes(u, 1e-14) == 1);
    }
  }
}

TEST_CASE("asymptotic charges") {
  for (double kv : {0.0, 0.01, 1.0, 2.9}) {
    CHECK(topological_charge(DefectFamily::Phi4Kink, DeformParam(kv)) == 2.0);
    CHECK(topological_charge(DefectFamily::Chi4Lump, DeformParam(kv)) == 0.0);
    CHECK(topological_charge(DefectFamily::SineGordonLump, DeformParam(kv)) == 0.0);
  }
  // the kink profile actually reaches its asymptotes
  CHECK(deformed_field(DefectFamily::Phi4Kink, DeformParam(1.5), 400.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(deformed_field(DefectFamily::Phi4Kink, DeformParam(1.5), -400.0) ==
        doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("deformed quantities stay finite far out on the line") {
  for (auto f : kFamilies) {
    for (double y : {380.0, -380.0, 1000.0, -1000.0}) {
      for (double kv : {0.3, 2.0, 40.0}) {
        const DeformParam k(kv);
        CHECK(std::isfinite(deformed_field(f, k, y)));
        CHECK(std::isfinite(deformed_field_deriv(f, k, y)));
        CHECK(std::isfinite(energy_density(f, k, y)));
      }
    }
  }
  for (auto f : {DefectFamily::Chi4Lump, DefectFamily::SineGordonLump})
    CHECK(deformed_field(f, DeformParam(0.8), 500.0) == doctest::Approx(0.0));
}

TEST_CASE("closed-form masses: limits and reference value") {
  CHECK(topological_mass_closed(DefectFamily::Phi4Kink, DeformParam(0.0)) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(topological_mass_closed(DefectFamily::Chi4Lump, DeformParam(0.0)) ==
        doctest::Approx(16.0 / 15.0).epsilon(1e-14));
  CHECK(topological_mass_closed(DefectFamily::SineGordonLump, DeformParam(0.0)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(topological_mass_closed(DefectFamily::Phi4Kink, DeformParam(1.0)) ==
        doctest::Approx(2.0 / std::tanh(2.0) - 1.0).epsilon(1e-14));
  // far out the kink mass follows (2k - 1)/k^2
  CHECK(topological_mass_closed(DefectFamily::Phi4Kink, DeformParam(40.0)) ==
        doctest::Approx(79.0 / 1600.0).epsilon(1e-14));
  // stable evaluation matches the reference forms away from tiny k
  for (double kv : {0.05, 0.3, 1.0, 2.4}) {
    CHECK(topological_mass_closed(DefectFamily::Phi4Kink, DeformParam(kv)) ==
          doctest::Approx(tu::naive::kink_mass(kv)).epsilon(1e-11));
    CHECK(topological_mass_closed(DefectFamily::Chi4Lump, DeformParam(kv)) ==
          doctest::Approx(tu::naive::chi_mass(kv)).epsilon(1e-11));
    CHECK(topological_mass_closed(DefectFamily::SineGordonLump, DeformParam(kv)) ==
          doctest::Approx(tu::naive::sg_mass(kv)).epsilon(1e-11));
  }
}

TEST_CASE("mass quadrature oracle agrees with the closed forms") {
  for (auto f : kFamilies) {
    for (double kv : {0.01, 0.1, 0.5, 1.0, 2.0}) {
      const DeformParam k(kv);
      const double closed = topological_mass_closed(f, k);
      const double numeric = topological_mass_quad(f, k, 1e-10);
      CHECK(std::abs(closed - numeric) / closed < 1e-8);
    }
  }
  CHECK(topological_mass_quad(DefectFamily::Phi4Kink, DeformParam(0.0), 1e-10) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-10));
  CHECK_THROWS_AS(topological_mass_quad(DefectFamily::Phi4Kink, DeformParam(0.5), -1.0),
                  std::invalid_argument);
}

TEST_CASE("masses decrease strictly with k") {
  for (auto f : kFamilies) {
    double prev = topological_mass_closed(f, DeformParam(0.0));
    for (double kv = 0.05; kv <= 3.0 + 1e-12; kv += 0.05) {
      const double m = topological_mass_closed(f, DeformParam(kv));
      CHECK(m < prev);
      prev = m;
    }
  }
}

TEST_CASE("parametric potential") {
  const Grid g(-8.0, 8.0, 801);
  const auto pairs = parametric_potential(DefectFamily::Phi4Kink, DeformParam(0.0), g);
  REQUIRE(pairs.size() == g.n);
  for (const auto& [v, u] : pairs) {
    CHECK(u >= 0.0);
    CHECK(u == doctest::Approx(primitive_potential(DefectFamily::Phi4Kink, v))
                   .epsilon(1e-10)
                   .scale(1.0));
  }
  // kink parity: (v, U) pairs mirror to (-v, U)
  const auto curved = parametric_potential(DefectFamily::Phi4Kink, DeformParam(1.3), g);
  for (std::size_t i = 0; i < curved.size(); ++i) {
    const auto& [v, u] = curved[i];
    const auto& [vm, um] = curved[curved.size() - 1 - i];
    CHECK(vm == doctest::Approx(-v).epsilon(1e-12));
    CHECK(um == doctest::Approx(u).epsilon(1e-12));
  }
}
