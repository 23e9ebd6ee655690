#include "gkosc/gk_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

using namespace gkosc;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("derived parameters gamma and lam") {
  BasisParams p(0.0, 1.0);
  CHECK(p.gamma_p() == doctest::Approx(1.5));
  CHECK(p.lam() == doctest::Approx(1.0));

  BasisParams q(2.0, 4.0);
  CHECK(q.gamma_p() == doctest::Approx(2.5));  // 1 + sqrt(9)/2
  CHECK(q.lam() == doctest::Approx(2.0));

  BasisParams r(6.0, 0.25);
  CHECK(r.gamma_p() == doctest::Approx(3.5));  // 1 + sqrt(25)/2
  CHECK(r.lam() == doctest::Approx(0.5));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(BasisParams(-0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BasisParams(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BasisParams(0.0, -2.0), std::invalid_argument);
}

TEST_CASE("depth-length parameterization maps to A = V0 a^2, B = V0 / a^2") {
  BasisParams p = BasisParams::from_goldman(2.0, 0.5);
  CHECK(p.A() == doctest::Approx(0.5));
  CHECK(p.B() == doctest::Approx(8.0));
  CHECK_THROWS_AS(BasisParams::from_goldman(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BasisParams::from_goldman(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("level energies E_n = sqrt(B)(4n + 2 + sqrt(1+4A))") {
  BasisParams p(0.0, 1.0);
  CHECK(energy(p, 0) == doctest::Approx(3.0));
  CHECK(energy(p, 1) == doctest::Approx(7.0));
  CHECK(energy(p, 5) == doctest::Approx(23.0));

  BasisParams q(2.0, 4.0);
  CHECK(energy(q, 0) == doctest::Approx(10.0));  // 2 * (2 + 3)
  CHECK(energy(q, 3) == doctest::Approx(34.0));
}

TEST_CASE("energies in depth-length variables agree with the mapped form") {
  // V0 = 1, a = 1: sqrt(V0)/a (4n + 2 + sqrt(5)).
  CHECK(energy_goldman(1.0, 1.0, 0) ==
        doctest::Approx(2.0 + std::sqrt(5.0)).epsilon(1e-15));
  BasisParams p = BasisParams::from_goldman(3.0, 0.7);
  for (int n = 0; n < 6; ++n) {
    CHECK(energy_goldman(3.0, 0.7, n) ==
          doctest::Approx(energy(p, n)).epsilon(1e-14));
  }
}

TEST_CASE("squared normalization constants") {
  // C_0^2 = 2 B^{g/2} Gamma(g) / Gamma(g)^2 = 2 / Gamma(g) at B = 1.
  BasisParams p(0.0, 1.0);
  CHECK(norm_const_sq(p, 0).value() ==
        doctest::Approx(4.0 / kSqrtPi).epsilon(1e-14));
  CHECK(norm_const_sq(p, 1).value() ==
        doctest::Approx(6.0 / kSqrtPi).epsilon(1e-14));
  BasisParams q(2.0, 1.0);
  CHECK(norm_const_sq(q, 0).value() ==
        doctest::Approx(1.5045055561273501).epsilon(1e-14));
}

TEST_CASE("normalization constants satisfy the index recurrence") {
  // C_{n+1}^2 / C_n^2 = (n + g) / (n + 1).
  BasisParams p(0.5, 2.0);
  const double g = p.gamma_p();
  for (int n = 0; n < 20; ++n) {
    const double ratio =
        (norm_const_sq(p, n + 1) / norm_const_sq(p, n)).value();
    CHECK(ratio == doctest::Approx((n + g) / (n + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("ground wavefunction matches its explicit form") {
  // A=0, B=1: psi_0(x) = (2 / pi^{1/4}) x e^{-x^2/2}.
  BasisParams p(0.0, 1.0);
  for (double x : {0.2, 1.0, 2.3}) {
    const double ref =
        2.0 / std::pow(std::numbers::pi, 0.25) * x * std::exp(-x * x / 2.0);
    CHECK(eval_wavefunction(p, 0, x) == doctest::Approx(ref).epsilon(1e-14));
  }
  // A=2, B=1: psi_0(x) = C_0 x^2 e^{-x^2/2} with C_0^2 = Gamma-ratio above.
  BasisParams q(2.0, 1.0);
  const double c0 = std::sqrt(1.5045055561273501);
  for (double x : {0.5, 1.7}) {
    CHECK(eval_wavefunction(q, 0, x) ==
          doctest::Approx(c0 * x * x * std::exp(-x * x / 2.0)).epsilon(1e-13));
  }
}

TEST_CASE("first excited wavefunction carries the confluent factor") {
  // A=0, B=1: psi_1(x) = C_1 x e^{-x^2/2} (1 - 2x^2/3), C_1^2 = 6/sqrt(pi).
  BasisParams p(0.0, 1.0);
  const double c1 = std::sqrt(6.0 / kSqrtPi);
  for (double x : {0.4, 1.0, 1.8}) {
    const double ref =
        c1 * x * std::exp(-x * x / 2.0) * (1.0 - 2.0 * x * x / 3.0);
    CHECK(eval_wavefunction(p, 1, x) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("wavefunctions vanish at the origin and reject x < 0") {
  BasisParams p(0.5, 1.0);
  CHECK(eval_wavefunction(p, 0, 0.0) == 0.0);
  CHECK(eval_wavefunction(p, 3, 0.0) == 0.0);
  CHECK_THROWS_AS(eval_wavefunction(p, 0, -1.0), std::domain_error);
}

TEST_CASE("wavefunction norm integrates to one") {
  // Plain Simpson on [0, 12]; the integrand decays like e^{-x^2}.
  BasisParams p(1.0, 1.5);
  for (int n : {0, 2, 5}) {
    const int steps = 4800;
    const double h = 12.0 / steps;
    double sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double x = i * h;
      const double f = eval_wavefunction(p, n, x);
      const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      sum += w * f * f;
    }
    sum *= h / 3.0;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
}
