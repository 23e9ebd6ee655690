#pragma once

#include "gkosc/signed_log.hpp"

namespace gkosc {

// Parameters of the solvable half-line potential V(x) = B x^2 + A / x^2 with
// a Dirichlet condition at the origin. Derived quantities:
//   gamma_p = 1 + sqrt(1 + 4A)/2   (controls the x->0 power law),
//   lam     = sqrt(B)              (Gaussian width of the eigenfunctions).
// Requires A >= 0 and B > 0.
class BasisParams {
 public:
  BasisParams(double A, double B);

  // Alternative parameterization via V0 (x/a - a/x)^2 with the constant term
  // dropped: A = V0 a^2, B = V0 / a^2. Requires V0 > 0 and a > 0.
  static BasisParams from_goldman(double V0, double a);

  double A() const { return A_; }
  double B() const { return B_; }
  double gamma_p() const { return gamma_; }
  double lam() const { return lam_; }

 private:
  double A_;
  double B_;
  double gamma_;
  double lam_;
};

// Exact spectrum E_n = sqrt(B) (4n + 2 + sqrt(1 + 4A)), n >= 0.
double energy(const BasisParams& p, int n);

// Exact spectrum in (V0, a) variables:
//   (sqrt(V0)/a) (4n + 2 + sqrt(1 + 4 V0 a^2)).
// Identical to energy(from_goldman(V0, a), n).
double energy_goldman(double V0, double a, int n);

// Squared normalization constant
//   C_n^2 = 2 B^{gamma/2} Gamma(n+gamma) / (n! Gamma(gamma)^2),
// returned in log form since it spans many decades in n.
SignedLog norm_const_sq(const BasisParams& p, int n);

// Normalized eigenfunction
//   psi_n(x) = C_n x^{gamma-1/2} e^{-lam x^2/2} 1F1(-n, gamma; lam x^2)
// with the positive root C_n > 0, so sign(psi_n(x)) is the sign of the
// confluent factor. Requires x >= 0; psi_n(0) = 0 by the Dirichlet condition.
double eval_wavefunction(const BasisParams& p, int n, double x);

}  // namespace gkosc
