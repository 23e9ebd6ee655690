#pragma once

#include <string_view>
#include <vector>

#include "gkosc/matrix_elements.hpp"

namespace gkosc {

// Generalized Gauss-Laguerre rule for integrals
//   int_0^inf r^a e^{-r} f(r) dr ~= sum_i weights[i] f(nodes[i]).
// Nodes ascend and weights are positive; exact for polynomial f of degree
// <= 2*npoints - 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double laguerre_exponent = 0.0;  // the a in r^a e^{-r}
};

// Golub-Welsch construction: nodes are the eigenvalues of the Laguerre
// Jacobi matrix (diagonal 2k+a+1, off-diagonal sqrt(k(k+a))), weights are
// Gamma(a+1) times the squared first eigenvector components. Requires
// a > -1 and npoints >= 1.
QuadratureRule gauss_laguerre_rule(double a, int npoints);

// Term-by-term oracle: both confluent factors expanded into their finite
// monomial sums, each monomial pair integrated exactly, everything summed
// with compensated summation. The inner pure-product double sum cancels
// heavily for large indices, so it is accumulated in quad precision; the
// gamma prefactors stay in double log space. Independent of matel_gk's
// single-sum formula.
double matel_termwise(const MatElemQuery& q);

// Quadrature oracle: after r = sqrt(B) x^2 the integrand is a polynomial
// against the weight r^{gamma-1-alpha/2} e^{-r}, so a Gauss-Laguerre rule
// with ceil((m+n)/2) + 2 points integrates it exactly. Independent of both
// series routes.
double matel_quadrature(const MatElemQuery& q);

// <m|n> by the alpha = 0 instance of the quadrature route; equals
// delta_{mn} up to rounding and validates normalization plus orthogonality.
double overlap_quadrature(const BasisParams& p, int m, int n);

// Closed-form L2(0, inf) test functions for completeness checks.
enum class TestFunction {
  kXExp,          // x e^{-x},              norm^2 = 1/4
  kPowerGauss,    // x^{gamma-1/2} e^{-x^2}, norm^2 = Gamma(gamma)/2^{gamma+1}
  kPsi0,          // ground basis state,     norm^2 = 1
  kPsi0PlusPsi2,  // psi_0 + psi_2,          norm^2 = 2
};

// Parse a catalog name ("x_exp", "power_gauss", "psi0", "psi0_plus_psi2").
TestFunction test_function_from_name(std::string_view name);

// Exact squared norm of the catalog entry under params p.
double parseval_norm_sq(const BasisParams& p, TestFunction f);

// Partial sums S_N = sum_{n<=N} <f|psi_n>^2 for N = 0..n_max. Coefficients
// come from composite Gauss-Legendre panels sized to the Gaussian decay of
// the basis. S_N is non-decreasing and bounded by parseval_norm_sq.
std::vector<double> parseval_partials(const BasisParams& p, TestFunction f,
                                      int n_max);

// The single value S_{n_max}.
double parseval_partial(const BasisParams& p, TestFunction f, int n_max);

}  // namespace gkosc
