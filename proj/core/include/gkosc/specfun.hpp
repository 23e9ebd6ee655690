#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gkosc/signed_log.hpp"

namespace gkosc {

// log(Gamma(x)) for x > 0 via the 14-term Lanczos fit (g = 607/128).
// Relative accuracy ~1e-15 across (0, 1e8). Throws std::domain_error for
// x <= 0; use gamma_signed for the reflected region.
double log_gamma(double x);

// Gamma(x) as a SignedLog for any real x that is not a pole. Returns nullopt
// exactly at the poles x = 0, -1, -2, ... Negative non-integer arguments go
// through the reflection formula with argument-reduced sin(pi x).
std::optional<SignedLog> gamma_signed(double x);

// 1/Gamma(x); entire, so poles of Gamma map to an exact zero.
SignedLog reciprocal_gamma(double x);

// Rising factorial (a)_k = a (a+1) ... (a+k-1) as a direct signed product.
// Exact zero when the product crosses a nonpositive integer of a; this is
// what makes Gamma-ratio expressions with interior poles well defined.
// Requires k >= 0.
SignedLog pochhammer_signed(double a, int k);

// Monomial coefficients c_j of the degree-n polynomial
// 1F1(-n, g; z) = sum_j c_j z^j, via c_{j+1} = c_j (j-n)/((g+j)(j+1)).
// Requires n >= 0 and g > 0.
std::vector<double> f11_monomial_coeffs(int n, double g);

// 1F1(-n, g; z) evaluated by the three-term recurrence of the associated
// Laguerre polynomials (1F1(-n,g;z) = n! / (g)_n * L_n^{(g-1)}(z)), which is
// forward-stable in the oscillatory region where the monomial form cancels
// catastrophically. Requires n >= 0 and g > 0.
double f11_eval(int n, double g, double z);

// Horner evaluation of the monomial form; accurate only for small n (the
// coefficients alternate), kept for cross-checking f11_eval.
double f11_eval_coeffs(std::span<const double> coeffs, double z);

}  // namespace gkosc
