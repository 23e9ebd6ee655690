#include "gkosc/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkosc/errors.hpp"

namespace gkosc {

namespace {

// sin(pi x) with the argument reduced to [-0.5, 0.5] before multiplying by
// pi, so half-integer and near-integer arguments keep full precision.
double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: requires x > 0");
  }
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  const double tmp = x + 5.24218750000000000;  // x + g + 1/2, g = 607/128
  double ser = 0.999999999999997092;
  for (const double c : cof) {
    ser += c / ++y;
  }
  return (x + 0.5) * std::log(tmp) - tmp +
         std::log(2.5066282746310005 * ser / x);
}

std::optional<SignedLog> gamma_signed(double x) {
  if (x > 0.0) {
    return SignedLog::from_log(1, log_gamma(x));
  }
  if (is_nonpositive_integer(x)) {
    return std::nullopt;
  }
  // Gamma(x) = pi / (sin(pi x) Gamma(1-x)) for x < 0.
  const double s = sin_pi(x);
  const double logmag =
      std::log(std::numbers::pi) - std::log(std::abs(s)) - log_gamma(1.0 - x);
  return SignedLog::from_log(s > 0.0 ? 1 : -1, logmag);
}

SignedLog reciprocal_gamma(double x) {
  const auto g = gamma_signed(x);
  if (!g) return SignedLog::zero();
  return SignedLog::one() / *g;
}

SignedLog pochhammer_signed(double a, int k) {
  if (k < 0) {
    throw InvalidIndex("pochhammer_signed: requires k >= 0");
  }
  SignedLog prod = SignedLog::one();
  for (int i = 0; i < k; ++i) {
    const double factor = a + i;
    if (factor == 0.0) return SignedLog::zero();
    prod *= SignedLog::from_value(factor);
  }
  return prod;
}

std::vector<double> f11_monomial_coeffs(int n, double g) {
  if (n < 0) throw InvalidIndex("f11_monomial_coeffs: requires n >= 0");
  if (!(g > 0.0)) {
    throw std::domain_error("f11_monomial_coeffs: requires g > 0");
  }
  std::vector<double> c(static_cast<size_t>(n) + 1);
  c[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    c[j + 1] = c[j] * (j - n) / ((g + j) * (j + 1));
  }
  return c;
}

double f11_eval(int n, double g, double z) {
  if (n < 0) throw InvalidIndex("f11_eval: requires n >= 0");
  if (!(g > 0.0)) throw std::domain_error("f11_eval: requires g > 0");
  if (n == 0) return 1.0;
  // Upward recurrence for L_k^{(a)}(z), a = g - 1:
  //   (k+1) L_{k+1} = (2k+1+a-z) L_k - (k+a) L_{k-1}.
  const double a = g - 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + a - z;
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2 * k + 1 + a - z) * lk - (k + a) * lkm1) / (k + 1);
    lkm1 = lk;
    lk = lkp1;
  }
  // 1F1(-n, g; z) = n! / (g)_n * L_n^{(g-1)}(z); the norm factor is a ratio
  // of same-scale gammas, safe in log space.
  const double lognorm = log_gamma(n + 1.0) + log_gamma(g) - log_gamma(n + g);
  return std::exp(lognorm) * lk;
}

double f11_eval_coeffs(std::span<const double> coeffs, double z) {
  double acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * z + coeffs[i];
  }
  return acc;
}

}  // namespace gkosc
