#include "gkosc/gk_basis.hpp"

#include <cmath>
#include <stdexcept>

#include "gkosc/errors.hpp"
#include "gkosc/specfun.hpp"

namespace gkosc {

BasisParams::BasisParams(double A, double B) : A_(A), B_(B) {
  if (!(A >= 0.0)) {
    throw std::invalid_argument("BasisParams: requires A >= 0");
  }
  if (!(B > 0.0)) {
    throw std::invalid_argument("BasisParams: requires B > 0");
  }
  gamma_ = 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * A);
  lam_ = std::sqrt(B);
}

BasisParams BasisParams::from_goldman(double V0, double a) {
  if (!(V0 > 0.0) || !(a > 0.0)) {
    throw std::invalid_argument("from_goldman: requires V0 > 0 and a > 0");
  }
  return BasisParams(V0 * a * a, V0 / (a * a));
}

double energy(const BasisParams& p, int n) {
  if (n < 0) throw InvalidIndex("energy: requires n >= 0");
  return p.lam() * (4.0 * n + 2.0 + std::sqrt(1.0 + 4.0 * p.A()));
}

double energy_goldman(double V0, double a, int n) {
  if (!(V0 > 0.0) || !(a > 0.0)) {
    throw std::invalid_argument("energy_goldman: requires V0 > 0 and a > 0");
  }
  if (n < 0) throw InvalidIndex("energy_goldman: requires n >= 0");
  return std::sqrt(V0) / a * (4.0 * n + 2.0 + std::sqrt(1.0 + 4.0 * V0 * a * a));
}

SignedLog norm_const_sq(const BasisParams& p, int n) {
  if (n < 0) throw InvalidIndex("norm_const_sq: requires n >= 0");
  const double g = p.gamma_p();
  const double logmag = std::log(2.0) + 0.5 * g * std::log(p.B()) +
                        log_gamma(n + g) - log_gamma(n + 1.0) -
                        2.0 * log_gamma(g);
  return SignedLog::from_log(1, logmag);
}

double eval_wavefunction(const BasisParams& p, int n, double x) {
  if (n < 0) throw InvalidIndex("eval_wavefunction: requires n >= 0");
  if (!(x >= 0.0)) {
    throw std::domain_error("eval_wavefunction: requires x >= 0");
  }
  if (x == 0.0) return 0.0;
  const double g = p.gamma_p();
  const double z = p.lam() * x * x;
  // Prefactor in log space; exp underflows gracefully to zero far in the
  // Gaussian tail where the polynomial factor cannot compensate.
  const double logpref = 0.5 * norm_const_sq(p, n).logmag() +
                         (g - 0.5) * std::log(x) - 0.5 * z;
  return std::exp(logpref) * f11_eval(n, g, z);
}

}  // namespace gkosc
