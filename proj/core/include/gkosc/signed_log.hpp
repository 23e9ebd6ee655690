#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace gkosc {

// A real number stored as sign * exp(logmag). Products and quotients of large
// gamma-function ratios stay representable long after the linear value would
// overflow; zero is a first-class value (sign == 0).
class SignedLog {
 public:
  constexpr SignedLog() = default;  // zero

  static constexpr SignedLog zero() { return SignedLog(); }
  static constexpr SignedLog one() { return SignedLog(1, 0.0); }

  static SignedLog from_value(double v) {
    if (v == 0.0) return zero();
    return SignedLog(v > 0.0 ? 1 : -1, std::log(std::abs(v)));
  }

  static constexpr SignedLog from_log(int sign, double logmag) {
    return sign == 0 ? zero() : SignedLog(sign > 0 ? 1 : -1, logmag);
  }

  constexpr int sign() const { return sign_; }
  constexpr double logmag() const { return logmag_; }
  constexpr bool is_zero() const { return sign_ == 0; }

  // Linear value; overflows to +-inf and underflows to +-0 like exp does.
  double value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(logmag_); }

  // sign * exp(logmag - log_offset); lets callers factor out a common scale
  // before leaving log space.
  double value_scaled(double log_offset) const {
    return sign_ == 0 ? 0.0 : sign_ * std::exp(logmag_ - log_offset);
  }

  constexpr SignedLog operator-() const {
    return SignedLog(-sign_, logmag_);
  }

  constexpr SignedLog& operator*=(const SignedLog& o) {
    if (sign_ == 0 || o.sign_ == 0) {
      sign_ = 0;
      logmag_ = 0.0;
    } else {
      sign_ *= o.sign_;
      logmag_ += o.logmag_;
    }
    return *this;
  }

  SignedLog& operator/=(const SignedLog& o) {
    if (o.sign_ == 0) throw std::domain_error("SignedLog: division by zero");
    if (sign_ != 0) {
      sign_ *= o.sign_;
      logmag_ -= o.logmag_;
    }
    return *this;
  }

  friend constexpr SignedLog operator*(SignedLog a, const SignedLog& b) {
    a *= b;
    return a;
  }

  friend SignedLog operator/(SignedLog a, const SignedLog& b) {
    a /= b;
    return a;
  }

 private:
  constexpr SignedLog(int sign, double logmag) : sign_(sign), logmag_(logmag) {}

  int sign_ = 0;
  double logmag_ = 0.0;
};

}  // namespace gkosc
