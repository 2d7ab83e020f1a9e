#pragma once

#include <cmath>

namespace planarop {

/// A real number stored as sign * exp(log_abs). Products of gamma functions
/// overflow long before the quantities they describe do.
struct LogValue {
  double log_abs = 0.0;
  int sign = 1;

  static LogValue from(double x);
  double value() const { return sign * std::exp(log_abs); }

  LogValue& operator*=(const LogValue& o) {
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
  }
  LogValue& operator/=(const LogValue& o) {
    log_abs -= o.log_abs;
    sign *= o.sign;
    return *this;
  }
  friend LogValue operator*(LogValue x, const LogValue& y) { return x *= y; }
  friend LogValue operator/(LogValue x, const LogValue& y) { return x /= y; }
};

/// log|Gamma(x)| and the sign of Gamma(x). Throws at the poles.
LogValue log_gamma(double x);

/// (x)_n = x (x+1) ... (x+n-1), accumulated multiplicatively.
double pochhammer(double x, int n);

double factorial(int n);

}  // namespace planarop
