#include "planarop/special.hpp"

#include <cmath>
#include <stdexcept>

namespace planarop {

LogValue LogValue::from(double x) {
  if (x == 0.0) throw std::domain_error("LogValue cannot represent zero");
  return {std::log(std::abs(x)), x < 0.0 ? -1 : 1};
}

LogValue log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("gamma function pole");
  LogValue out;
  out.log_abs = std::lgamma(x);
  // Gamma is negative on (-1,0), (-3,-2), ...
  if (x < 0.0 && static_cast<long long>(std::floor(x)) % 2 != 0) out.sign = -1;
  return out;
}

double pochhammer(double x, int n) {
  double out = 1.0;
  for (int k = 0; k < n; ++k) out *= x + k;
  return out;
}

double factorial(int n) { return pochhammer(1.0, n); }

}  // namespace planarop
