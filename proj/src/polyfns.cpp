#include "planarop/polyfns.hpp"

#include <cmath>
#include <stdexcept>

#include "planarop/ortho.hpp"

namespace planarop {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("family requires alpha > -1");
}

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("polynomial degree must be non-negative");
}

// P_0 .. P_nmax of the Jacobi family with parameters (ja, jb).
std::vector<complex> jacobi_all(double ja, double jb, int nmax, complex x) {
  std::vector<complex> out(nmax + 1);
  out[0] = 1.0;
  if (nmax == 0) return out;
  out[1] = 0.5 * ((ja + jb + 2.0) * x + (ja - jb));
  for (int n = 2; n <= nmax; ++n) {
    const double s = 2.0 * n + ja + jb;
    const double denom = 2.0 * n * (n + ja + jb) * (s - 2.0);
    const complex lin = (s - 1.0) * (s * (s - 2.0) * x + (ja * ja - jb * jb));
    const double back = 2.0 * (n + ja - 1.0) * (n + jb - 1.0) * s;
    out[n] = (lin * out[n - 1] - back * out[n - 2]) / denom;
  }
  return out;
}

// Families obeying y_{n+1} = 2x y_n - y_{n-1}, distinguished by y_1.
std::vector<complex> chebyshev_all(int nmax, complex x, complex first) {
  std::vector<complex> out(nmax + 1);
  out[0] = 1.0;
  if (nmax == 0) return out;
  out[1] = first;
  for (int n = 1; n < nmax; ++n) out[n + 1] = 2.0 * x * out[n] - out[n - 1];
  return out;
}

std::vector<complex> hermite_all(int nmax, complex x) {
  std::vector<complex> out(nmax + 1);
  out[0] = 1.0;
  if (nmax == 0) return out;
  out[1] = 2.0 * x;
  for (int n = 1; n < nmax; ++n) out[n + 1] = 2.0 * x * out[n] - 2.0 * n * out[n - 1];
  return out;
}

}  // namespace

PolynomialFamily PolynomialFamily::gegenbauer(double alpha) {
  require_alpha(alpha);
  return {FamilyKind::Gegenbauer, alpha};
}

PolynomialFamily PolynomialFamily::jacobi_half(double alpha, int sign) {
  require_alpha(alpha);
  if (sign != 1 && sign != -1) throw std::invalid_argument("jacobi_half sign must be +1 or -1");
  return {sign < 0 ? FamilyKind::JacobiMinus : FamilyKind::JacobiPlus, alpha};
}

double PolynomialFamily::gegenbauer_alpha() const {
  switch (kind) {
    case FamilyKind::Gegenbauer: return alpha;
    case FamilyKind::Legendre: return -0.5;
    case FamilyKind::ChebyshevU: return 0.0;
    default: throw std::logic_error("family has no Gegenbauer parameter");
  }
}

bool PolynomialFamily::is_gegenbauer_like() const {
  return kind == FamilyKind::Gegenbauer || kind == FamilyKind::Legendre ||
         kind == FamilyKind::ChebyshevU;
}

std::string to_string(const PolynomialFamily& f) {
  switch (f.kind) {
    case FamilyKind::Gegenbauer: return "gegenbauer";
    case FamilyKind::JacobiMinus: return "jacobi-minus";
    case FamilyKind::JacobiPlus: return "jacobi-plus";
    case FamilyKind::ChebyshevT: return "chebyshev-t";
    case FamilyKind::ChebyshevU: return "chebyshev-u";
    case FamilyKind::ChebyshevV: return "chebyshev-v";
    case FamilyKind::ChebyshevW: return "chebyshev-w";
    case FamilyKind::Legendre: return "legendre";
    case FamilyKind::Hermite: return "hermite";
  }
  return "unknown";
}

PolynomialFamily parse_family(const std::string& name, double alpha) {
  if (name == "gegenbauer") return PolynomialFamily::gegenbauer(alpha);
  if (name == "jacobi-minus") return PolynomialFamily::jacobi_half(alpha, -1);
  if (name == "jacobi-plus") return PolynomialFamily::jacobi_half(alpha, +1);
  if (name == "chebyshev-t") return PolynomialFamily::chebyshev_t();
  if (name == "chebyshev-u") return PolynomialFamily::chebyshev_u();
  if (name == "chebyshev-v") return PolynomialFamily::chebyshev_v();
  if (name == "chebyshev-w") return PolynomialFamily::chebyshev_w();
  if (name == "legendre") return PolynomialFamily::legendre();
  if (name == "hermite") return PolynomialFamily::hermite();
  throw std::invalid_argument("unknown polynomial family '" + name + "'");
}

std::vector<complex> eval_gegenbauer_all(double alpha, int nmax, complex z) {
  require_alpha(alpha);
  require_degree(nmax);
  const double lambda = 1.0 + alpha;
  std::vector<complex> out(nmax + 1);
  out[0] = 1.0;
  if (nmax == 0) return out;
  out[1] = 2.0 * lambda * z;
  for (int n = 1; n < nmax; ++n)
    out[n + 1] = (2.0 * (n + lambda) * z * out[n] - (n + 2.0 * lambda - 1.0) * out[n - 1]) / (n + 1.0);
  return out;
}

complex eval_gegenbauer(double alpha, int n, complex z) {
  return eval_gegenbauer_all(alpha, n, z)[n];
}

complex eval_gegenbauer_derivative(double alpha, int n, complex z) {
  require_degree(n);
  if (n == 0) return 0.0;
  return 2.0 * (1.0 + alpha) * eval_gegenbauer(alpha + 1.0, n - 1, z);
}

double gegenbauer_at_one(double alpha, int n) {
  require_alpha(alpha);
  require_degree(n);
  // (2+2alpha)_n / n!
  double out = 1.0;
  for (int k = 0; k < n; ++k) out *= (2.0 + 2.0 * alpha + k) / (k + 1.0);
  return out;
}

std::vector<complex> eval_family_all(const PolynomialFamily& f, int nmax, complex z) {
  require_degree(nmax);
  switch (f.kind) {
    case FamilyKind::Gegenbauer:
    case FamilyKind::Legendre:
    case FamilyKind::ChebyshevU: return eval_gegenbauer_all(f.gegenbauer_alpha(), nmax, z);
    case FamilyKind::JacobiMinus: return jacobi_all(f.alpha + 0.5, -0.5, nmax, z);
    case FamilyKind::JacobiPlus: return jacobi_all(f.alpha + 0.5, 0.5, nmax, z);
    case FamilyKind::ChebyshevT: return chebyshev_all(nmax, z, z);
    case FamilyKind::ChebyshevV: return chebyshev_all(nmax, z, 2.0 * z - 1.0);
    case FamilyKind::ChebyshevW: return chebyshev_all(nmax, z, 2.0 * z + 1.0);
    case FamilyKind::Hermite: return hermite_all(nmax, z);
  }
  throw std::logic_error("unhandled family");
}

complex eval_family(const PolynomialFamily& f, int n, complex z) {
  return eval_family_all(f, n, z)[n];
}

complex CoefficientVector::evaluate(complex z) const {
  complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CoefficientVector gegenbauer_coeffs(double alpha, int n) {
  require_alpha(alpha);
  require_degree(n);
  if (n > 30) throw std::invalid_argument("gegenbauer_coeffs is limited to n <= 30");
  CoefficientVector out{n, alpha, std::vector<double>(n + 1, 0.0)};
  const double lg_alpha = std::lgamma(alpha + 1.0);
  for (int j = n % 2; j <= n; j += 2) {
    const int half = (n - j) / 2;
    const double mag = std::exp(j * std::log(2.0) + std::lgamma(alpha + 1.0 + 0.5 * (n + j)) -
                                lg_alpha - std::lgamma(j + 1.0) - std::lgamma(1.0 + half));
    out.coeffs[j] = (half % 2 == 0) ? mag : -mag;
  }
  return out;
}

RecurrenceCoeffs recurrence_coeffs(double alpha, const EllipseParams& p, int n) {
  require_alpha(alpha);
  require_degree(n);
  const double h_n = gegenbauer_norm(alpha, p, n);
  const double h_next = gegenbauer_norm(alpha, p, n + 1);
  RecurrenceCoeffs out;
  out.a_next = p.c * (n + 1.0) / (2.0 * (n + alpha + 1.0)) * std::sqrt(h_next / h_n);
  if (n > 0) {
    const double h_prev = gegenbauer_norm(alpha, p, n - 1);
    out.b = p.c * (n + 2.0 * alpha + 1.0) / (2.0 * (n + alpha + 1.0)) * std::sqrt(h_prev / h_n);
  }
  return out;
}

double eval_terminating_2f1(int n, double b, double c, double x) {
  require_degree(n);
  if (c <= 0.0 && c == std::floor(c) && c >= -n)
    throw std::invalid_argument("2F1 lower parameter is a non-positive integer within the series");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

}  // namespace planarop
