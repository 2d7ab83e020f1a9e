#pragma once

#include <complex>
#include <string>
#include <vector>

#include "planarop/geometry.hpp"
#include "planarop/special.hpp"

namespace planarop {

enum class FamilyKind {
  Gegenbauer,   // C_n^{(1+alpha)}
  JacobiMinus,  // P_n^{(alpha+1/2, -1/2)}
  JacobiPlus,   // P_n^{(alpha+1/2, +1/2)}
  ChebyshevT,
  ChebyshevU,
  ChebyshevV,
  ChebyshevW,
  Legendre,
  Hermite,      // physicists' H_n, orthogonal for exp(-x^2)
};

/// A polynomial family and its parameter. alpha is validated (> -1) when the
/// family is built through one of the factories.
struct PolynomialFamily {
  FamilyKind kind = FamilyKind::Gegenbauer;
  double alpha = 0.0;

  static PolynomialFamily gegenbauer(double alpha);
  static PolynomialFamily jacobi_half(double alpha, int sign);  // sign = -1 or +1
  static PolynomialFamily chebyshev_t() { return {FamilyKind::ChebyshevT, 0.0}; }
  static PolynomialFamily chebyshev_u() { return {FamilyKind::ChebyshevU, 0.0}; }
  static PolynomialFamily chebyshev_v() { return {FamilyKind::ChebyshevV, 0.0}; }
  static PolynomialFamily chebyshev_w() { return {FamilyKind::ChebyshevW, 0.0}; }
  static PolynomialFamily legendre() { return {FamilyKind::Legendre, -0.5}; }
  static PolynomialFamily hermite() { return {FamilyKind::Hermite, 0.0}; }

  /// The Gegenbauer parameter alpha in C^{(1+alpha)} that the family reduces
  /// to (Legendre -> -1/2, U -> 0); only meaningful for those three kinds.
  double gegenbauer_alpha() const;
  bool is_gegenbauer_like() const;
};

std::string to_string(const PolynomialFamily& f);
PolynomialFamily parse_family(const std::string& name, double alpha);

/// C_n^{(1+alpha)}(z) by the forward three-term recurrence.
complex eval_gegenbauer(double alpha, int n, complex z);

/// C_0 .. C_nmax at z.
std::vector<complex> eval_gegenbauer_all(double alpha, int nmax, complex z);

/// d/dz C_n^{(1+alpha)}(z) = 2(1+alpha) C_{n-1}^{(2+alpha)}(z).
complex eval_gegenbauer_derivative(double alpha, int n, complex z);

/// C_n^{(1+alpha)}(1) = Gamma(2+2alpha+n) / (Gamma(2+2alpha) n!).
double gegenbauer_at_one(double alpha, int n);

complex eval_family(const PolynomialFamily& f, int n, complex z);
std::vector<complex> eval_family_all(const PolynomialFamily& f, int nmax, complex z);

/// Monomial coefficients of C_n^{(1+alpha)}, lowest degree first. Exact zeros
/// where n - j is odd. Intended as a small-n oracle only.
struct CoefficientVector {
  int n = 0;
  double alpha = 0.0;
  std::vector<double> coeffs;

  complex evaluate(complex z) const;
};

/// Throws std::invalid_argument for n > 30 or alpha <= -1.
CoefficientVector gegenbauer_coeffs(double alpha, int n);

/// Coefficients of the orthonormal recurrence
///   z p_n = a_{n+1} p_{n+1} + b_n p_{n-1}
/// for p_n = C_n^{(1+alpha)}(z/c)/sqrt(h_n) under dA_alpha. b_0 is 0.
struct RecurrenceCoeffs {
  double a_next = 0.0;  // a_{n+1}
  double b = 0.0;       // b_n
};

RecurrenceCoeffs recurrence_coeffs(double alpha, const EllipseParams& p, int n);

/// F(-n, b; c; x) summed term by term. Throws std::invalid_argument when c
/// is a non-positive integer >= -n.
double eval_terminating_2f1(int n, double b, double c, double x);

}  // namespace planarop
