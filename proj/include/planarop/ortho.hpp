#pragma once

#include <Eigen/Dense>
#include <vector>

#include "planarop/geometry.hpp"
#include "planarop/polyfns.hpp"
#include "planarop/quadrature.hpp"

namespace planarop {

/// h_n = (1 + alpha)/(1 + alpha + n) C_n^{(1+alpha)}(x*), the squared norm
/// of C_n^{(1+alpha)}(z/c) under the normalized dA_alpha.
double gegenbauer_norm(double alpha, const EllipseParams& p, int n);

/// The measure a family is orthogonal under, on the ellipse p, in its
/// default convention. For the Jacobi families p is the ellipse carrying
/// the B-/B+ measure (the derived ellipse of the Gegenbauer domain).
/// Hermite has no planar partner and throws std::invalid_argument.
Measure paired_measure(const PolynomialFamily& f, const EllipseParams& p);

/// Throws std::invalid_argument unless f is orthogonal under m.
void check_pairing(const PolynomialFamily& f, const Measure& m);

/// Squared norm of f_n(z/c) under m, in m's convention.
///
///   Gegenbauer   (1+a)/(1+a+n) C_n(x*)
///   Legendre     P_n(x*)/(1+2n)
///   U            U_n(x*)/(1+n)                     (Flat, normalized)
///   JacobiMinus  ((1/2)_n/(1+a)_n)^2 (1+a)/(1+a+2n) C_{2n}(a/c)
///   JacobiPlus   2c (1+a)(2+a) ((1/2)_{n+1}/(1+a)_{n+1})^2
///                  / (a (2+a+2n)) C_{2n+1}(a/c)
///   T            pi/(4n) (q^{2n} - q^{-2n}), n > 0; 2 pi ln q for n = 0
///   V, W         pi c/(1+2n) (q^{2n+1} - q^{-2n-1})
///
/// with q = (a+b)/c, the Gegenbauer-parameter 1+a and C = C^{(1+a)}; the
/// Chebyshev lines are in the flat convention and divided by pi a b for
/// the normalized one.
double closed_norm(const PolynomialFamily& f, const Measure& m, int n);

struct GramResult {
  PolynomialFamily family;
  Measure measure;
  int nmax = 0;
  int n_r = 0;
  int n_theta = 0;
  Eigen::MatrixXcd matrix;
  double max_offdiag = 0.0;
  double max_diag = 0.0;
  std::vector<double> closed_norms;
  std::vector<double> diag_relative_errors;

  double max_offdiag_relative() const { return max_offdiag / max_diag; }
  double max_diag_error() const;
};

/// G(n, m) = <f_n, f_m> with f_n evaluated at z/c.
GramResult gram_matrix(const PolynomialFamily& f, const Measure& m, int nmax,
                       const QuadratureRule& rule);

/// Orthonormal polynomials under the rule's measure by modified Gram-Schmidt
/// on the monomial moment matrix, one reorthogonalization pass. Entry n holds
/// the coefficients of p_n, lowest degree first, with a positive leading
/// coefficient. Throws std::domain_error on numerical rank deficiency.
std::vector<std::vector<complex>> gram_schmidt(const Measure& m, int nmax,
                                               const QuadratureRule& rule);

complex eval_coefficients(const std::vector<complex>& coeffs, complex z);

}  // namespace planarop
