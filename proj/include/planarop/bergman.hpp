#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "planarop/geometry.hpp"
#include "planarop/quadrature.hpp"

namespace planarop {

/// Orthonormal Gegenbauer basis p_n(z) = C_n^{(1+alpha)}(z/c)/sqrt(h_n) for
/// the normalized dA_alpha on an ellipse.
struct GegenbauerBasis {
  double alpha = 0.0;
  EllipseParams params;

  GegenbauerBasis(double alpha, const EllipseParams& p);

  std::vector<complex> values(int nmax, complex z) const;
  std::vector<complex> derivatives(int nmax, complex z) const;
  /// Leading coefficient of p_n.
  double leading(int n) const;
};

/// sum_{i<N} p_i(z) conj(p_i(w)). With this convention
/// <K_N(., w), p_j> = conj(p_j(w)) for j < N.
complex bergman_kernel(double alpha, const EllipseParams& p, int N, complex z, complex w);

/// Orthonormal polynomials for |v - z|^2 dA_alpha built from the Gegenbauer
/// basis through the reproducing kernel:
///
///   P_N(z) = [K_{N+1}(z, v) p_{N+1}(v) - k_{N+1} p_{N+1}(z)]
///            / ((v - z) sqrt(k_{N+1} k_{N+2})),
///
/// k_j = K_j(v, v). Within 1e-8 of v the quotient is replaced by its limit.
struct ChristoffelBasis {
  GegenbauerBasis base;
  complex v;
  int max_degree = 0;
  std::vector<complex> pv;      // p_i(v), i <= max_degree + 2
  std::vector<double> kappa;    // kappa[j] = K_j(v, v), j <= max_degree + 2
  std::vector<double> a_next;   // a_next[i] = a_{i}, i >= 1
  std::vector<double> b;        // b[i] = b_i

  ChristoffelBasis(double alpha, const EllipseParams& p, complex v, int max_degree);

  complex value(int N, complex z) const;
  std::vector<complex> values(int nmax, complex z) const;
  /// Leading coefficient of P_N.
  double leading(int N) const;
  /// P_N divided by its leading coefficient.
  complex monic(int N, complex z) const;
  /// Closed-form squared norm of the monic P_N: h~_{N+1} k_{N+2} / k_{N+1}.
  double monic_norm(int N) const;
};

complex christoffel_poly(const ChristoffelBasis& basis, int N, complex z);

enum class BasisKind { Gegenbauer, Christoffel };
enum class HessenbergStrategy { Closed, Quadrature };

std::string to_string(BasisKind kind);
std::string to_string(HessenbergStrategy strategy);

/// c_{l,n} = <z P_n, P_l> for 0 <= l <= n+1, 0 <= n <= nmax, stored as an
/// (nmax+2) x (nmax+1) matrix; rows l > n+1 are structural zeros.
struct HessenbergMatrix {
  BasisKind basis = BasisKind::Gegenbauer;
  HessenbergStrategy strategy = HessenbergStrategy::Closed;
  double alpha = 0.0;
  EllipseParams params;
  complex v;
  int nmax = 0;
  Eigen::MatrixXcd entries;

  complex at(int l, int n) const { return entries(l, n); }
  double column_norm(int n) const;
};

/// Plain basis. Closed uses the three-term recurrence coefficients; Quadrature
/// integrates z p_n conj(p_l) with the rule (which must realize dA_alpha).
HessenbergMatrix hessenberg(double alpha, const EllipseParams& p, int nmax,
                            HessenbergStrategy strategy, const QuadratureRule* rule = nullptr);

/// Christoffel basis by quadrature under |v - z|^2 dA_alpha.
HessenbergMatrix hessenberg(const ChristoffelBasis& basis, int nmax, const QuadratureRule& rule);

/// Closed form of c_{l,n} for the Christoffel basis, l <= n - 2.
complex christoffel_entry_closed(const ChristoffelBasis& basis, int l, int n);

/// Smallest d with |c_{l,n}| <= tol * ||c_{.,n}|| for every l < n + 1 - d;
/// nmax + 1 when no band exists within the stored block.
int bandwidth(const HessenbergMatrix& h, double tol);

/// (C_{l+1}(x)/C_{l+1}(1))^2 - C_l(x) C_{l+2}(x)/(C_l(1) C_{l+2}(1)),
/// C = C^{(1+alpha)}.
double turan_determinant(double alpha, int l, double x);

/// Monic Gegenbauer polynomial n! c^n/(2^n (1+alpha)_n) C_n(z/c).
complex monic_gegenbauer(double alpha, const EllipseParams& p, int n, complex z);

/// Expectation of prod_i (z - z_i) over N points with joint density
/// |Delta_N|^2 prod dA_alpha(z_i), by tensor quadrature, compared with the
/// monic Gegenbauer polynomial on a 5 x 5 grid inside the ellipse.
struct HeineResult {
  int N = 0;
  std::vector<complex> grid;
  std::vector<complex> expectation;
  std::vector<complex> monic;
  double residual = 0.0;
};

HeineResult heine_check(double alpha, const EllipseParams& p, int N, int n_r = 16,
                        int n_theta = 32);

}  // namespace planarop
