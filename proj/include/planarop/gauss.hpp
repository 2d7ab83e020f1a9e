#pragma once

#include <vector>

namespace planarop {

/// One-dimensional Gauss rule, nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch: nodes and weights from the monic recurrence
///   p_{k+1}(x) = (x - diag[k]) p_k(x) - offdiag2[k] p_{k-1}(x)
/// where offdiag2[k] (k >= 1) are the squared off-diagonals of the Jacobi
/// matrix and mu0 is the total mass of the weight.
GaussRule gauss_from_recurrence(const std::vector<double>& diag,
                                const std::vector<double>& offdiag2, double mu0);

/// Weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1.
GaussRule gauss_jacobi(int n, double a, double b);

/// Weight (1-t)^a on [0, 1]; stays finite for large a.
GaussRule gauss_jacobi_unit(int n, double a);

GaussRule gauss_legendre(int n);

/// Weight x^a e^{-x} on [0, inf), a > -1.
GaussRule gauss_laguerre(int n, double a = 0.0);

}  // namespace planarop
