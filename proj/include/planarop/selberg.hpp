#pragma once

#include <optional>

#include "planarop/geometry.hpp"
#include "planarop/special.hpp"

namespace planarop {

/// Squared norm of the monic Gegenbauer polynomial under dA_alpha, from
/// the classical norm: h~_n = (n!)^2 c^{2n} / (4^n (1+alpha)_n^2) h_n.
double monic_norm(double alpha, const EllipseParams& p, int n);

/// The same quantity from the terminating hypergeometric series
///   h~_n = (c/2)^{2n} sqrt(pi) G(2+a) n! G(2+2a+n)
///          / (2^{2a+1} G(a+3/2) G(1+a+n) G(2+a+n))
///          * F(-n, n+2+2a; a+3/2; -b^2/c^2),
/// evaluated in log space.
LogValue monic_norm_hypergeometric(double alpha, const EllipseParams& p, int n);

/// log(N! prod_{j<N} h~_j).
double selberg_product(double alpha, const EllipseParams& p, int N);

/// log Z_N from the closed product of gamma functions and terminating
/// series, independent of the classical norms.
double selberg_closed(double alpha, const EllipseParams& p, int N);

/// Z_N for N in {1, 2} by tensor quadrature of |Delta_N|^2.
double selberg_direct(double alpha, const EllipseParams& p, int N, int n_r = 16,
                      int n_theta = 32);

struct SelbergResult {
  double alpha = 0.0;
  EllipseParams params;
  int N = 0;
  double closed_log = 0.0;
  double product_log = 0.0;
  std::optional<double> direct;
  double closed_vs_product = 0.0;               // |closed - product| / max(1, |product|)
  std::optional<double> direct_vs_closed;       // relative, in value space
};

SelbergResult selberg(double alpha, const EllipseParams& p, int N, bool with_direct);

}  // namespace planarop
