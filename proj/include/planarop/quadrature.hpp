#pragma once

#include <functional>
#include <span>
#include <vector>

#include "planarop/geometry.hpp"

namespace planarop {

inline constexpr int kDefaultRadialNodes = 96;
inline constexpr int kDefaultAngularNodes = 384;

/// Tensor rule realizing a Measure: sum_k weights[k] f(nodes[k]) approximates
/// the integral of f against the measure, including its prefactor.
///
/// For AreaAlpha/Flat the radial rule is Gauss-Jacobi in t = r^2 and the
/// nodes come in adjacent (z, -z) pairs, so odd integrands sum to exactly 0.
/// ChebyshevT is integrated over the Joukowsky annulus in (ln|w|, arg w);
/// B-/B+ and V/W are pulled back through the quadratic map from the
/// preimage ellipse.
struct QuadratureRule {
  Measure measure;
  int n_r = 0;
  int n_theta = 0;
  std::vector<double> radial_nodes;
  std::vector<double> radial_weights;
  std::vector<double> angular_nodes;
  std::vector<double> angular_weights;
  std::vector<complex> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double total_mass() const;
};

/// Requires n_r >= 4, n_theta >= 8 and n_theta even.
QuadratureRule build_rule(const Measure& m, int n_r = kDefaultRadialNodes,
                          int n_theta = kDefaultAngularNodes);

/// Total mass of m in its own convention.
double measure_mass(const Measure& m);

/// Pairwise summation with even split points; the result depends only on
/// the order of the terms.
double pairwise_sum(std::span<const double> terms);
complex pairwise_sum(std::span<const complex> terms);

using ComplexFn = std::function<complex(complex)>;

/// sum_k w_k f(z_k) conj(g(z_k)).
complex inner_product(const ComplexFn& f, const ComplexFn& g, const QuadratureRule& rule);

/// <z^p, z^q> under the rule.
complex moment(int p, int q, const QuadratureRule& rule);

/// (sum_k w_k |f(z_k)|^p)^{1/p}.
double lp_norm(const ComplexFn& f, double p, const QuadratureRule& rule);

/// Trapezoid value of the circle integral over |w| = a + b of
///   d/dw T_{n+1}(z(w)/c) * conj(T_{m+1}(z(w)/c)) dw,  z(w) Joukowsky,
/// and its closed value i pi (n+1)/2 [(r/c)^{2n+2} - (c/r)^{2n+2}] delta_nm.
/// scale = max(1, sqrt(|D_n| |D_m|)) with D_k the diagonal value for k; the
/// off-diagonal zeros are only resolvable relative to it.
struct ContourResult {
  complex value;
  complex expected;
  double scale = 1.0;
  int points = 0;

  double error() const { return std::abs(value - expected) / scale; }
};

ContourResult contour_check(const EllipseParams& p, int n, int m);

}  // namespace planarop
