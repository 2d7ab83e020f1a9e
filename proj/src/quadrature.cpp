#include "planarop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "planarop/gauss.hpp"
#include "planarop/polyfns.hpp"

namespace planarop {

namespace {

constexpr double kPi = std::numbers::pi;

template <typename T>
T pairwise(std::span<const T> terms) {
  constexpr std::size_t kBlock = 16;
  if (terms.size() <= kBlock) {
    T acc{};
    for (const T& t : terms) acc += t;
    return acc;
  }
  std::size_t half = terms.size() / 2;
  half -= half % 2;
  return pairwise(terms.subspan(0, half)) + pairwise(terms.subspan(half));
}

// Gauss-Jacobi in t = r^2 on [0, 1] for the weight (1 - t)^alpha.
GaussRule radial_rule(int n_r, double alpha) { return gauss_jacobi_unit(n_r, alpha); }

void set_angular(QuadratureRule& rule, int count, double span_length) {
  rule.angular_nodes.resize(count);
  rule.angular_weights.assign(count, span_length / count);
  for (int j = 0; j < count; ++j) rule.angular_nodes[j] = span_length * j / count;
}

// Integral of raw(z) d^2z/(pi a b) over the ellipse, without prefactor.
double raw_mass(const Measure& m) {
  const EllipseParams& p = m.params;
  switch (m.kind) {
    case MeasureKind::AreaAlpha: return 1.0 / (1.0 + m.alpha);
    case MeasureKind::BMinus: return 2.0 / ((1.0 + m.alpha) * p.a);
    case MeasureKind::BPlus: return 2.0 / ((1.0 + m.alpha) * (2.0 + m.alpha));
    case MeasureKind::ChebyshevT: return 2.0 * std::log(p.r / p.c) / (p.a * p.b);
    case MeasureKind::ChebyshevV:
    case MeasureKind::ChebyshevW: return (p.r - p.c * p.c / p.r) / (p.a * p.b);
    case MeasureKind::Flat: return 1.0;
  }
  return 0.0;
}

// (1 - h)^alpha on the ellipse itself, nodes in (z, -z) pairs.
void build_area(QuadratureRule& rule, double alpha) {
  const EllipseParams& p = rule.measure.params;
  const GaussRule t = radial_rule(rule.n_r, alpha);
  rule.radial_nodes = t.nodes;
  rule.radial_weights = t.weights;
  set_angular(rule, rule.n_theta, 2.0 * kPi);

  // d^2z = (a b / 2) dt dtheta; relative to d^2z/(pi a b) that is dt dtheta/(2 pi)
  const double scale = rule.measure.prefactor() / (2.0 * kPi);
  const int half = rule.n_theta / 2;
  rule.nodes.reserve(static_cast<std::size_t>(rule.n_r) * rule.n_theta);
  rule.weights.reserve(rule.nodes.capacity());
  for (int i = 0; i < rule.n_r; ++i) {
    const double r = std::sqrt(t.nodes[i]);
    for (int j = 0; j < half; ++j) {
      const double th = rule.angular_nodes[j];
      const complex z(p.a * r * std::cos(th), p.b * r * std::sin(th));
      const double w = scale * t.weights[i] * rule.angular_weights[j];
      rule.nodes.push_back(z);
      rule.weights.push_back(w);
      rule.nodes.push_back(-z);
      rule.weights.push_back(w);
    }
  }
}

// Pullback through w = 2 z^2/c - c from the preimage ellipse E0. Only
// arg z in [0, pi) is needed since z and -z share an image.
//   B-, W:  d^2w/|c + w| = (4/c) d^2z  (the map is 2:1)
//   B+:     d^2w = (8/c^2) |z|^2 d^2z
//   V:      as W with w -> -w
void build_mapped(QuadratureRule& rule) {
  const Measure& m = rule.measure;
  const EllipseParams& p = m.params;
  const EllipseParams e0 = p.preimage();
  const double c = p.c;
  const double alpha = m.has_alpha() ? m.alpha : 0.0;
  const GaussRule t = radial_rule(rule.n_r, alpha);
  rule.radial_nodes = t.nodes;
  rule.radial_weights = t.weights;
  // uniform over [0, pi) with weights doubled: spectral for pi-periodic data
  set_angular(rule, rule.n_theta / 2, kPi);
  for (double& w : rule.angular_weights) w *= 2.0;

  const double base = m.prefactor() / (kPi * p.a * p.b) * (e0.a * e0.b / 2.0);
  const bool plus = m.kind == MeasureKind::BPlus;
  const bool reflect = m.kind == MeasureKind::ChebyshevV;
  const double jac = plus ? 8.0 / (c * c) : 4.0 / c;

  const std::size_t count = rule.radial_nodes.size() * rule.angular_nodes.size();
  rule.nodes.reserve(count);
  rule.weights.reserve(count);
  for (int i = 0; i < rule.n_r; ++i) {
    const double r = std::sqrt(t.nodes[i]);
    for (std::size_t j = 0; j < rule.angular_nodes.size(); ++j) {
      const double th = rule.angular_nodes[j];
      const complex z(e0.a * r * std::cos(th), e0.b * r * std::sin(th));
      complex w = 2.0 * z * z / c - c;
      if (reflect) w = -w;
      double weight = base * jac * t.weights[i] * rule.angular_weights[j];
      if (plus) weight *= std::norm(z);
      rule.nodes.push_back(w);
      rule.weights.push_back(weight);
    }
  }
}

// d^2z/|z^2 - c^2| = d^2w/|w|^2 = du dphi under the Joukowsky map from the
// annulus c < |w| < a + b, u = ln|w|.
void build_annulus(QuadratureRule& rule) {
  const Measure& m = rule.measure;
  const EllipseParams& p = m.params;
  const GaussRule gl = gauss_legendre(rule.n_r);
  const double lo = std::log(p.c);
  const double hi = std::log(p.r);
  rule.radial_nodes.resize(rule.n_r);
  rule.radial_weights.resize(rule.n_r);
  for (int i = 0; i < rule.n_r; ++i) {
    rule.radial_nodes[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i];
    rule.radial_weights[i] = 0.5 * (hi - lo) * gl.weights[i];
  }
  set_angular(rule, rule.n_theta, 2.0 * kPi);

  const double scale = m.prefactor() / (kPi * p.a * p.b);
  const int half = rule.n_theta / 2;
  rule.nodes.reserve(static_cast<std::size_t>(rule.n_r) * rule.n_theta);
  rule.weights.reserve(rule.nodes.capacity());
  for (int i = 0; i < rule.n_r; ++i) {
    const double s = std::exp(rule.radial_nodes[i]);
    for (int j = 0; j < half; ++j) {
      const complex z = joukowsky(p, std::polar(s, rule.angular_nodes[j]));
      const double w = scale * rule.radial_weights[i] * rule.angular_weights[j];
      rule.nodes.push_back(z);
      rule.weights.push_back(w);
      rule.nodes.push_back(-z);
      rule.weights.push_back(w);
    }
  }
}

}  // namespace

double pairwise_sum(std::span<const double> terms) { return pairwise(terms); }
complex pairwise_sum(std::span<const complex> terms) { return pairwise(terms); }

double QuadratureRule::total_mass() const { return pairwise_sum(weights); }

double measure_mass(const Measure& m) { return m.prefactor() * raw_mass(m); }

QuadratureRule build_rule(const Measure& m, int n_r, int n_theta) {
  if (n_r < 4) throw std::invalid_argument("quadrature needs n_r >= 4");
  if (n_theta < 8 || n_theta % 2 != 0)
    throw std::invalid_argument("quadrature needs an even n_theta >= 8");
  QuadratureRule rule;
  rule.measure = m;
  rule.n_r = n_r;
  rule.n_theta = n_theta;
  switch (m.kind) {
    case MeasureKind::AreaAlpha: build_area(rule, m.alpha); break;
    case MeasureKind::Flat: build_area(rule, 0.0); break;
    case MeasureKind::ChebyshevT: build_annulus(rule); break;
    case MeasureKind::BMinus:
    case MeasureKind::BPlus:
    case MeasureKind::ChebyshevV:
    case MeasureKind::ChebyshevW: build_mapped(rule); break;
  }
  return rule;
}

complex inner_product(const ComplexFn& f, const ComplexFn& g, const QuadratureRule& rule) {
  std::vector<complex> terms(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k)
    terms[k] = rule.weights[k] * f(rule.nodes[k]) * std::conj(g(rule.nodes[k]));
  return pairwise_sum(terms);
}

complex moment(int p, int q, const QuadratureRule& rule) {
  if (p < 0 || q < 0) throw std::invalid_argument("moment exponents must be non-negative");
  std::vector<complex> terms(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const complex z = rule.nodes[k];
    complex zp = 1.0, zq = 1.0;
    for (int i = 0; i < p; ++i) zp *= z;
    for (int i = 0; i < q; ++i) zq *= z;
    terms[k] = rule.weights[k] * zp * std::conj(zq);
  }
  return pairwise_sum(terms);
}

double lp_norm(const ComplexFn& f, double p, const QuadratureRule& rule) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm requires p > 0");
  std::vector<double> terms(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k)
    terms[k] = rule.weights[k] * std::pow(std::abs(f(rule.nodes[k])), p);
  return std::pow(pairwise_sum(terms), 1.0 / p);
}

ContourResult contour_check(const EllipseParams& p, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("contour_check needs n, m >= 0");
  const double c = p.c;
  const double r = p.r;
  const int points = std::max(64, 4 * (n + m + 4));
  const PolynomialFamily t_family = PolynomialFamily::chebyshev_t();
  std::vector<complex> terms(points);
  for (int k = 0; k < points; ++k) {
    const complex w = std::polar(r, 2.0 * kPi * k / points);
    const complex x = joukowsky(p, w) / c;
    const complex dT = (n + 1.0) * eval_gegenbauer(0.0, n, x) * (1.0 - c * c / (w * w)) / (2.0 * c);
    const complex dw = complex(0.0, 1.0) * w * (2.0 * kPi / points);
    terms[k] = dT * std::conj(eval_family(t_family, m + 1, x)) * dw;
  }
  auto diagonal = [&](int k) {
    const double q = r / c;
    return kPi * (k + 1.0) / 2.0 * (std::pow(q, 2 * k + 2) - std::pow(q, -(2 * k + 2)));
  };
  ContourResult out;
  out.points = points;
  out.value = pairwise_sum(terms);
  if (n == m) out.expected = complex(0.0, diagonal(n));
  out.scale = std::max(1.0, std::sqrt(diagonal(n) * diagonal(m)));
  return out;
}

}  // namespace planarop
