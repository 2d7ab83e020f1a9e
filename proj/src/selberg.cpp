#include "planarop/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "planarop/ortho.hpp"
#include "planarop/polyfns.hpp"
#include "planarop/quadrature.hpp"

namespace planarop {

namespace {

void require(double alpha, int n, const char* what) {
  if (!(alpha > -1.0)) throw std::invalid_argument(std::string(what) + " requires alpha > -1");
  if (n < 0) throw std::invalid_argument(std::string(what) + " requires a non-negative degree");
}

// sqrt(pi) G(2+a) / (2^{2a+1} G(a+3/2)), shared by every factor.
LogValue common_factor(double alpha) {
  LogValue out;
  out.log_abs = 0.5 * std::log(std::numbers::pi) - (2.0 * alpha + 1.0) * std::log(2.0);
  out *= log_gamma(2.0 + alpha);
  out /= log_gamma(alpha + 1.5);
  return out;
}

// n! G(2+2a+n) / (G(1+a+n) G(2+a+n)) F(-n, n+2+2a; a+3/2; -b^2/c^2)
LogValue degree_factor(double alpha, const EllipseParams& p, int n) {
  LogValue out = log_gamma(n + 1.0);
  out *= log_gamma(2.0 + 2.0 * alpha + n);
  out /= log_gamma(1.0 + alpha + n);
  out /= log_gamma(2.0 + alpha + n);
  const double x = -(p.b * p.b) / (p.c * p.c);
  out *= LogValue::from(eval_terminating_2f1(n, n + 2.0 + 2.0 * alpha, alpha + 1.5, x));
  return out;
}

}  // namespace

double monic_norm(double alpha, const EllipseParams& p, int n) {
  require(alpha, n, "monic_norm");
  double scale = 1.0;
  for (int k = 0; k < n; ++k) {
    const double f = (k + 1.0) * p.c / (2.0 * (1.0 + alpha + k));
    scale *= f * f;
  }
  return scale * gegenbauer_norm(alpha, p, n);
}

LogValue monic_norm_hypergeometric(double alpha, const EllipseParams& p, int n) {
  require(alpha, n, "monic_norm_hypergeometric");
  LogValue out = common_factor(alpha) * degree_factor(alpha, p, n);
  out.log_abs += 2.0 * n * std::log(0.5 * p.c);
  return out;
}

double selberg_product(double alpha, const EllipseParams& p, int N) {
  if (N < 1) throw std::invalid_argument("selberg_product requires N >= 1");
  double acc = std::lgamma(N + 1.0);
  for (int j = 0; j < N; ++j) acc += std::log(monic_norm(alpha, p, j));
  return acc;
}

double selberg_closed(double alpha, const EllipseParams& p, int N) {
  if (N < 1) throw std::invalid_argument("selberg_closed requires N >= 1");
  require(alpha, 0, "selberg_closed");
  LogValue z = log_gamma(N + 1.0);
  z.log_abs += N * (N - 1.0) * std::log(0.5 * p.c);
  const LogValue common = common_factor(alpha);
  for (int n = 0; n < N; ++n) {
    z *= common;
    z *= degree_factor(alpha, p, n);
  }
  if (z.sign < 0) throw std::domain_error("selberg_closed produced a negative partition function");
  return z.log_abs;
}

double selberg_direct(double alpha, const EllipseParams& p, int N, int n_r, int n_theta) {
  if (N < 1 || N > 2) throw std::invalid_argument("selberg_direct supports N in {1, 2}");
  require(alpha, 0, "selberg_direct");
  const QuadratureRule rule = build_rule(Measure::area_alpha(p, alpha), n_r, n_theta);
  if (N == 1) return rule.total_mass();
  const std::size_t count = rule.size();
  std::vector<double> outer(count), inner(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j)
      inner[j] = rule.weights[j] * std::norm(rule.nodes[i] - rule.nodes[j]);
    outer[i] = rule.weights[i] * pairwise_sum(inner);
  }
  return pairwise_sum(outer);
}

SelbergResult selberg(double alpha, const EllipseParams& p, int N, bool with_direct) {
  SelbergResult out;
  out.alpha = alpha;
  out.params = p;
  out.N = N;
  out.closed_log = selberg_closed(alpha, p, N);
  out.product_log = selberg_product(alpha, p, N);
  out.closed_vs_product =
      std::abs(out.closed_log - out.product_log) / std::max(1.0, std::abs(out.product_log));
  if (with_direct) {
    out.direct = selberg_direct(alpha, p, N);
    const double closed = std::exp(out.closed_log);
    out.direct_vs_closed = std::abs(*out.direct - closed) / closed;
  }
  return out;
}

}  // namespace planarop
