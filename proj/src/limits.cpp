#include "planarop/limits.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "planarop/bergman.hpp"
#include "planarop/gauss.hpp"
#include "planarop/polyfns.hpp"
#include "planarop/quadrature.hpp"
#include "planarop/special.hpp"

namespace planarop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kLimitRadial = 48;
constexpr int kLimitAngular = 96;
constexpr double kRoundingFloor = 1e-14;

void require_degrees(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("limit degrees must be non-negative");
}

void require_monotone(const std::vector<double>& xs, bool increasing, const char* what) {
  if (xs.empty()) throw std::invalid_argument(std::string(what) + " sequence is empty");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (increasing ? !(xs[i] > xs[i - 1]) : !(xs[i] < xs[i - 1]))
      throw std::invalid_argument(std::string(what) + " sequence must be strictly " +
                                  (increasing ? "increasing" : "decreasing"));
}

void finish(LimitReport& r) {
  r.decreasing = true;
  for (std::size_t i = 1; i < r.steps.size(); ++i) {
    const double cur = r.steps[i].residual;
    if (!(cur < r.steps[i - 1].residual) && cur > kRoundingFloor) r.decreasing = false;
  }
  r.verdict = r.decreasing && r.steps.back().residual <= r.tolerance;
}

// sum_k w_k f_m(z_k) conj(f_n(z_k)) with f evaluated from a values table.
complex gram_entry(const QuadratureRule& rule, int n, int m,
                   const std::function<std::vector<complex>(complex)>& all) {
  std::vector<complex> terms(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const auto v = all(rule.nodes[k]);
    terms[k] = rule.weights[k] * v[m] * std::conj(v[n]);
  }
  return pairwise_sum(terms);
}

}  // namespace

std::string to_string(LimitRegime regime) {
  switch (regime) {
    case LimitRegime::HermitePlane: return "hermite";
    case LimitRegime::DiscTruncatedUnitary: return "disc";
    case LimitRegime::RealLine: return "realline";
  }
  return "unknown";
}

LimitRegime parse_regime(const std::string& name) {
  if (name == "hermite") return LimitRegime::HermitePlane;
  if (name == "disc") return LimitRegime::DiscTruncatedUnitary;
  if (name == "realline") return LimitRegime::RealLine;
  throw std::invalid_argument("unknown limit regime '" + name + "'");
}

double hypergeometric_half_at_one(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("requires alpha > -1");
  boost::math::quadrature::tanh_sinh<double> integrator;
  // even integrand over [-1, 1]; |xc| is the distance to the nearer endpoint
  auto f = [alpha](double x, double xc) {
    const double d = std::abs(xc);
    const double s = (std::abs(x) < 0.5) ? (1.0 - x) * (1.0 + x) : d * (2.0 - d);
    return std::pow(s, alpha);
  };
  return 0.5 * integrator.integrate(f, -1.0, 1.0);
}

double hypergeometric_half_at_one_closed(double alpha) {
  return std::exp(0.5 * std::log(kPi) + std::lgamma(1.0 + alpha) - std::log(2.0) -
                  std::lgamma(alpha + 1.5));
}

LimitReport hermite_limit(const EllipseParams& p, int n, int m, const std::vector<double>& alphas) {
  require_degrees(n, m);
  require_monotone(alphas, true, "alpha");
  LimitReport r;
  r.regime = LimitRegime::HermitePlane;
  r.n = n;
  r.m = m;
  r.a = p.a;
  r.b = p.b;
  r.alpha = alphas.back();
  r.tolerance = kHermiteTolerance;
  r.residual_relative = n == m;

  const double target = n == m ? kPi * factorial(n) * p.a * p.b * std::pow(2.0 * p.x_star, n) : 0.0;
  const double scale = n == m ? target : kPi * p.a * p.b;

  // The limit object itself: int H_m(z/c) H_n(conj z/c) e^{-h} d^2z in
  // elliptic coordinates with Gauss-Laguerre in t = r^2.
  {
    const GaussRule lag = gauss_laguerre(40);
    const PolynomialFamily h = PolynomialFamily::hermite();
    const int nphi = 4 * (n + m + 4);
    std::vector<complex> terms;
    for (std::size_t i = 0; i < lag.nodes.size(); ++i) {
      const double rr = std::sqrt(lag.nodes[i]);
      for (int j = 0; j < nphi; ++j) {
        const double th = 2.0 * kPi * j / nphi;
        const complex z(p.a * rr * std::cos(th), p.b * rr * std::sin(th));
        const auto hv = eval_family_all(h, std::max(n, m), z / p.c);
        terms.push_back(0.5 * p.a * p.b * lag.weights[i] * (2.0 * kPi / nphi) * hv[m] *
                        std::conj(hv[n]));
      }
    }
    r.reference = pairwise_sum(terms).real();
    r.reference_closed = target;
  }

  for (double alpha : alphas) {
    const double s = std::sqrt(1.0 + alpha);
    const EllipseParams scaled = make_params(p.a * s, p.b * s);
    const QuadratureRule rule = build_rule(Measure::area_alpha(scaled, alpha), kLimitRadial, kLimitAngular);
    const int top = std::max(n, m);
    const complex g = gram_entry(rule, n, m, [&](complex z) {
      return eval_gegenbauer_all(alpha, top, z / scaled.c);
    });
    const complex value =
        factorial(n) * factorial(m) * std::pow(1.0 + alpha, -0.5 * (n + m)) * kPi * p.a * p.b * g;
    r.steps.push_back({alpha, value, target, std::abs(value - target) / scale});
  }
  finish(r);
  return r;
}

LimitReport disc_limit(double a, int n, int m, double alpha, const std::vector<double>& bs) {
  require_degrees(n, m);
  require_monotone(bs, true, "b");
  if (!(alpha > -1.0)) throw std::invalid_argument("disc_limit requires alpha > -1");
  if (bs.front() <= 0.0 || bs.back() >= a) throw std::invalid_argument("disc_limit needs 0 < b < a");
  LimitReport r;
  r.regime = LimitRegime::DiscTruncatedUnitary;
  r.n = n;
  r.m = m;
  r.alpha = alpha;
  r.a = a;
  r.b = bs.back();
  r.tolerance = kDiscTolerance;
  r.residual_relative = false;

  const double target =
      n == m ? std::exp(std::lgamma(n + 1.0) + std::lgamma(1.0 + alpha) - std::lgamma(1.0 + alpha + n)) *
                   (1.0 + alpha) * std::pow(a, 2 * n) / (1.0 + alpha + n)
             : 0.0;

  // Reference on the disc |z| < a in polar coordinates.
  {
    const GaussRule t = gauss_jacobi_unit(kLimitRadial, alpha);
    std::vector<complex> terms;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const double rr = a * std::sqrt(t.nodes[i]);
      for (int j = 0; j < kLimitAngular; ++j) {
        const complex z = std::polar(rr, 2.0 * kPi * j / kLimitAngular);
        terms.push_back((1.0 + alpha) * t.weights[i] / kLimitAngular * std::pow(z, m) *
                        std::conj(std::pow(z, n)));
      }
    }
    r.reference = pairwise_sum(terms).real();
    r.reference_closed = target;
  }

  for (double b : bs) {
    const EllipseParams p = make_params(a, b);
    const QuadratureRule rule = build_rule(Measure::area_alpha(p, alpha), kLimitRadial, kLimitAngular);
    const int top = std::max(n, m);
    const complex value = gram_entry(rule, n, m, [&](complex z) {
      std::vector<complex> out(top + 1);
      for (int k = 0; k <= top; ++k) out[k] = monic_gegenbauer(alpha, p, k, z);
      return out;
    });
    r.steps.push_back({b, value, target, std::abs(value - target)});
  }
  finish(r);
  return r;
}

LimitReport realline_limit(double a, int n, int m, double alpha, const std::vector<double>& bs) {
  require_degrees(n, m);
  require_monotone(bs, false, "b");
  if (!(alpha > -1.0)) throw std::invalid_argument("realline_limit requires alpha > -1");
  if (bs.front() >= a || bs.back() <= 0.0) throw std::invalid_argument("realline_limit needs 0 < b < a");
  LimitReport r;
  r.regime = LimitRegime::RealLine;
  r.n = n;
  r.m = m;
  r.alpha = alpha;
  r.a = a;
  r.b = bs.back();
  r.tolerance = kRealLineTolerance;
  r.residual_relative = n == m;

  const int top = std::max(n, m);
  const double prefactor = 2.0 * (1.0 + alpha) / kPi * hypergeometric_half_at_one(alpha);
  {
    const GaussRule gj = gauss_jacobi(32, alpha + 0.5, alpha + 0.5);
    std::vector<double> terms(gj.nodes.size());
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
      const auto cv = eval_gegenbauer_all(alpha, top, gj.nodes[i]);
      terms[i] = gj.weights[i] * cv[m].real() * cv[n].real();
    }
    r.reference = prefactor * pairwise_sum(terms);
    if (n == m) {
      const double real_norm = std::exp((1.0 - 2.0 * (1.0 + alpha)) * std::log(2.0) + std::log(kPi) +
                                        std::lgamma(2.0 + 2.0 * alpha + n) - 2.0 * std::lgamma(1.0 + alpha) -
                                        std::lgamma(n + 1.0)) /
                               (1.0 + alpha + n);
      r.reference_closed = 2.0 * (1.0 + alpha) / kPi * hypergeometric_half_at_one_closed(alpha) * real_norm;
    }
  }
  const double target = r.reference;
  const double scale = n == m ? std::abs(target) : 1.0;

  for (double b : bs) {
    const EllipseParams p = make_params(a, b);
    const QuadratureRule rule = build_rule(Measure::area_alpha(p, alpha), kLimitRadial, kLimitAngular);
    const complex value = gram_entry(rule, n, m, [&](complex z) {
      return eval_gegenbauer_all(alpha, top, z / p.c);
    });
    r.steps.push_back({b, value, target, std::abs(value - target) / scale});
  }
  finish(r);
  return r;
}

}  // namespace planarop
