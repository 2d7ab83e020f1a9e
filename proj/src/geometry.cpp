#include "planarop/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace planarop {

EllipseParams make_params(double a, double b) {
  if (!(b > 0.0) || !(a > b) || !std::isfinite(a))
    throw std::invalid_argument("ellipse requires a > b > 0 (got a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
  EllipseParams p;
  p.a = a;
  p.b = b;
  // (a-b)(a+b) rather than a*a-b*b keeps c accurate when b is close to a
  p.c = std::sqrt((a - b) * (a + b));
  p.R = std::sqrt((a + b) / (a - b));
  p.r = a + b;
  p.x_star = (a * a + b * b) / ((a - b) * (a + b));
  return p;
}

EllipseParams EllipseParams::derived() const {
  return make_params((a * a + b * b) / c, 2.0 * a * b / c);
}

EllipseParams EllipseParams::preimage() const {
  // (a0 + b0)^2 = c (a + b), (a0 - b0)^2 = c (a - b)
  const double s = std::sqrt(c * (a + b));
  const double d = std::sqrt(c * (a - b));
  return make_params(0.5 * (s + d), 0.5 * (s - d));
}

double EllipseParams::area() const { return std::numbers::pi * a * b; }

double ellipse_level(const EllipseParams& p, complex z) {
  const double x = z.real() / p.a;
  const double y = z.imag() / p.b;
  return x * x + y * y;
}

bool inside(const EllipseParams& p, complex z) { return ellipse_level(p, z) < 1.0; }

complex elliptic_to_cartesian(const EllipseParams& p, double r, double theta) {
  if (!(r >= 0.0) || !(r < 1.0))
    throw std::domain_error("elliptic radius must lie in [0, 1)");
  return {p.a * r * std::cos(theta), p.b * r * std::sin(theta)};
}

complex joukowsky(const EllipseParams& p, complex w) {
  if (w == complex(0.0, 0.0)) throw std::domain_error("joukowsky map undefined at w = 0");
  return 0.5 * (w + p.c * p.c / w);
}

QuadraticMapResult quadratic_map(const EllipseParams& p, complex z) {
  const complex u = z / p.c;
  return {p.c * (2.0 * u * u - 1.0), p.derived()};
}

complex quadratic_map_inverse(const EllipseParams& p, complex w) {
  if (w.imag() == 0.0 && w.real() + p.c < 0.0)
    throw std::domain_error("point lies on the branch cut of the inverse quadratic map");
  return p.c * std::sqrt((w + p.c) / (2.0 * p.c));
}

double j_function(const EllipseParams& p, complex w) {
  const complex s = p.c + w;
  const double b2 = p.b * p.b;
  return (p.a / b2) * std::abs(s) - (p.c / b2) * s.real();
}

std::string to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::AreaAlpha: return "area-alpha";
    case MeasureKind::BMinus: return "b-minus";
    case MeasureKind::BPlus: return "b-plus";
    case MeasureKind::ChebyshevT: return "chebyshev-t";
    case MeasureKind::ChebyshevV: return "chebyshev-v";
    case MeasureKind::ChebyshevW: return "chebyshev-w";
    case MeasureKind::Flat: return "flat";
  }
  return "unknown";
}

std::string to_string(Convention convention) {
  return convention == Convention::Normalized ? "normalized" : "flat";
}

namespace {

Measure make_measure(MeasureKind kind, const EllipseParams& p, double alpha, bool normalized) {
  if (!(alpha > -1.0)) throw std::invalid_argument("measure requires alpha > -1");
  Measure m;
  m.kind = kind;
  m.alpha = alpha;
  m.params = p;
  m.normalized = normalized;
  return m;
}

}  // namespace

Measure Measure::area_alpha(const EllipseParams& p, double alpha, bool normalized) {
  return make_measure(MeasureKind::AreaAlpha, p, alpha, normalized);
}
Measure Measure::b_minus(const EllipseParams& p, double alpha, bool normalized) {
  return make_measure(MeasureKind::BMinus, p, alpha, normalized);
}
Measure Measure::b_plus(const EllipseParams& p, double alpha, bool normalized) {
  return make_measure(MeasureKind::BPlus, p, alpha, normalized);
}
Measure Measure::chebyshev_t(const EllipseParams& p, bool normalized) {
  return make_measure(MeasureKind::ChebyshevT, p, 0.0, normalized);
}
Measure Measure::chebyshev_v(const EllipseParams& p, bool normalized) {
  return make_measure(MeasureKind::ChebyshevV, p, 0.0, normalized);
}
Measure Measure::chebyshev_w(const EllipseParams& p, bool normalized) {
  return make_measure(MeasureKind::ChebyshevW, p, 0.0, normalized);
}
Measure Measure::flat(const EllipseParams& p, bool normalized) {
  return make_measure(MeasureKind::Flat, p, 0.0, normalized);
}

bool Measure::has_alpha() const {
  return kind == MeasureKind::AreaAlpha || kind == MeasureKind::BMinus ||
         kind == MeasureKind::BPlus;
}

double Measure::prefactor() const {
  if (!normalized) return params.area();
  switch (kind) {
    case MeasureKind::AreaAlpha: return 1.0 + alpha;
    case MeasureKind::BMinus: return 0.5 * (1.0 + alpha) * params.a;
    case MeasureKind::BPlus: return 0.5 * (1.0 + alpha) * (2.0 + alpha);
    default: return 1.0;
  }
}

double Measure::raw_weight(complex z) const {
  const double c = params.c;
  switch (kind) {
    case MeasureKind::AreaAlpha: return std::pow(1.0 - ellipse_level(params, z), alpha);
    case MeasureKind::BMinus:
      return std::pow(1.0 - j_function(params, z), alpha) / std::abs(c + z);
    case MeasureKind::BPlus: return std::pow(1.0 - j_function(params, z), alpha);
    case MeasureKind::ChebyshevT: return 1.0 / std::abs(z * z - c * c);
    case MeasureKind::ChebyshevV: return 1.0 / std::abs(c - z);
    case MeasureKind::ChebyshevW: return 1.0 / std::abs(c + z);
    case MeasureKind::Flat: return 1.0;
  }
  return 0.0;
}

double weight_density(const Measure& m, complex z) {
  if (!inside(m.params, z)) throw std::domain_error("point outside the open ellipse");
  const complex c(m.params.c, 0.0);
  const bool at_left = z == -c;
  const bool at_right = z == c;
  switch (m.kind) {
    case MeasureKind::ChebyshevT:
      if (at_left || at_right) throw std::domain_error("chebyshev-t weight is singular at the foci");
      break;
    case MeasureKind::ChebyshevV:
      if (at_right) throw std::domain_error("chebyshev-v weight is singular at z = c");
      break;
    case MeasureKind::ChebyshevW:
    case MeasureKind::BMinus:
      if (at_left) throw std::domain_error("weight is singular at z = -c");
      break;
    default: break;
  }
  return m.prefactor() * m.raw_weight(z);
}

}  // namespace planarop
