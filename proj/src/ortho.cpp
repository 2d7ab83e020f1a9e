#include "planarop/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace planarop {

namespace {

constexpr double kPi = std::numbers::pi;

bool same_alpha(double x, double y) { return std::abs(x - y) <= 1e-14 * (1.0 + std::abs(x)); }

double normalized_prefactor(const Measure& m) {
  Measure copy = m;
  copy.normalized = true;
  return copy.prefactor();
}

// Norm in the normalized convention of m.
double normalized_norm(const PolynomialFamily& f, const Measure& m, int n) {
  const EllipseParams& p = m.params;
  const double q = p.r / p.c;
  switch (f.kind) {
    case FamilyKind::Gegenbauer:
    case FamilyKind::Legendre:
    case FamilyKind::ChebyshevU: return gegenbauer_norm(f.gegenbauer_alpha(), p, n);
    case FamilyKind::JacobiMinus: {
      const double a = f.alpha;
      const double ratio = pochhammer(0.5, n) / pochhammer(1.0 + a, n);
      return ratio * ratio * (1.0 + a) / (1.0 + a + 2.0 * n) *
             eval_gegenbauer(a, 2 * n, p.a / p.c).real();
    }
    case FamilyKind::JacobiPlus: {
      const double a = f.alpha;
      const double ratio = pochhammer(0.5, n + 1) / pochhammer(1.0 + a, n + 1);
      return 2.0 * p.c * (1.0 + a) * (2.0 + a) * ratio * ratio / (p.a * (2.0 + a + 2.0 * n)) *
             eval_gegenbauer(a, 2 * n + 1, p.a / p.c).real();
    }
    case FamilyKind::ChebyshevT: {
      const double flat = n == 0 ? 2.0 * kPi * std::log(q)
                                 : kPi / (4.0 * n) * (std::pow(q, 2 * n) - std::pow(q, -2 * n));
      return flat / p.area();
    }
    case FamilyKind::ChebyshevV:
    case FamilyKind::ChebyshevW: {
      const double flat =
          kPi * p.c / (1.0 + 2.0 * n) * (std::pow(q, 2 * n + 1) - std::pow(q, -(2 * n + 1)));
      return flat / p.area();
    }
    case FamilyKind::Hermite: break;
  }
  throw std::invalid_argument("family has no planar orthogonality measure");
}

}  // namespace

double gegenbauer_norm(double alpha, const EllipseParams& p, int n) {
  if (!(alpha > -1.0)) throw std::invalid_argument("gegenbauer_norm requires alpha > -1");
  if (n < 0) throw std::invalid_argument("gegenbauer_norm requires n >= 0");
  return (1.0 + alpha) / (1.0 + alpha + n) * eval_gegenbauer(alpha, n, p.x_star).real();
}

Measure paired_measure(const PolynomialFamily& f, const EllipseParams& p) {
  switch (f.kind) {
    case FamilyKind::Gegenbauer: return Measure::area_alpha(p, f.alpha);
    case FamilyKind::Legendre: return Measure::area_alpha(p, -0.5);
    case FamilyKind::ChebyshevU: return Measure::flat(p);
    case FamilyKind::JacobiMinus: return Measure::b_minus(p, f.alpha);
    case FamilyKind::JacobiPlus: return Measure::b_plus(p, f.alpha);
    case FamilyKind::ChebyshevT: return Measure::chebyshev_t(p);
    case FamilyKind::ChebyshevV: return Measure::chebyshev_v(p);
    case FamilyKind::ChebyshevW: return Measure::chebyshev_w(p);
    case FamilyKind::Hermite: break;
  }
  throw std::invalid_argument("hermite polynomials have no planar measure on a bounded ellipse");
}

void check_pairing(const PolynomialFamily& f, const Measure& m) {
  bool ok = false;
  switch (f.kind) {
    case FamilyKind::Gegenbauer:
    case FamilyKind::Legendre:
      ok = m.kind == MeasureKind::AreaAlpha && same_alpha(m.alpha, f.gegenbauer_alpha());
      break;
    case FamilyKind::ChebyshevU:
      ok = m.kind == MeasureKind::Flat ||
           (m.kind == MeasureKind::AreaAlpha && same_alpha(m.alpha, 0.0));
      break;
    case FamilyKind::JacobiMinus:
      ok = m.kind == MeasureKind::BMinus && same_alpha(m.alpha, f.alpha);
      break;
    case FamilyKind::JacobiPlus:
      ok = m.kind == MeasureKind::BPlus && same_alpha(m.alpha, f.alpha);
      break;
    case FamilyKind::ChebyshevT: ok = m.kind == MeasureKind::ChebyshevT; break;
    case FamilyKind::ChebyshevV: ok = m.kind == MeasureKind::ChebyshevV; break;
    case FamilyKind::ChebyshevW: ok = m.kind == MeasureKind::ChebyshevW; break;
    case FamilyKind::Hermite: ok = false; break;
  }
  if (!ok)
    throw std::invalid_argument("family " + to_string(f) + " is not orthogonal under measure " +
                                to_string(m.kind));
}

double closed_norm(const PolynomialFamily& f, const Measure& m, int n) {
  if (n < 0) throw std::invalid_argument("closed_norm requires n >= 0");
  check_pairing(f, m);
  return normalized_norm(f, m, n) * m.prefactor() / normalized_prefactor(m);
}

double GramResult::max_diag_error() const {
  double worst = 0.0;
  for (double e : diag_relative_errors) worst = std::max(worst, e);
  return worst;
}

GramResult gram_matrix(const PolynomialFamily& f, const Measure& m, int nmax,
                       const QuadratureRule& rule) {
  if (nmax < 0) throw std::invalid_argument("gram_matrix requires nmax >= 0");
  check_pairing(f, m);
  const int dim = nmax + 1;
  const std::size_t count = rule.size();
  const double c = m.params.c;

  // values(n, k) = f_n(z_k / c)
  Eigen::MatrixXcd values(dim, static_cast<Eigen::Index>(count));
  for (std::size_t k = 0; k < count; ++k) {
    const auto v = eval_family_all(f, nmax, rule.nodes[k] / c);
    for (int n = 0; n < dim; ++n) values(n, static_cast<Eigen::Index>(k)) = v[n];
  }

  GramResult out;
  out.family = f;
  out.measure = m;
  out.nmax = nmax;
  out.n_r = rule.n_r;
  out.n_theta = rule.n_theta;
  out.matrix.resize(dim, dim);
  std::vector<complex> terms(count);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      for (std::size_t k = 0; k < count; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        terms[k] = rule.weights[k] * values(i, kk) * std::conj(values(j, kk));
      }
      const complex g = pairwise_sum(terms);
      out.matrix(i, j) = g;
      out.matrix(j, i) = std::conj(g);
    }
    out.matrix(i, i) = out.matrix(i, i).real();
  }

  for (int i = 0; i < dim; ++i) {
    const double d = out.matrix(i, i).real();
    out.max_diag = std::max(out.max_diag, std::abs(d));
    const double h = closed_norm(f, m, i);
    out.closed_norms.push_back(h);
    out.diag_relative_errors.push_back(std::abs(d - h) / std::abs(h));
    for (int j = 0; j < dim; ++j)
      if (j != i) out.max_offdiag = std::max(out.max_offdiag, std::abs(out.matrix(i, j)));
  }
  return out;
}

complex eval_coefficients(const std::vector<complex>& coeffs, complex z) {
  complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<std::vector<complex>> gram_schmidt(const Measure& m, int nmax,
                                               const QuadratureRule& rule) {
  (void)m;
  if (nmax < 0) throw std::invalid_argument("gram_schmidt requires nmax >= 0");
  const int dim = nmax + 1;
  Eigen::MatrixXcd moments(dim, dim);  // moments(j, k) = <z^j, z^k>
  for (int j = 0; j < dim; ++j)
    for (int k = j; k < dim; ++k) {
      moments(j, k) = moment(j, k, rule);
      moments(k, j) = std::conj(moments(j, k));
    }

  auto inner = [&](const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) -> complex {
    return (v.adjoint() * moments.transpose() * u)(0, 0);
  };

  std::vector<Eigen::VectorXcd> basis;
  std::vector<std::vector<complex>> out;
  for (int n = 0; n < dim; ++n) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    const double scale = std::sqrt(moments(n, n).real());
    v(n) = 1.0 / scale;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= inner(v, q) * q;
    const double norm2 = inner(v, v).real();
    if (!(norm2 > 1e-13))
      throw std::domain_error("moment matrix is numerically rank deficient at degree " +
                              std::to_string(n));
    v /= std::sqrt(norm2);
    basis.push_back(v);
    out.emplace_back(v.data(), v.data() + n + 1);
  }
  return out;
}

}  // namespace planarop
