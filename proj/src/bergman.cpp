#include "planarop/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "planarop/ortho.hpp"
#include "planarop/polyfns.hpp"

namespace planarop {

namespace {

constexpr double kNearDiagonal = 1e-8;

std::vector<double> sqrt_norms(double alpha, const EllipseParams& p, int nmax) {
  const auto cx = eval_gegenbauer_all(alpha, nmax, p.x_star);
  std::vector<double> out(nmax + 1);
  for (int n = 0; n <= nmax; ++n) out[n] = std::sqrt((1.0 + alpha) / (1.0 + alpha + n) * cx[n].real());
  return out;
}

}  // namespace

GegenbauerBasis::GegenbauerBasis(double alpha_, const EllipseParams& p) : alpha(alpha_), params(p) {
  if (!(alpha > -1.0)) throw std::invalid_argument("Gegenbauer basis requires alpha > -1");
}

std::vector<complex> GegenbauerBasis::values(int nmax, complex z) const {
  auto out = eval_gegenbauer_all(alpha, nmax, z / params.c);
  const auto s = sqrt_norms(alpha, params, nmax);
  for (int n = 0; n <= nmax; ++n) out[n] /= s[n];
  return out;
}

std::vector<complex> GegenbauerBasis::derivatives(int nmax, complex z) const {
  std::vector<complex> out(nmax + 1, 0.0);
  if (nmax == 0) return out;
  const auto inner = eval_gegenbauer_all(alpha + 1.0, nmax - 1, z / params.c);
  const auto s = sqrt_norms(alpha, params, nmax);
  for (int n = 1; n <= nmax; ++n) out[n] = 2.0 * (1.0 + alpha) * inner[n - 1] / (params.c * s[n]);
  return out;
}

double GegenbauerBasis::leading(int n) const {
  // C_n^{(l)} has leading coefficient 2^n (l)_n / n!
  double lead = 1.0;
  for (int k = 0; k < n; ++k) lead *= 2.0 * (1.0 + alpha + k) / ((k + 1.0) * params.c);
  return lead / sqrt_norms(alpha, params, n)[n];
}

complex bergman_kernel(double alpha, const EllipseParams& p, int N, complex z, complex w) {
  if (N < 1) throw std::invalid_argument("bergman_kernel requires N >= 1");
  const GegenbauerBasis basis(alpha, p);
  const auto pz = basis.values(N - 1, z);
  const auto pw = basis.values(N - 1, w);
  complex acc = 0.0;
  for (int i = 0; i < N; ++i) acc += pz[i] * std::conj(pw[i]);
  return acc;
}

ChristoffelBasis::ChristoffelBasis(double alpha, const EllipseParams& p, complex v_, int max_degree_)
    : base(alpha, p), v(v_), max_degree(max_degree_) {
  if (max_degree < 0) throw std::invalid_argument("Christoffel basis requires max_degree >= 0");
  const int top = max_degree + 3;
  pv = base.values(top, v);
  kappa.assign(top + 2, 0.0);
  for (int j = 1; j <= top + 1; ++j) kappa[j] = kappa[j - 1] + std::norm(pv[j - 1]);
  a_next.assign(top + 2, 0.0);
  b.assign(top + 2, 0.0);
  for (int n = 0; n <= top; ++n) {
    const RecurrenceCoeffs rc = recurrence_coeffs(alpha, p, n);
    a_next[n + 1] = rc.a_next;
    b[n] = rc.b;
  }
}

complex ChristoffelBasis::value(int N, complex z) const {
  if (N < 0 || N > max_degree + 1) throw std::out_of_range("Christoffel degree out of range");
  const auto pz = base.values(N + 1, z);
  const double denom = std::sqrt(kappa[N + 1] * kappa[N + 2]);
  if (std::abs(z - v) < kNearDiagonal) {
    const auto dz = base.derivatives(N + 1, z);
    complex dk = 0.0;
    for (int i = 0; i <= N; ++i) dk += dz[i] * std::conj(pv[i]);
    return -(dk * pv[N + 1] - kappa[N + 1] * dz[N + 1]) / denom;
  }
  complex k = 0.0;
  for (int i = 0; i <= N; ++i) k += pz[i] * std::conj(pv[i]);
  return (k * pv[N + 1] - kappa[N + 1] * pz[N + 1]) / ((v - z) * denom);
}

std::vector<complex> ChristoffelBasis::values(int nmax, complex z) const {
  if (nmax < 0 || nmax > max_degree + 1) throw std::out_of_range("Christoffel degree out of range");
  const auto pz = base.values(nmax + 1, z);
  const bool near = std::abs(z - v) < kNearDiagonal;
  const auto dz = near ? base.derivatives(nmax + 1, z) : std::vector<complex>{};
  std::vector<complex> out(nmax + 1);
  complex k = 0.0;
  for (int N = 0; N <= nmax; ++N) {
    const double denom = std::sqrt(kappa[N + 1] * kappa[N + 2]);
    if (near) {
      k += dz[N] * std::conj(pv[N]);
      out[N] = -(k * pv[N + 1] - kappa[N + 1] * dz[N + 1]) / denom;
    } else {
      k += pz[N] * std::conj(pv[N]);
      out[N] = (k * pv[N + 1] - kappa[N + 1] * pz[N + 1]) / ((v - z) * denom);
    }
  }
  return out;
}

double ChristoffelBasis::leading(int N) const {
  return base.leading(N + 1) * std::sqrt(kappa[N + 1] / kappa[N + 2]);
}

complex ChristoffelBasis::monic(int N, complex z) const { return value(N, z) / leading(N); }

double ChristoffelBasis::monic_norm(int N) const {
  const double g = base.leading(N + 1);
  return kappa[N + 2] / (kappa[N + 1] * g * g);
}

complex christoffel_poly(const ChristoffelBasis& basis, int N, complex z) { return basis.value(N, z); }

std::string to_string(BasisKind kind) {
  return kind == BasisKind::Gegenbauer ? "gegenbauer" : "christoffel";
}

std::string to_string(HessenbergStrategy strategy) {
  return strategy == HessenbergStrategy::Closed ? "closed" : "quadrature";
}

double HessenbergMatrix::column_norm(int n) const {
  double s = 0.0;
  for (int l = 0; l <= n + 1; ++l) s += std::norm(entries(l, n));
  return std::sqrt(s);
}

namespace {

// c_{l,n} = sum_k w_k z_k P_n(z_k) conj(P_l(z_k)) for a values table.
void fill_by_quadrature(HessenbergMatrix& h, const std::vector<std::vector<complex>>& vals,
                        const std::vector<double>& weights, const std::vector<complex>& nodes) {
  std::vector<complex> terms(nodes.size());
  for (int n = 0; n <= h.nmax; ++n)
    for (int l = 0; l <= n + 1; ++l) {
      for (std::size_t k = 0; k < nodes.size(); ++k)
        terms[k] = weights[k] * nodes[k] * vals[k][n] * std::conj(vals[k][l]);
      h.entries(l, n) = pairwise_sum(terms);
    }
}

}  // namespace

HessenbergMatrix hessenberg(double alpha, const EllipseParams& p, int nmax,
                            HessenbergStrategy strategy, const QuadratureRule* rule) {
  if (nmax < 0) throw std::invalid_argument("hessenberg requires nmax >= 0");
  HessenbergMatrix h;
  h.basis = BasisKind::Gegenbauer;
  h.strategy = strategy;
  h.alpha = alpha;
  h.params = p;
  h.nmax = nmax;
  h.entries = Eigen::MatrixXcd::Zero(nmax + 2, nmax + 1);
  if (strategy == HessenbergStrategy::Closed) {
    for (int n = 0; n <= nmax; ++n) {
      const RecurrenceCoeffs rc = recurrence_coeffs(alpha, p, n);
      h.entries(n + 1, n) = rc.a_next;
      if (n > 0) h.entries(n - 1, n) = rc.b;
    }
    return h;
  }
  if (rule == nullptr) throw std::invalid_argument("quadrature strategy needs a rule");
  if (rule->measure.kind != MeasureKind::AreaAlpha || !rule->measure.normalized ||
      std::abs(rule->measure.alpha - alpha) > 1e-14)
    throw std::invalid_argument("rule does not realize the normalized dA_alpha");
  const GegenbauerBasis basis(alpha, p);
  std::vector<std::vector<complex>> vals(rule->size());
  for (std::size_t k = 0; k < rule->size(); ++k) vals[k] = basis.values(nmax + 1, rule->nodes[k]);
  fill_by_quadrature(h, vals, rule->weights, rule->nodes);
  return h;
}

HessenbergMatrix hessenberg(const ChristoffelBasis& basis, int nmax, const QuadratureRule& rule) {
  if (nmax < 0 || nmax + 1 > basis.max_degree + 1)
    throw std::invalid_argument("hessenberg nmax exceeds the Christoffel basis degree");
  if (rule.measure.kind != MeasureKind::AreaAlpha || !rule.measure.normalized ||
      std::abs(rule.measure.alpha - basis.base.alpha) > 1e-14)
    throw std::invalid_argument("rule does not realize the normalized dA_alpha");
  HessenbergMatrix h;
  h.basis = BasisKind::Christoffel;
  h.strategy = HessenbergStrategy::Quadrature;
  h.alpha = basis.base.alpha;
  h.params = basis.base.params;
  h.v = basis.v;
  h.nmax = nmax;
  h.entries = Eigen::MatrixXcd::Zero(nmax + 2, nmax + 1);
  std::vector<std::vector<complex>> vals(rule.size());
  std::vector<double> weights(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    vals[k] = basis.values(nmax + 1, rule.nodes[k]);
    weights[k] = rule.weights[k] * std::norm(basis.v - rule.nodes[k]);
  }
  fill_by_quadrature(h, vals, weights, rule.nodes);
  return h;
}

complex christoffel_entry_closed(const ChristoffelBasis& basis, int l, int n) {
  if (l < 0 || l > n - 2) throw std::invalid_argument("closed Christoffel entry needs 0 <= l <= n-2");
  if (n > basis.max_degree) throw std::out_of_range("Christoffel degree out of range");
  const auto& pv = basis.pv;
  const auto& k = basis.kappa;
  const auto& a = basis.a_next;
  const auto& b = basis.b;
  const complex v = basis.v;
  auto conj_p = [&](int i) { return i < 0 ? complex(0.0) : std::conj(pv[i]); };
  auto p_at = [&](int i) { return i < 0 ? complex(0.0) : pv[i]; };

  const complex kernel_part = v * k[l] + b[l] * p_at(l - 1) * conj_p(l) + b[l + 1] * p_at(l) * conj_p(l + 1);
  const complex bracket = kernel_part * conj_p(l + 1) - (a[l + 1] * conj_p(l) + b[l + 2] * conj_p(l + 2)) * k[l + 1];
  return pv[n + 1] * bracket / std::sqrt(k[n + 1] * k[n + 2] * k[l + 1] * k[l + 2]);
}

int bandwidth(const HessenbergMatrix& h, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bandwidth requires tol > 0");
  for (int d = 0; d <= h.nmax; ++d) {
    bool banded = true;
    for (int n = 0; n <= h.nmax && banded; ++n) {
      const double cap = tol * h.column_norm(n);
      for (int l = 0; l < n + 1 - d; ++l)
        if (std::abs(h.entries(l, n)) > cap) {
          banded = false;
          break;
        }
    }
    if (banded) return d;
  }
  return h.nmax + 1;
}

double turan_determinant(double alpha, int l, double x) {
  if (!(alpha > -1.0)) throw std::invalid_argument("turan_determinant requires alpha > -1");
  if (l < 0) throw std::invalid_argument("turan_determinant requires l >= 0");
  const auto cx = eval_gegenbauer_all(alpha, l + 2, x);
  const double c0 = gegenbauer_at_one(alpha, l);
  const double c1 = gegenbauer_at_one(alpha, l + 1);
  const double c2 = gegenbauer_at_one(alpha, l + 2);
  const double r1 = cx[l + 1].real() / c1;
  return r1 * r1 - cx[l].real() * cx[l + 2].real() / (c0 * c2);
}

complex monic_gegenbauer(double alpha, const EllipseParams& p, int n, complex z) {
  double scale = 1.0;
  for (int k = 0; k < n; ++k) scale *= (k + 1.0) * p.c / (2.0 * (1.0 + alpha + k));
  return scale * eval_gegenbauer(alpha, n, z / p.c);
}

HeineResult heine_check(double alpha, const EllipseParams& p, int N, int n_r, int n_theta) {
  if (N < 1 || N > 2) throw std::invalid_argument("heine_check supports N in {1, 2}");
  const QuadratureRule rule = build_rule(Measure::area_alpha(p, alpha), n_r, n_theta);
  const std::size_t count = rule.size();

  // E[prod (z - z_i)] = z^N - e1 z^{N-1} + e2 with elementary symmetric means
  complex e1 = 0.0, e2 = 0.0;
  if (N == 1) {
    std::vector<double> mass(rule.weights);
    std::vector<complex> first(count);
    for (std::size_t k = 0; k < count; ++k) first[k] = rule.weights[k] * rule.nodes[k];
    e1 = pairwise_sum(first) / pairwise_sum(mass);
  } else {
    std::vector<double> z0(count);
    std::vector<complex> z1(count), z2(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<double> t0(count);
      std::vector<complex> t1(count), t2(count);
      for (std::size_t j = 0; j < count; ++j) {
        const complex zi = rule.nodes[i], zj = rule.nodes[j];
        const double w = rule.weights[j] * std::norm(zi - zj);
        t0[j] = w;
        t1[j] = w * (zi + zj);
        t2[j] = w * zi * zj;
      }
      z0[i] = rule.weights[i] * pairwise_sum(t0);
      z1[i] = rule.weights[i] * pairwise_sum(t1);
      z2[i] = rule.weights[i] * pairwise_sum(t2);
    }
    const double zn = pairwise_sum(z0);
    e1 = pairwise_sum(z1) / zn;
    e2 = pairwise_sum(z2) / zn;
  }

  HeineResult out;
  out.N = N;
  const double fr[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (double fx : fr)
    for (double fy : fr) {
      const complex z(0.6 * p.a * fx, 0.6 * p.b * fy);
      const complex e = N == 1 ? z - e1 : z * z - e1 * z + e2;
      const complex m = monic_gegenbauer(alpha, p, N, z);
      out.grid.push_back(z);
      out.expectation.push_back(e);
      out.monic.push_back(m);
      out.residual = std::max(out.residual, std::abs(e - m));
    }
  return out;
}

}  // namespace planarop
