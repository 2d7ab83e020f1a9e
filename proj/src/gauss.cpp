#include "planarop/gauss.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace planarop {

GaussRule gauss_from_recurrence(const std::vector<double>& diag,
                                const std::vector<double>& offdiag2, double mu0) {
  const int n = static_cast<int>(diag.size());
  if (n < 1) throw std::invalid_argument("Gauss rule needs at least one node");
  Eigen::VectorXd d(n);
  Eigen::VectorXd e(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) d(k) = diag[k];
  for (int k = 1; k < n; ++k) e(k - 1) = std::sqrt(offdiag2[k]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Jacobi matrix eigensolver failed");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return solver.eigenvalues()(i) < solver.eigenvalues()(j); });

  // Eigenvector weights lose relative accuracy where they are tiny, so the
  // nodes get a Newton polish and the weights come from the Christoffel
  // function 1 / sum_k q_k(x)^2 of the orthonormal recurrence.
  auto orthonormal = [&](double x, double& sum_sq, double& pn, double& dpn) {
    double q_prev = 0.0, q = 1.0 / std::sqrt(mu0);
    double dq_prev = 0.0, dq = 0.0;
    sum_sq = 0.0;
    for (int k = 0; k < n; ++k) {
      sum_sq += q * q;
      const double bk = k > 0 ? std::sqrt(offdiag2[k]) : 0.0;
      const double bk1 = k + 1 < n ? std::sqrt(offdiag2[k + 1]) : 1.0;
      const double q_next = ((x - diag[k]) * q - bk * q_prev) / bk1;
      const double dq_next = (q + (x - diag[k]) * dq - bk * dq_prev) / bk1;
      q_prev = q;
      q = q_next;
      dq_prev = dq;
      dq = dq_next;
    }
    pn = q;
    dpn = dq;
  };

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double x = solver.eigenvalues()(order[k]);
    double sum_sq = 0.0, pn = 0.0, dpn = 0.0;
    for (int it = 0; it < 2; ++it) {
      orthonormal(x, sum_sq, pn, dpn);
      if (dpn != 0.0) x -= pn / dpn;
    }
    orthonormal(x, sum_sq, pn, dpn);
    rule.nodes[k] = x;
    rule.weights[k] = 1.0 / sum_sq;
  }
  // Near a singular endpoint the weights inherit the node's last-bit error
  // (relative 1e-13 at a = -0.9); restore the exact total mu0.
  long double total = 0.0L;
  for (double w : rule.weights) total += w;
  const double fix = static_cast<double>(static_cast<long double>(mu0) / total);
  for (double& w : rule.weights) w *= fix;
  return rule;
}

namespace {

void jacobi_recurrence(int n, double a, double b, std::vector<double>& diag,
                       std::vector<double>& off2) {
  diag.assign(n, 0.0);
  off2.assign(n, 0.0);
  const double ab = a + b;
  diag[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
  }
  if (n > 1) off2[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
  for (int k = 2; k < n; ++k) {
    const double s = 2.0 * k + ab;
    off2[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
  }
}

}  // namespace

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("Gauss-Jacobi rule needs n >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("Gauss-Jacobi requires a, b > -1");
  std::vector<double> diag, off2;
  jacobi_recurrence(n, a, b, diag, off2);
  const double ab = a + b;
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  return gauss_from_recurrence(diag, off2, mu0);
}

GaussRule gauss_jacobi_unit(int n, double a) {
  if (n < 1) throw std::invalid_argument("Gauss-Jacobi rule needs n >= 1");
  if (!(a > -1.0)) throw std::invalid_argument("Gauss-Jacobi requires a > -1");
  std::vector<double> diag, off2;
  jacobi_recurrence(n, a, 0.0, diag, off2);
  // t = (1 + x)/2
  for (double& d : diag) d = 0.5 * (1.0 + d);
  for (double& e : off2) e *= 0.25;
  return gauss_from_recurrence(diag, off2, 1.0 / (1.0 + a));
}

GaussRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

GaussRule gauss_laguerre(int n, double a) {
  if (n < 1) throw std::invalid_argument("Gauss-Laguerre rule needs n >= 1");
  if (!(a > -1.0)) throw std::invalid_argument("Gauss-Laguerre requires a > -1");
  std::vector<double> diag(n), off2(n, 0.0);
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + a + 1.0;
  for (int k = 1; k < n; ++k) off2[k] = k * (k + a);
  return gauss_from_recurrence(diag, off2, std::tgamma(a + 1.0));
}

}  // namespace planarop
