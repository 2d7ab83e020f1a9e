#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "planarop/bergman.hpp"
#include "planarop/ortho.hpp"

using namespace planarop;
using std::numbers::pi;

namespace {

const EllipseParams kP = make_params(2.0, 1.0);

double max_offband(const HessenbergMatrix& h) {
  double worst = 0.0;
  for (int n = 0; n <= h.nmax; ++n)
    for (int l = 0; l + 2 <= n; ++l) worst = std::max(worst, std::abs(h.at(l, n)));
  return worst;
}

// Largest closed-form entry strictly above the second diagonal, n in 4..8.
double max_closed_offband(double b) {
  const ChristoffelBasis basis(0.0, make_params(2.0, b), 1.5, 9);
  double worst = 0.0;
  for (int n = 4; n <= 8; ++n)
    for (int l = 0; l <= n - 2; ++l) worst = std::max(worst, std::abs(christoffel_entry_closed(basis, l, n)));
  return worst;
}

}  // namespace

TEST_SUITE("bergman") {

TEST_CASE("kernel basics") {
  CHECK(std::abs(bergman_kernel(0.7, kP, 1, complex(0.3, 0.2), complex(-1.0, 0.4)) - 1.0) < 1e-15);
  CHECK_THROWS_AS(bergman_kernel(0.0, kP, 0, 0.0, 0.0), std::invalid_argument);
  oracle::Rng g(17);
  for (int i = 0; i < 200; ++i) {
    const complex z = oracle::inside_point(g, 2.0, 1.0), w = oracle::inside_point(g, 2.0, 1.0);
    const int N = 1 + static_cast<int>(oracle::uniform(g, 0, 12));
    const double alpha = oracle::uniform(g, -0.9, 3.0);
    const complex kzw = bergman_kernel(alpha, kP, N, z, w), kwz = bergman_kernel(alpha, kP, N, w, z);
    CHECK(std::abs(kzw - std::conj(kwz)) <= 1e-13 * std::max(1.0, std::abs(kzw)));
    CHECK(std::abs(bergman_kernel(alpha, kP, N, z, z).imag()) <= 1e-13 * std::abs(kzw) + 1e-13);
  }
}

TEST_CASE("kernel reproduces the basis") {
  const GegenbauerBasis basis(0.0, kP);
  const QuadratureRule rule = build_rule(Measure::area_alpha(kP, 0.0), 32, 64);
  const complex w(0.3, 0.1);
  const auto pw = basis.values(4, w);
  for (int j = 0; j < 5; ++j) {
    const ComplexFn k = [&](complex z) { return bergman_kernel(0.0, kP, 5, z, w); };
    const ComplexFn pj = [&](complex z) { return basis.values(j, z)[j]; };
    CHECK(std::abs(inner_product(k, pj, rule) - std::conj(pw[j])) < 1e-12);
  }
}

TEST_CASE("diagonal kernel grows with N") {
  const complex v(1.2, 0.0);
  double previous = 0.0;
  for (int N = 1; N <= 15; ++N) {
    const double k = bergman_kernel(0.0, kP, N, v, v).real();
    CHECK(k > previous);
    previous = k;
  }
}

TEST_CASE("orthonormal recurrence holds pointwise") {
  oracle::Rng g(19);
  for (double alpha : {-0.5, 0.0, 1.5}) {
    const GegenbauerBasis basis(alpha, kP);
    for (int i = 0; i < 30; ++i) {
      const complex z = oracle::inside_point(g, 2.0, 1.0, 1.0);
      const auto p = basis.values(15, z);
      for (int n = 0; n <= 14; ++n) {
        const RecurrenceCoeffs rc = recurrence_coeffs(alpha, kP, n);
        const complex lhs = z * p[n];
        const complex rhs = rc.a_next * p[n + 1] + (n > 0 ? rc.b * p[n - 1] : 0.0);
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(std::abs(lhs), 1e-3));
      }
    }
  }
}

TEST_CASE("christoffel polynomials are orthonormal under the modified weight") {
  for (complex v : {complex(1.5, 0.0), complex(0.4, 0.7), complex(2.5, -1.0)}) {
    const ChristoffelBasis basis(0.0, kP, v, 8);
    const QuadratureRule rule = build_rule(Measure::area_alpha(kP, 0.0), 48, 96);
    double worst = 0.0;
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) {
        const ComplexFn fi = [&](complex z) { return (z - v) * basis.value(i, z); };
        const ComplexFn fj = [&](complex z) { return (z - v) * basis.value(j, z); };
        worst = std::max(worst, std::abs(inner_product(fi, fj, rule) - (i == j ? 1.0 : 0.0)));
      }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("christoffel polynomials near the charge") {
  const complex v(1.5, 0.0);
  const ChristoffelBasis basis(0.0, kP, v, 8);
  CHECK(std::abs(basis.monic(0, complex(0.3, -0.2)) - 1.0) < 1e-14);
  CHECK(std::abs(basis.monic(0, v) - 1.0) < 1e-14);
  for (int N = 0; N <= 8; ++N) {
    const complex at = basis.value(N, v);
    const complex near = basis.value(N, v + complex(1e-6, 0.0));
    CHECK(std::abs(at - near) <= 1e-4 * std::max(1.0, std::abs(at)));
    // within the switch radius the limit value is used; P changes by about P' * 1e-9
    CHECK(std::abs(christoffel_poly(basis, N, v + 1e-9) - at) <= 1e-7 * std::max(1.0, std::abs(at)));
    CHECK(std::abs(basis.values(8, v)[N] - at) <= 1e-13 * std::max(1.0, std::abs(at)));
  }
  CHECK_THROWS_AS(basis.value(10, 0.0), std::out_of_range);
  CHECK_THROWS_AS(basis.value(-1, 0.0), std::out_of_range);
}

TEST_CASE("christoffel polynomials have exact degree") {
  const ChristoffelBasis basis(0.0, kP, 1.5, 8);
  const int M = 32;
  const double rho = 1.0;
  for (int N = 0; N <= 8; ++N) {
    // coefficients from a discrete Fourier transform on |z| = rho
    std::vector<complex> coef(M, 0.0);
    for (int k = 0; k < M; ++k) {
      const complex z = std::polar(rho, 2 * pi * k / M);
      const complex val = basis.value(N, z);
      for (int j = 0; j < M; ++j) coef[j] += val * std::polar(1.0, -2 * pi * j * k / M) / double(M);
    }
    for (int j = 0; j < M; ++j) coef[j] /= std::pow(rho, j);
    CHECK(std::abs(coef[N] - basis.leading(N)) <= 1e-10 * basis.leading(N));
    CHECK(std::abs(coef[N]) > 1e-6);
    for (int j = N + 1; j < M; ++j) CHECK(std::abs(coef[j]) < 1e-10);
  }
}

TEST_CASE("christoffel monic norm identity") {
  const complex v(1.5, 0.0);
  const ChristoffelBasis basis(0.0, kP, v, 8);
  const QuadratureRule rule = build_rule(Measure::area_alpha(kP, 0.0), 48, 96);
  for (int N = 0; N <= 8; ++N) {
    const ComplexFn f = [&](complex z) { return (z - v) * basis.monic(N, z); };
    const double q = inner_product(f, f, rule).real();
    CHECK(basis.monic_norm(N) == doctest::Approx(q).epsilon(1e-8));
  }
  for (int j = 1; j < 10; ++j) CHECK(basis.kappa[j] > 0.0);
}

TEST_CASE("gegenbauer hessenberg matrix is tridiagonal") {
  const HessenbergMatrix h = hessenberg(0.0, kP, 12, HessenbergStrategy::Closed);
  CHECK(h.entries.rows() == 14);
  CHECK(h.entries.cols() == 13);
  CHECK(max_offband(h) <= 1e-12);
  CHECK(std::abs(h.at(0, 1) - 3.0 / (2.0 * std::sqrt(5.0))) < 1e-14);
  CHECK(std::abs(h.at(2, 1) - recurrence_coeffs(0.0, kP, 1).a_next) < 1e-14);
  CHECK(bandwidth(h, 1e-10) == 2);
  const QuadratureRule rule = build_rule(Measure::area_alpha(kP, 0.0));
  const HessenbergMatrix hq = hessenberg(0.0, kP, 12, HessenbergStrategy::Quadrature, &rule);
  CHECK((hq.entries - h.entries).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(bandwidth(hq, 1e-10) == 2);
  CHECK_THROWS_AS(hessenberg(0.0, kP, 4, HessenbergStrategy::Quadrature), std::invalid_argument);
  const QuadratureRule wrong = build_rule(Measure::area_alpha(kP, 1.0), 16, 32);
  CHECK_THROWS_AS(hessenberg(0.0, kP, 4, HessenbergStrategy::Quadrature, &wrong), std::invalid_argument);
}

TEST_CASE("christoffel hessenberg matrix has no band") {
  const ChristoffelBasis basis(0.0, kP, 1.5, 11);
  const QuadratureRule rule = build_rule(Measure::area_alpha(kP, 0.0), 48, 96);
  const HessenbergMatrix h = hessenberg(basis, 10, rule);
  for (int n = 4; n <= 8; ++n) {
    double worst = 0.0;
    for (int l = 0; l <= n - 2; ++l) worst = std::max(worst, std::abs(h.at(l, n)));
    // v/c = cos(pi/6) is a zero of U_5, so P_4 is p_5/(z - v) up to a constant
    if (n == 4) CHECK(worst < 1e-14);
    else CHECK(worst > 1e-6);
  }
  CHECK(std::abs(basis.pv[5]) < 1e-14);
  // the same happens for every p_{6k-1}; column 10 then has no entry above the band
  CHECK(std::abs(basis.pv[11]) < 1e-13);
  CHECK(bandwidth(h, 1e-8) == 10);
  const HessenbergMatrix h9 = hessenberg(basis, 9, rule);
  CHECK(bandwidth(h9, 1e-8) == 10);
  for (int n = 2; n <= 10; ++n)
    for (int l = 0; l <= n - 2; ++l) {
      const complex closed = christoffel_entry_closed(basis, l, n);
      CHECK(std::abs(closed - h.at(l, n)) <= 1e-8);
      CHECK(closed.imag() == 0.0);
    }
  CHECK_THROWS_AS(christoffel_entry_closed(basis, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(hessenberg(basis, 12, rule), std::invalid_argument);
}

TEST_CASE("christoffel off-band entries away from zeros of the basis") {
  for (complex v : {complex(1.2, 0.0), complex(1.5, 0.3)}) {
    const ChristoffelBasis basis(0.0, kP, v, 9);
    const HessenbergMatrix h = hessenberg(basis, 8, build_rule(Measure::area_alpha(kP, 0.0), 48, 96));
    for (int n = 4; n <= 8; ++n) {
      double worst = 0.0;
      for (int l = 0; l <= n - 2; ++l) {
        worst = std::max(worst, std::abs(h.at(l, n)));
        CHECK(std::abs(christoffel_entry_closed(basis, l, n) - h.at(l, n)) <= 1e-8);
      }
      CHECK(worst > 1e-6);
    }
    CHECK(bandwidth(h, 1e-8) == 9);
    const ChristoffelBasis wide(0.0, kP, v, 11);
    CHECK(bandwidth(hessenberg(wide, 10, build_rule(Measure::area_alpha(kP, 0.0), 48, 96)), 1e-8) == 11);
  }
}

TEST_CASE("christoffel entries vanish as the ellipse flattens") {
  double previous = 1e300;
  for (double b : {0.5, 0.1, 0.02}) {
    const double e = max_closed_offband(b);
    CHECK(e < previous);
    previous = e;
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("bandwidth conventions") {
  HessenbergMatrix diag;
  diag.nmax = 4;
  diag.entries = Eigen::MatrixXcd::Zero(6, 5);
  for (int n = 0; n <= 4; ++n) diag.entries(n, n) = 1.0 + n;
  CHECK(bandwidth(diag, 1e-10) == 1);
  HessenbergMatrix dense = diag;
  dense.entries.setOnes();
  CHECK(bandwidth(dense, 1e-10) == 5);
  CHECK_THROWS_AS(bandwidth(diag, 0.0), std::invalid_argument);
}

TEST_CASE("turan determinant") {
  CHECK(std::abs(turan_determinant(0.7, 3, 1.0)) <= 1e-14);
  CHECK(std::abs(turan_determinant(0.0, 2, 5.0 / 3.0)) > 1e-6);
  for (double alpha : {-0.5, 0.0, 1.3})
    for (int l = 0; l <= 8; ++l) {
      CHECK(std::abs(turan_determinant(alpha, l, -1.0)) <= 1e-12);
      CHECK(std::abs(turan_determinant(alpha, l, 1.0)) <= 1e-12);
      for (double x : {1.1, 5.0 / 3.0, 3.0}) CHECK(std::abs(turan_determinant(alpha, l, x)) > 1e-6);
    }
  CHECK_THROWS_AS(turan_determinant(-1.0, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(turan_determinant(0.0, -1, 0.5), std::invalid_argument);
}

TEST_CASE("characteristic polynomial expectation") {
  CHECK(heine_check(0.0, kP, 1).residual <= 1e-12);
  CHECK(heine_check(0.0, kP, 2).residual <= 1e-8);
  CHECK(heine_check(1.0, kP, 2).residual <= 1e-8);
  const HeineResult r = heine_check(0.0, kP, 2);
  CHECK(r.grid.size() == 25);
  for (const complex& z : r.grid) CHECK(inside(kP, z));
  // p~_2 = z^2 - <z^2, 1>/<1, 1> with the moment oracle
  CHECK(std::abs(monic_gegenbauer(0.0, kP, 2, 0.0) + oracle::area_moment(2, 0, 2.0, 1.0, 0.0)) < 1e-14);
  CHECK_THROWS_AS(heine_check(0.0, kP, 3), std::invalid_argument);
}

}
