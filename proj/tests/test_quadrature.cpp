#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "planarop/gauss.hpp"
#include "planarop/quadrature.hpp"

using namespace planarop;
using std::numbers::pi;

namespace {

double rule_sum(const GaussRule& g, double (*f)(double)) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(g.nodes[i]);
  return s;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("one dimensional gauss rules") {
  const GaussRule leg = gauss_legendre(5);
  CHECK(rule_sum(leg, [](double x) { return std::pow(x, 8); }) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  const GaussRule lag = gauss_laguerre(10);
  CHECK(rule_sum(lag, [](double x) { return std::pow(x, 12); }) == doctest::Approx(479001600.0).epsilon(1e-12));
  for (auto [a, b] : {std::pair{-0.5, -0.5}, {1.5, 0.5}, {-0.9, 3.0}}) {
    const GaussRule j = gauss_jacobi(12, a, b);
    double mass = 0.0;
    for (double w : j.weights) mass += w;
    const double expect = std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) -
                                   std::lgamma(a + b + 2));
    CHECK(mass == doctest::Approx(expect).epsilon(1e-13));
    for (double x : j.nodes) CHECK((x > -1.0 && x < 1.0));
  }
  for (double a : {-0.9, 0.0, 40.0, 400.0}) {
    const GaussRule u = gauss_jacobi_unit(20, a);
    double mass = 0.0, first = 0.0;
    for (std::size_t i = 0; i < u.nodes.size(); ++i) {
      mass += u.weights[i];
      first += u.weights[i] * u.nodes[i];
    }
    CHECK(mass == doctest::Approx(1.0 / (1.0 + a)).epsilon(1e-13));
    CHECK(first == doctest::Approx(1.0 / ((1.0 + a) * (2.0 + a))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_jacobi(0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(4, -2.0), std::invalid_argument);
}

TEST_CASE("total masses") {
  const EllipseParams p = make_params(2.0, 1.0);
  const EllipseParams d = p.derived();
  for (double alpha : {-0.9, -0.5, 0.0, 2.0, 7.5}) {
    CHECK(build_rule(Measure::area_alpha(p, alpha)).total_mass() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(build_rule(Measure::b_minus(d, alpha)).total_mass() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(build_rule(Measure::b_plus(d, alpha)).total_mass() == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK(build_rule(Measure::chebyshev_t(p)).total_mass() == doctest::Approx(pi * std::log(3.0)).epsilon(1e-13));
  CHECK(measure_mass(Measure::chebyshev_t(p)) == doctest::Approx(pi * std::log(3.0)).epsilon(1e-14));
  CHECK(build_rule(Measure::flat(p)).total_mass() == doctest::Approx(2.0 * pi).epsilon(1e-13));
  for (const Measure& m : {Measure::chebyshev_v(p), Measure::chebyshev_w(p), Measure::area_alpha(p, 1.0, false)})
    CHECK(build_rule(m).total_mass() == doctest::Approx(measure_mass(m)).epsilon(1e-12));
}

TEST_CASE("nodes are strictly interior") {
  const EllipseParams p = make_params(2.0, 1.0);
  for (const Measure& m : {Measure::area_alpha(p, -0.5), Measure::chebyshev_t(p), Measure::chebyshev_v(p),
                           Measure::chebyshev_w(p), Measure::b_minus(p.derived(), 0.0),
                           Measure::b_plus(p.derived(), 1.0)}) {
    const QuadratureRule r = build_rule(m, 24, 48);
    for (const complex& z : r.nodes) CHECK(ellipse_level(m.params, z) < 1.0);
    for (double w : r.weights) CHECK(w > 0.0);
  }
}

TEST_CASE("rule sizes are validated") {
  const Measure m = Measure::area_alpha(make_params(2.0, 1.0), 0.0);
  CHECK_THROWS_AS(build_rule(m, 3, 16), std::invalid_argument);
  CHECK_THROWS_AS(build_rule(m, 8, 6), std::invalid_argument);
  CHECK_THROWS_AS(build_rule(m, 8, 17), std::invalid_argument);
}

TEST_CASE("inner products and moments") {
  const EllipseParams p = make_params(2.0, 1.0);
  const ComplexFn one = [](complex) { return complex(1.0); };
  const ComplexFn id = [](complex z) { return z; };
  for (double alpha : {-0.5, 0.0, 2.0}) {
    const QuadratureRule r = build_rule(Measure::area_alpha(p, alpha));
    CHECK(std::abs(inner_product(one, one, r) - 1.0) < 1e-14);
    CHECK(std::abs(inner_product(id, one, r)) < 1e-15);
  }
  const QuadratureRule r0 = build_rule(Measure::area_alpha(p, 0.0));
  const QuadratureRule r2 = build_rule(Measure::area_alpha(p, 2.0));
  CHECK(std::abs(inner_product(id, id, r0) - 1.25) < 1e-14);
  CHECK(moment(1, 0, r0) == complex(0.0, 0.0));
  CHECK(std::abs(moment(1, 1, r2) - 0.625) < 1e-14);
  CHECK(std::abs(moment(2, 0, r0) - 0.75) < 1e-14);
  CHECK_THROWS_AS(moment(-1, 0, r0), std::invalid_argument);
}

TEST_CASE("moments agree with the analytic oracle") {
  for (auto [a, b] : {std::pair{2.0, 1.0}, {1.3, 0.4}, {5.0, 4.5}})
    for (double alpha : {-0.9, -0.5, 0.0, 1.0, 2.5}) {
      const QuadratureRule r = build_rule(Measure::area_alpha(make_params(a, b), alpha));
      for (int q = 0; q <= 10; ++q)
        for (int s = 0; s <= 10; ++s) {
          const double expect = oracle::area_moment(q, s, a, b, alpha);
          const complex got = moment(q, s, r);
          CHECK(std::abs(got - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("moment scaling in alpha and parity") {
  const EllipseParams p = make_params(2.0, 1.0);
  const QuadratureRule r0 = build_rule(Measure::area_alpha(p, 0.0));
  for (double alpha : {-0.5, 1.0, 2.5}) {
    const QuadratureRule ra = build_rule(Measure::area_alpha(p, alpha));
    for (int q = 0; q <= 10; ++q)
      for (int s = 0; s <= 10; ++s) {
        if ((q + s) % 2) {
          CHECK(std::abs(moment(q, s, ra)) <= 1e-13);
          continue;
        }
        const double h = 0.5 * (q + s);
        const double law = std::exp(std::lgamma(2 + alpha) + std::lgamma(2 + h) - std::lgamma(2 + alpha + h));
        const complex m0 = moment(q, s, r0);
        if (std::abs(m0) < 1e-14) continue;
        CHECK(std::abs(moment(q, s, ra) / m0 - law) <= 1e-12 * law);
      }
  }
}

TEST_CASE("norms") {
  const EllipseParams p = make_params(2.0, 1.0);
  const QuadratureRule r = build_rule(Measure::area_alpha(p, 0.0));
  const ComplexFn one = [](complex) { return complex(1.0); };
  const ComplexFn id = [](complex z) { return z; };
  for (double q : {0.5, 1.0, 3.0}) CHECK(lp_norm(one, q, r) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lp_norm(id, 2.0, r) == doctest::Approx(std::sqrt(5.0) / 2).epsilon(1e-14));
  CHECK(lp_norm(id, 1.0, r) <= lp_norm(id, 2.0, r));
  CHECK_THROWS_AS(lp_norm(id, 0.0, r), std::invalid_argument);
}

TEST_CASE("inner product is conjugate symmetric") {
  const QuadratureRule r = build_rule(Measure::area_alpha(make_params(2.0, 1.0), 0.5), 32, 64);
  oracle::Rng g(13);
  for (int i = 0; i < 30; ++i) {
    const complex u(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1));
    const complex v(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1));
    const int k = static_cast<int>(oracle::uniform(g, 0, 6));
    const ComplexFn f = [=](complex z) { return std::exp(u * z) + std::pow(z, k); };
    const ComplexFn h = [=](complex z) { return std::sin(v * z) * z; };
    const complex fh = inner_product(f, h, r), hf = inner_product(h, f, r);
    CHECK(std::abs(fh - std::conj(hf)) <= 1e-14 * std::max(1.0, std::abs(fh)));
  }
}

TEST_CASE("pairwise summation") {
  std::vector<double> xs(1000);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 1.0 / (1.0 + i);
  double naive = 0.0;
  for (double x : xs) naive += x;
  CHECK(pairwise_sum(xs) == doctest::Approx(naive).epsilon(1e-14));
  CHECK(pairwise_sum(std::span<const double>()) == 0.0);
  std::vector<complex> cs{{1, 2}, {3, -4}, {0.5, 0.5}};
  CHECK(pairwise_sum(cs) == complex(4.5, -1.5));
}

TEST_CASE("contour identity") {
  const EllipseParams p = make_params(2.0, 1.0);
  const ContourResult c00 = contour_check(p, 0, 0);
  CHECK(std::abs(c00.expected - complex(0.0, 4.0 * pi / 3.0)) < 1e-14);
  CHECK(c00.error() < 1e-12);
  const ContourResult c10 = contour_check(p, 1, 0);
  CHECK(c10.expected == complex(0.0, 0.0));
  CHECK(std::abs(c10.value) < 1e-12);
  const ContourResult c22 = contour_check(p, 2, 2);
  CHECK(std::abs(c22.expected - complex(0.0, pi * 1.5 * (27.0 - 1.0 / 27.0))) < 1e-12);
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) CHECK(contour_check(p, n, m).error() <= 1e-10);
  CHECK_THROWS_AS(contour_check(p, -1, 0), std::invalid_argument);
}

}
