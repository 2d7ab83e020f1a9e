#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "planarop/selberg.hpp"

using namespace planarop;

namespace {

const EllipseParams kP = make_params(2.0, 1.0);

double log_rel(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

}  // namespace

TEST_SUITE("selberg") {

TEST_CASE("monic norms") {
  for (double alpha : {-0.5, 0.0, 3.0}) CHECK(monic_norm(alpha, kP, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(monic_norm(0.0, kP, 1) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(monic_norm(3.0, kP, 1) == doctest::Approx(0.5).epsilon(1e-15));
  // |z^2 - 3/4|^2 integrated with the moment oracle
  const double h2 = oracle::area_moment(2, 2, 2.0, 1.0, 0.0) - 0.5625;
  CHECK(monic_norm(0.0, kP, 2) == doctest::Approx(h2).epsilon(1e-14));
  CHECK_THROWS_AS(monic_norm(-1.0, kP, 1), std::invalid_argument);
  CHECK_THROWS_AS(monic_norm(0.0, kP, -1), std::invalid_argument);
}

TEST_CASE("two routes to the monic norm agree") {
  for (auto [a, b] : {std::pair{2.0, 1.0}, {1.05, 1.0}, {4.0, 0.3}})
    for (double alpha : {-0.9, -0.5, 0.0, 1.0, 2.5, 6.0})
      for (int n = 0; n <= 20; ++n) {
        const EllipseParams p = make_params(a, b);
        const LogValue h = monic_norm_hypergeometric(alpha, p, n);
        CHECK(h.sign == 1);
        CHECK(h.log_abs == doctest::Approx(std::log(monic_norm(alpha, p, n))).epsilon(1e-11).scale(1.0));
      }
}

TEST_CASE("product form") {
  CHECK(selberg_product(0.7, kP, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(selberg_product(0.0, kP, 2) == doctest::Approx(std::log(2.5)).epsilon(1e-15));
  CHECK(selberg_product(0.0, kP, 3) == doctest::Approx(std::log(6.0 * 1.25 * monic_norm(0.0, kP, 2))).epsilon(1e-15));
  CHECK_THROWS_AS(selberg_product(0.0, kP, 0), std::invalid_argument);
}

TEST_CASE("closed form") {
  CHECK(std::abs(selberg_closed(0.3, kP, 1)) < 1e-14);
  CHECK(selberg_closed(0.0, kP, 2) == doctest::Approx(std::log(2.5)).epsilon(1e-14));
  CHECK(log_rel(selberg_closed(1.5, kP, 8), selberg_product(1.5, kP, 8)) <= 1e-11);
  for (double alpha : {-0.5, 0.0, 1.0, 2.5})
    for (int N = 1; N <= 12; ++N) CHECK(log_rel(selberg_closed(alpha, kP, N), selberg_product(alpha, kP, N)) <= 1e-11);
  CHECK_THROWS_AS(selberg_closed(0.0, kP, 0), std::invalid_argument);
}

TEST_CASE("closed form is continuous in alpha") {
  double previous = selberg_closed(-0.99, kP, 6);
  for (double alpha = -0.98; alpha <= 5.0; alpha += 0.01) {
    const double z = selberg_closed(alpha, kP, 6);
    CHECK(std::isfinite(z));
    CHECK(std::abs(z - previous) < 0.5);
    previous = z;
  }
}

TEST_CASE("direct quadrature") {
  CHECK(selberg_direct(0.0, kP, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(selberg_direct(0.0, kP, 2) == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(selberg_direct(2.0, kP, 2) == doctest::Approx(std::exp(selberg_closed(2.0, kP, 2))).epsilon(1e-9));
  for (double alpha : {-0.5, 0.0, 1.0, 2.5})
    for (int N = 1; N <= 2; ++N) {
      const double closed = std::exp(selberg_closed(alpha, kP, N));
      CHECK(selberg_direct(alpha, kP, N) == doctest::Approx(closed).epsilon(1e-9));
      CHECK(std::exp(selberg_product(alpha, kP, N)) == doctest::Approx(closed).epsilon(1e-9));
    }
  CHECK_THROWS_AS(selberg_direct(0.0, kP, 3), std::invalid_argument);
}

TEST_CASE("result bundle") {
  const SelbergResult s = selberg(0.0, kP, 2, true);
  REQUIRE(s.direct.has_value());
  CHECK(*s.direct == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(*s.direct_vs_closed <= 1e-10);
  CHECK(s.closed_vs_product <= 1e-14);
  CHECK_FALSE(selberg(0.0, kP, 5, false).direct.has_value());
}

}
