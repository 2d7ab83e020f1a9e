#include "planarop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "planarop/bergman.hpp"
#include "planarop/limits.hpp"
#include "planarop/ortho.hpp"
#include "planarop/selberg.hpp"

namespace planarop {

namespace {

void add(std::vector<Check>& out, std::string name, double value, double tol) {
  out.push_back({std::move(name), value, tol, value <= tol});
}

std::string fmt_alpha(double alpha) {
  std::string s = std::to_string(alpha);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

double gram_error(const PolynomialFamily& f, const Measure& m, int nmax) {
  const QuadratureRule rule = build_rule(m);
  const GramResult g = gram_matrix(f, m, nmax, rule);
  return std::max(g.max_offdiag_relative(), g.max_diag_error());
}

}  // namespace

std::vector<Check> run_verification() {
  std::vector<Check> out;
  const EllipseParams p = make_params(2.0, 1.0);
  const EllipseParams pd = p.derived();

  for (double alpha : {-0.9, -0.5, 0.0, 1.0, 2.5})
    add(out, "gram.gegenbauer.alpha=" + fmt_alpha(alpha),
        gram_error(PolynomialFamily::gegenbauer(alpha), Measure::area_alpha(p, alpha), 16), 1e-10);
  add(out, "gram.legendre", gram_error(PolynomialFamily::legendre(), Measure::area_alpha(p, -0.5), 12), 1e-10);
  for (double alpha : {0.0, 1.5}) {
    add(out, "gram.jacobi-minus.alpha=" + fmt_alpha(alpha),
        gram_error(PolynomialFamily::jacobi_half(alpha, -1), Measure::b_minus(pd, alpha), 10), 1e-9);
    add(out, "gram.jacobi-plus.alpha=" + fmt_alpha(alpha),
        gram_error(PolynomialFamily::jacobi_half(alpha, +1), Measure::b_plus(pd, alpha), 10), 1e-9);
  }
  add(out, "gram.chebyshev-t", gram_error(PolynomialFamily::chebyshev_t(), Measure::chebyshev_t(p), 12), 1e-8);
  add(out, "gram.chebyshev-u", gram_error(PolynomialFamily::chebyshev_u(), Measure::flat(p), 12), 1e-8);
  add(out, "gram.chebyshev-v", gram_error(PolynomialFamily::chebyshev_v(), Measure::chebyshev_v(p), 12), 1e-8);
  add(out, "gram.chebyshev-w", gram_error(PolynomialFamily::chebyshev_w(), Measure::chebyshev_w(p), 12), 1e-8);

  {
    const QuadratureRule r0 = build_rule(Measure::area_alpha(p, 0.0));
    const QuadratureRule r1 = build_rule(Measure::area_alpha(p, 1.0));
    double scaling = 0.0, parity = 0.0;
    for (int q = 0; q <= 20; ++q)
      for (int s = 0; s + q <= 20; ++s) {
        const complex m1 = moment(q, s, r1);
        if ((q + s) % 2 == 1) {
          parity = std::max(parity, std::abs(m1));
          continue;
        }
        const complex m0 = moment(q, s, r0);
        if (std::abs(m0) < 1e-300) continue;
        const double h = 0.5 * (q + s);
        const double law = std::exp(std::lgamma(3.0) + std::lgamma(2.0 + h) - std::lgamma(3.0 + h));
        scaling = std::max(scaling, std::abs(m1 / m0 - law) / law);
      }
    add(out, "moments.scaling", scaling, 1e-12);
    add(out, "moments.parity", parity, 1e-13);
  }

  {
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n)
      for (int m = 0; m <= 10; ++m) {
        const ContourResult c = contour_check(p, n, m);
        worst = std::max(worst, c.error());
      }
    add(out, "contour.chebyshev", worst, 1e-10);
  }

  {
    double worst = 0.0;
    for (double alpha : {-0.5, 0.0, 1.0, 2.5})
      for (int N = 1; N <= 12; ++N) {
        const double prod = selberg_product(alpha, p, N);
        worst = std::max(worst, std::abs(selberg_closed(alpha, p, N) - prod) / std::max(1.0, std::abs(prod)));
      }
    add(out, "selberg.closed-vs-product", worst, 1e-11);
    add(out, "selberg.direct", std::abs(selberg_direct(0.0, p, 2) - 2.5) / 2.5, 1e-10);
  }

  add(out, "heine.N=2", heine_check(0.0, p, 2).residual, 1e-8);

  {
    const HessenbergMatrix h = hessenberg(0.0, p, 12, HessenbergStrategy::Closed);
    add(out, "hessenberg.bandwidth", std::abs(bandwidth(h, 1e-10) - 2.0), 0.0);
  }

  {
    double at_edges = 0.0, interior = 1e300;
    for (double alpha : {-0.5, 0.0, 1.3})
      for (int l = 0; l <= 8; ++l) {
        at_edges = std::max({at_edges, std::abs(turan_determinant(alpha, l, 1.0)),
                             std::abs(turan_determinant(alpha, l, -1.0))});
        interior = std::min(interior, std::abs(turan_determinant(alpha, l, 5.0 / 3.0)));
      }
    add(out, "turan.edges", at_edges, 1e-12);
    add(out, "turan.interior-inverse", 1e-6 / interior, 1.0);
  }

  {
    const LimitReport h = hermite_limit(p, 1, 1, {10.0, 100.0, 1000.0});
    add(out, "limits.hermite", h.verdict ? h.steps.back().residual : 1.0, h.tolerance);
    const LimitReport d = disc_limit(1.0, 1, 1, 2.0, {0.9, 0.99, 0.999});
    add(out, "limits.disc", d.verdict ? d.steps.back().residual : 1.0, d.tolerance);
    const LimitReport r = realline_limit(2.0, 2, 2, 0.0, {0.3, 0.1, 0.03});
    add(out, "limits.realline", r.verdict ? r.steps.back().residual : 1.0, r.tolerance);
  }
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace planarop
