#pragma once

#include <string>
#include <vector>

#include "planarop/geometry.hpp"

namespace planarop {

enum class LimitRegime { HermitePlane, DiscTruncatedUnitary, RealLine };

std::string to_string(LimitRegime regime);
LimitRegime parse_regime(const std::string& name);

struct LimitStep {
  double parameter = 0.0;
  complex value;
  double target = 0.0;
  double residual = 0.0;
};

/// A convergence experiment: one residual per parameter value. The verdict
/// holds when residuals decrease strictly (or sit at rounding level) and the
/// last one is within tolerance.
struct LimitReport {
  LimitRegime regime = LimitRegime::HermitePlane;
  int n = 0;
  int m = 0;
  double alpha = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::vector<LimitStep> steps;
  double tolerance = 0.0;
  bool residual_relative = true;
  // independent evaluation of the limiting value (Gauss-Laguerre, polar
  // disc quadrature or 1-D Gauss-Jacobi) and its closed form
  double reference = 0.0;
  double reference_closed = 0.0;
  bool decreasing = false;
  bool verdict = false;
};

inline constexpr double kHermiteTolerance = 1e-2;
inline constexpr double kDiscTolerance = 1e-3;
inline constexpr double kRealLineTolerance = 1e-2;

/// Rescaled Gegenbauer inner products n! m! (1+alpha)^{-(n+m)/2} pi a b
/// <C_m, C_n>_alpha on the ellipse with axes sqrt(1+alpha)(a, b), against
/// pi n! a b (2 x*)^n delta_nm. Diagonal residuals are relative, others are
/// scaled by pi a b.
LimitReport hermite_limit(const EllipseParams& p, int n, int m, const std::vector<double>& alphas);

/// Monic inner products on the ellipse (a, b) as b -> a, against
/// n! G(1+alpha)(1+alpha) a^{2n} / (G(1+alpha+n)(1+alpha+n)) delta_nm.
/// Residuals are absolute.
LimitReport disc_limit(double a, int n, int m, double alpha, const std::vector<double>& bs);

/// <C_m(z/c), C_n(z/c)>_alpha as b -> 0, against the real-line value
/// 2(1+alpha)/pi F(1/2, -alpha; 3/2; 1) int C_m C_n (1-x^2)^{alpha+1/2} dx.
LimitReport realline_limit(double a, int n, int m, double alpha, const std::vector<double>& bs);

/// F(1/2, -alpha; 3/2; 1) = int_0^1 (1 - t^2)^alpha dt, numerically.
double hypergeometric_half_at_one(double alpha);

/// sqrt(pi) G(1+alpha) / (2 G(alpha + 3/2)).
double hypergeometric_half_at_one_closed(double alpha);

}  // namespace planarop
