#pragma once

#include <complex>
#include <string>
#include <utility>

namespace planarop {

using complex = std::complex<double>;

/// Half-axes of an ellipse centred at the origin, a > b > 0, together with
/// the derived constants used throughout the library.
///
///   c      = sqrt(a^2 - b^2)          right focus
///   R      = sqrt((a + b)/(a - b))    elliptic-coordinate stretch
///   r      = a + b                    Joukowsky circle radius
///   x_star = (a^2 + b^2)/(a^2 - b^2)  argument of the closed-form norms
struct EllipseParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double R = 0.0;
  double r = 0.0;
  double x_star = 0.0;

  /// The ellipse swept out by the quadratic map w = c(2(z/c)^2 - 1); it
  /// shares the focus c.
  EllipseParams derived() const;

  /// Inverse of derived(): the ellipse whose derived ellipse is *this.
  EllipseParams preimage() const;

  double area() const;  // pi a b
};

/// Throws std::invalid_argument unless a > b > 0.
EllipseParams make_params(double a, double b);

/// h(z) = (Re z)^2/a^2 + (Im z)^2/b^2; the open ellipse is h < 1.
double ellipse_level(const EllipseParams& p, complex z);
bool inside(const EllipseParams& p, complex z);

/// z = a r cos(theta) + i b r sin(theta), 0 <= r < 1.
complex elliptic_to_cartesian(const EllipseParams& p, double r, double theta);

/// z = (w + c^2/w)/2. Circles |w| = s > c map to confocal ellipses.
complex joukowsky(const EllipseParams& p, complex w);

struct QuadraticMapResult {
  complex w;
  EllipseParams derived;
};

/// w = c(2(z/c)^2 - 1), mapping the ellipse onto params.derived().
QuadraticMapResult quadratic_map(const EllipseParams& p, complex z);

/// Principal branch of the inverse, z = c sqrt((w + c)/(2c)), landing in
/// Re z >= 0. The cut is the ray {Im w = 0, Re w < -c}; points on it are
/// rejected with std::domain_error.
complex quadratic_map_inverse(const EllipseParams& p, complex w);

/// j(w) = (a/b^2)|c + w| - (c/b^2) Re(c + w). Equals h(z) for the preimage
/// z of w under the quadratic map from params.preimage().
double j_function(const EllipseParams& p, complex w);

enum class MeasureKind { AreaAlpha, BMinus, BPlus, ChebyshevT, ChebyshevV, ChebyshevW, Flat };

enum class Convention { Normalized, Flat };

std::string to_string(MeasureKind kind);
std::string to_string(Convention convention);

/// One of the weighted area measures on an ellipse.
///
/// Every measure is `prefactor * raw(z) * dA` with dA = d^2z/(pi a b):
///
///   kind        raw(z)                       normalized prefactor
///   AreaAlpha   (1 - h)^alpha                1 + alpha
///   BMinus      (1 - j)^alpha / |c + z|      (1 + alpha) a / 2
///   BPlus       (1 - j)^alpha                (1 + alpha)(2 + alpha) / 2
///   ChebyshevT  1 / |z^2 - c^2|              1
///   ChebyshevV  1 / |c - z|                  1
///   ChebyshevW  1 / |c + z|                  1
///   Flat        1                            1
///
/// With normalized == false the prefactor is pi a b instead, i.e. the measure
/// is raw(z) d^2z (the flat convention).
///
/// ChebyshevV pairs with 1/|c - z| and ChebyshevW with 1/|c + z|, which is
/// the pairing under which the standard V_n, W_n (V_1 = 2x - 1,
/// W_1 = 2x + 1) are orthogonal.
struct Measure {
  MeasureKind kind = MeasureKind::Flat;
  double alpha = 0.0;
  EllipseParams params;
  bool normalized = true;

  static Measure area_alpha(const EllipseParams& p, double alpha, bool normalized = true);
  static Measure b_minus(const EllipseParams& p, double alpha, bool normalized = true);
  static Measure b_plus(const EllipseParams& p, double alpha, bool normalized = true);
  static Measure chebyshev_t(const EllipseParams& p, bool normalized = false);
  static Measure chebyshev_v(const EllipseParams& p, bool normalized = false);
  static Measure chebyshev_w(const EllipseParams& p, bool normalized = false);
  static Measure flat(const EllipseParams& p, bool normalized = false);

  Convention convention() const { return normalized ? Convention::Normalized : Convention::Flat; }
  bool has_alpha() const;
  double prefactor() const;
  double raw_weight(complex z) const;
};

/// Density of m relative to dA = d^2z/(pi a b), including the prefactor.
/// Throws std::domain_error outside the open ellipse and at the foci for
/// ChebyshevT (and at the singular focus for V/W).
double weight_density(const Measure& m, complex z);

}  // namespace planarop
