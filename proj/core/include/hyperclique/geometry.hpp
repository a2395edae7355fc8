#pragma once

#include <cstddef>
#include <numbers>

namespace hyperclique {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2*pi).
double normalize_angle(double phi);

/// A point of the hyperbolic plane (curvature -1) in polar coordinates
/// around a fixed origin. The angle is normalized on construction.
struct PolarPoint {
  double r = 0;
  double phi = 0;

  PolarPoint() = default;
  PolarPoint(double radius, double angle) : r(radius), phi(normalize_angle(angle)) {}

  friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

/// Parameters of the threshold hyperbolic random graph model.
/// Always construct through `make`, which enforces R = 2 ln n + C.
struct HrgParams {
  std::size_t n = 0;
  double alpha = 0;
  double C = 0;
  double R = 0;

  /// Throws std::invalid_argument unless n >= 1 and alpha > 1/2.
  static HrgParams make(std::size_t n, double alpha, double C);
};

/// Smaller of the two angles between `a` and `b`, in [0, pi].
double angular_difference(double a, double b);

/// Hyperbolic distance between two points, evaluated in half-angle form so
/// that nearby points keep full relative precision. Symmetric bit for bit.
double distance(const PolarPoint& u, const PolarPoint& v);

/// Largest angular difference at which points with radii r1 and r2 are still
/// within hyperbolic distance `threshold` of each other. Returns pi when the
/// two radii sum to at most the threshold, and 0 if no angle suffices.
double max_angular_deviation(double r1, double r2, double threshold);

/// Radial density alpha sinh(alpha r) / (cosh(alpha R) - 1).
/// Throws std::domain_error if r is outside [0, R].
double radial_density(double r, const HrgParams& params);

/// Exact probability mass of the origin-centred ball of radius r.
double mu_origin_ball(double r, const HrgParams& params);

/// Probability mass of B_(r,0)(R) intersected with the model disk, by
/// adaptive quadrature over the lens (the angular extent at each radius is
/// integrated in closed form). Throws QuadratureError on non-convergence.
double mu_ball_intersection(double r, const HrgParams& params);

/// Leading-order approximation 2 alpha e^{-r/2} / (pi (alpha - 1/2)) of
/// `mu_ball_intersection`. Only meaningful for r large relative to R.
double mu_ball_intersection_asymptotic(double r, const HrgParams& params);

/// n times the integral of radial_density(r) * mu_ball_intersection(r) over
/// [0, R]: the expected degree of a uniformly drawn vertex.
double expected_average_degree(const HrgParams& params);

/// Finds C such that expected_average_degree matches `delta` to 1e-3
/// relative, by bisection. Throws BracketError if no bracket is found.
double solve_C_for_avg_degree(std::size_t n, double alpha, double delta);

}  // namespace hyperclique
