#include "hyperclique/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hyperclique/error.hpp"

namespace hyperclique {
namespace {

constexpr double kPi = std::numbers::pi;

// cosh(x) - 1 without cancellation for small x.
double cosh_m1(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

void require_radius(double r, const HrgParams& params, const char* what) {
  if (!(r >= 0.0 && r <= params.R)) {
    throw std::domain_error(std::string(what) + ": radius " + std::to_string(r) +
                            " outside [0, " + std::to_string(params.R) + "]");
  }
}

template <class F>
double integrate(F&& f, double a, double b, double abs_tol, const char* what) {
  if (b <= a) return 0.0;
  // Integrate over [0, 1] so integrand values stay O(1) for short intervals
  // with tall integrands; otherwise the roundoff floor of the error estimate
  // alone defeats the tolerance.
  const double width = b - a;
  auto unit = [&](double s) { return width * f(a + width * s); };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      unit, 0.0, 1.0, /*max_depth=*/15, /*tolerance=*/1e-11, &error);
  if (!std::isfinite(value) || error > abs_tol) {
    throw QuadratureError(std::string(what) + ": quadrature did not converge (error estimate " +
                          std::to_string(error) + ")");
  }
  return value;
}

}  // namespace

double normalize_angle(double phi) {
  double wrapped = std::fmod(phi, kTwoPi);
  if (wrapped < 0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

HrgParams HrgParams::make(std::size_t n, double alpha, double C) {
  if (n == 0) throw std::invalid_argument("HrgParams: n must be positive");
  if (!(alpha > 0.5) || !std::isfinite(alpha)) {
    throw std::invalid_argument("HrgParams: alpha must be > 1/2");
  }
  if (!std::isfinite(C)) throw std::invalid_argument("HrgParams: C must be finite");
  HrgParams p;
  p.n = n;
  p.alpha = alpha;
  p.C = C;
  p.R = 2.0 * std::log(static_cast<double>(n)) + C;
  if (!(p.R > 0.0)) throw std::invalid_argument("HrgParams: disk radius 2 ln n + C must be positive");
  return p;
}

double angular_difference(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, kTwoPi - d);
}

double distance(const PolarPoint& u, const PolarPoint& v) {
  // sinh^2(d/2) = sinh^2((ru - rv)/2) + sin^2(dphi/2) sinh ru sinh rv, the
  // half-angle form of the law of cosines: no cancellation near d = 0.
  const double lo = std::min(u.r, v.r);
  const double hi = std::max(u.r, v.r);
  const double a = std::sinh(0.5 * (hi - lo));
  const double s = std::sin(0.5 * angular_difference(u.phi, v.phi));
  return 2.0 * std::asinh(std::sqrt(a * a + s * s * std::sinh(lo) * std::sinh(hi)));
}

double max_angular_deviation(double r1, double r2, double threshold) {
  if (r1 + r2 <= threshold) return kPi;
  const double gap = std::fabs(r1 - r2);
  if (gap >= threshold) return 0.0;
  const double denom = std::sinh(r1) * std::sinh(r2);
  if (denom <= 0.0) return kPi;
  // sin^2(theta/2) = (cosh T - cosh(r1 - r2)) / (2 sinh r1 sinh r2), with the
  // difference of cosines written as a product to avoid cancellation.
  const double s2 = std::sinh(0.5 * (threshold + gap)) * std::sinh(0.5 * (threshold - gap)) / denom;
  if (s2 >= 1.0) return kPi;
  return 2.0 * std::asin(std::sqrt(s2));
}

double radial_density(double r, const HrgParams& params) {
  require_radius(r, params, "radial_density");
  return params.alpha * std::sinh(params.alpha * r) / cosh_m1(params.alpha * params.R);
}

double mu_origin_ball(double r, const HrgParams& params) {
  require_radius(r, params, "mu_origin_ball");
  return std::min(1.0, cosh_m1(params.alpha * r) / cosh_m1(params.alpha * params.R));
}

double mu_ball_intersection(double r, const HrgParams& params) {
  require_radius(r, params, "mu_ball_intersection");
  if (r == 0.0) return 1.0;
  const double R = params.R;
  // Every point with radius <= R - r is within R of (r, 0).
  const double inner = mu_origin_ball(R - r, params);
  const double norm = cosh_m1(params.alpha * R);
  // Over x in [R - r, R] write x = R - r u with u = 1 - t^2: the angular
  // extent has a square-root kink at t = 0 that this removes, and the two
  // factors of cosh R - cosh(x - r) become r (1 + u) and 2R - r (1 + u)
  // without cancellation.
  auto lens = [&](double t) {
    const double u = (1.0 - t) * (1.0 + t);
    const double x = R - r * u;
    if (x <= 0.0) return 0.0;
    const double w = r * (1.0 + u);
    const double s2 = std::sinh(0.5 * w) * std::sinh(R - 0.5 * w) / (std::sinh(x) * std::sinh(r));
    const double theta = s2 >= 1.0 ? kPi : 2.0 * std::asin(std::sqrt(s2));
    return params.alpha * std::sinh(params.alpha * x) / norm * theta / kPi * 2.0 * r * t;
  };
  const double outer = integrate(lens, 0.0, 1.0, 1e-8, "mu_ball_intersection");
  return std::clamp(inner + outer, 0.0, 1.0);
}

double mu_ball_intersection_asymptotic(double r, const HrgParams& params) {
  require_radius(r, params, "mu_ball_intersection_asymptotic");
  return 2.0 * params.alpha * std::exp(-r / 2.0) / (kPi * (params.alpha - 0.5));
}

double expected_average_degree(const HrgParams& params) {
  auto integrand = [&](double r) {
    return radial_density(r, params) * mu_ball_intersection(r, params);
  };
  // Mass concentrates near R; absolute tolerance is on the per-vertex
  // probability, so scale it by 1/n.
  const double tol = 1e-6 / static_cast<double>(params.n);
  return static_cast<double>(params.n) *
         integrate(integrand, 0.0, params.R, tol, "expected_average_degree");
}

double solve_C_for_avg_degree(std::size_t n, double alpha, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("solve_C_for_avg_degree: delta must be positive");
  }
  if (n < 2) throw std::invalid_argument("solve_C_for_avg_degree: n must be at least 2");
  if (!(alpha > 0.5)) throw std::invalid_argument("solve_C_for_avg_degree: alpha must be > 1/2");

  const double log_n2 = 2.0 * std::log(static_cast<double>(n));
  const double c_min = -log_n2 + 1e-6;  // keeps R > 0
  auto degree = [&](double C) { return expected_average_degree(HrgParams::make(n, alpha, C)); };

  // Expected degree is decreasing in C.
  double lo = std::max(-5.0, c_min);
  double hi = 5.0;
  int expansions = 0;
  while (degree(lo) < delta) {
    if (lo <= c_min || ++expansions > 60) {
      throw BracketError("solve_C_for_avg_degree: average degree " + std::to_string(delta) +
                         " is not reachable for n = " + std::to_string(n));
    }
    lo = std::max(c_min, lo - 5.0);
  }
  expansions = 0;
  while (degree(hi) > delta) {
    if (++expansions > 60) {
      throw BracketError("solve_C_for_avg_degree: no upper bracket for average degree " +
                         std::to_string(delta));
    }
    hi += 5.0;
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double d = degree(mid);
    if (std::fabs(d - delta) <= 1e-5 * delta) return mid;
    if (d > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13) return mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hyperclique
