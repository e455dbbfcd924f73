#pragma once

#include <cmath>

#include <Eigen/Core>

namespace metriclab {

/// A point (u,v) in a 2-D parameter domain. For warped products u is the
/// interval coordinate r and v the fiber angle theta; for the flat/block
/// families (u,v) = (x,y).
using ParamPoint = Eigen::Vector2d;

/// Tangent vector at a ParamPoint, in parameter coordinates.
using Vec2 = Eigen::Vector2d;

/// Axis-aligned parameter rectangle [u0,u1] x [v0,v1].
struct Rect {
  double u0 = 0.0;
  double u1 = 1.0;
  double v0 = 0.0;
  double v1 = 1.0;

  double width() const { return u1 - u0; }
  double height() const { return v1 - v0; }

  bool contains(const ParamPoint& p, double pad = 1e-9) const {
    return p.x() >= u0 - pad && p.x() <= u1 + pad && p.y() >= v0 - pad &&
           p.y() <= v1 + pad;
  }
};

inline Rect unit_square() { return Rect{0.0, 1.0, 0.0, 1.0}; }

/// Reduce x into [lo, lo+period).
inline double wrap_periodic(double x, double lo, double period) {
  double t = std::fmod(x - lo, period);
  if (t < 0) t += period;
  return lo + t;
}

/// Signed wrapped difference b-a reduced into [-period/2, period/2].
inline double wrap_delta(double a, double b, double period) {
  double d = std::fmod(b - a, period);
  if (d > 0.5 * period) d -= period;
  if (d < -0.5 * period) d += period;
  return d;
}

}  // namespace metriclab
