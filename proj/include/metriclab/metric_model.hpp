#pragma once

#include <string>
#include <utility>

#include <Eigen/Core>

#include "metriclab/geometry.hpp"
#include "metriclab/warping.hpp"

namespace metriclab {

/// The five flat charts of the block metric on [0,1]^2: the lid of the box
/// plus its four sides. Top = [1/4,3/4]^2; the sides are the trapezoids cut
/// by the diagonals y = x and y = 1-x.
enum class BlockRegion { Top, Left, Right, Front, Back };

const char* to_string(BlockRegion r);

/// Inverse of the region chart F_R evaluated at p (valid on the region's
/// closure). Top pulls back to [0,1]^2, the sides to [0,h]x[0,1] or
/// [0,1]x[0,h].
ParamPoint chart_pullback(BlockRegion r, const ParamPoint& p, double h);

/// Jacobian d(s,t)/d(x,y) of chart_pullback, in closed form.
Eigen::Matrix2d chart_pullback_jacobian(BlockRegion r, const ParamPoint& p,
                                        double h);

/// A Riemannian metric on a 2-D parameter rectangle, evaluable as a quadratic
/// form. Kinds:
///   flat    the Euclidean form on an arbitrary rectangle
///   warped  du^2 + f(u)^2 dv^2 with v periodic (fiber S^1 of circumference
///           equal to the v-extent), u optionally periodic
///   block   the piecewise flat box metric of height h > 1 on [0,1]^2, the
///           pullback of Euclidean charts under the five region maps
///   tiled   block(h) rescaled onto each of the 2^j x 2^j subsquares of
///           [0,1]^2: g = (1/2^j)^2 F* g_h per tile
///
/// Models are immutable after construction; all evaluation is pure and safe
/// for concurrent use.
class MetricModel {
 public:
  enum class Kind { Flat, Warped, Block, Tiled };

  static MetricModel flat(Rect rect = unit_square(), bool periodic_u = false,
                          bool periodic_v = false);
  /// Warped product on [a,b] x S^1 with fiber circumference 2*pi.
  static MetricModel warped(WarpingFunction f, bool periodic_u = false);
  static MetricModel block(double h);
  static MetricModel tiled(int j, double h);

  Kind kind() const { return kind_; }
  const Rect& domain() const { return rect_; }
  bool periodic_u() const { return periodic_u_; }
  bool periodic_v() const { return periodic_v_; }
  bool pole_at_umin() const { return pole_umin_; }
  bool pole_at_umax() const { return pole_umax_; }
  const WarpingFunction& warping() const { return warping_; }
  double block_height() const { return h_; }
  int tile_depth() const { return tile_j_; }
  int tiles_per_axis() const { return 1 << tile_j_; }

  bool contains(const ParamPoint& p) const;
  bool is_pole(const ParamPoint& p) const;

  /// g_p(w,w), the squared length of tangent vector w at p.
  /// Throws std::domain_error outside the domain or at a pole.
  double form(const ParamPoint& p, const Vec2& w) const;

  /// The 2x2 matrix of g at p (same preconditions as form).
  Eigen::Matrix2d form_matrix(const ParamPoint& p) const;

  /// Area element sqrt(det g_p); 0 by continuity at poles.
  double sqrt_det(const ParamPoint& p) const;

  /// Region containing p for block/tiled kinds (tile-local for tiled).
  /// Boundary ties resolve by the fixed priority top>left>right>front>back.
  BlockRegion region_of(const ParamPoint& p) const;

  /// Inverts the region chart: returns (R, q) with F_R(q) = p. For tiled
  /// kinds p is first mapped to its tile-local image.
  std::pair<BlockRegion, ParamPoint> pullback(const ParamPoint& p) const;

  /// Tile index (l,m) and tile-local image of p in [0,1]^2 (tiled kind).
  std::pair<Eigen::Vector2i, ParamPoint> tile_local(const ParamPoint& p) const;

  std::string describe() const;

 private:
  MetricModel() = default;
  double warped_f(double u) const;

  Kind kind_ = Kind::Flat;
  Rect rect_ = unit_square();
  bool periodic_u_ = false;
  bool periodic_v_ = false;
  bool pole_umin_ = false;
  bool pole_umax_ = false;
  WarpingFunction warping_ = WarpingFunction::constant(1.0);
  double h_ = 0.0;
  int tile_j_ = 0;
};

inline double eval_form(const MetricModel& m, const ParamPoint& p,
                        const Vec2& w) {
  return m.form(p, w);
}
inline double sqrt_det(const MetricModel& m, const ParamPoint& p) {
  return m.sqrt_det(p);
}
inline BlockRegion region_of(const MetricModel& m, const ParamPoint& p) {
  return m.region_of(p);
}
inline std::pair<BlockRegion, ParamPoint> pullback(const MetricModel& m,
                                                   const ParamPoint& p) {
  return m.pullback(p);
}

}  // namespace metriclab
