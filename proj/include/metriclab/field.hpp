#pragma once

#include <functional>

#include <Eigen/Core>

#include "metriclab/grid.hpp"
#include "metriclab/metric_model.hpp"

namespace metriclab {

/// A scalar function sampled on grid nodes. Pole vertices carry the value 0
/// and are excluded from norms (their quadrature weight is 0).
class ScalarField {
 public:
  ScalarField(Grid grid, Eigen::ArrayXd values);

  static ScalarField from_function(
      const Grid& grid, const std::function<double(const ParamPoint&)>& f);

  /// Truncated cosine series with modes <= max_mode per axis and coefficients
  /// drawn Normal(0, (1+|k|)^-3), |k| the Euclidean mode magnitude. Smooth,
  /// deterministic for a fixed seed, and resolution-independent (the same
  /// continuum function sampled on any grid).
  static ScalarField band_limited_random(const Grid& grid, int max_mode,
                                         unsigned seed);

  const Grid& grid() const { return grid_; }
  const Eigen::ArrayXd& values() const { return values_; }
  double value(int node) const { return values_[node]; }
  double at(int i, int j) const { return values_[grid_.node_id(i, j)]; }

  /// Coordinate gradient (du, dv) by central differences, second-order
  /// one-sided at non-periodic edges, wrapping at periodic ones.
  Vec2 gradient(int i, int j) const;

 private:
  Grid grid_;
  Eigen::ArrayXd values_;
};

/// Pointwise g0-norm of the tensor g_j: |g_j|_{g0} = sqrt(tr((G0^-1 Gj)^2)).
/// For warped pairs with warpings f_j, f_0 this is sqrt(1 + (f_j/f_0)^4).
/// Pole nodes are excluded (value 0).
ScalarField tensor_norm_field(const MetricModel& model_j,
                              const MetricModel& model_0, const Grid& grid);

}  // namespace metriclab
