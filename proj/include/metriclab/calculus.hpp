#pragma once

#include <functional>
#include <vector>

#include "metriclab/field.hpp"
#include "metriclab/geodesic.hpp"
#include "metriclab/grid.hpp"
#include "metriclab/metric_model.hpp"

namespace metriclab {

/// Midpoint-rule integral of fn against the model's area element over the
/// grid's rectangle. For block/tiled kinds, cells straddling a region or
/// tile boundary are subdivided once (2x2).
double integrate(const MetricModel& model, const Grid& grid,
                 const std::function<double(const ParamPoint&)>& fn);

/// Riemannian volume of the grid rectangle: integrate(model, grid, 1).
double volume(const MetricModel& model, const Grid& grid);

/// (integral of |fn|^p dmu)^(1/p) with the model's area element.
double lp_norm(const MetricModel& model, const Grid& grid,
               const std::function<double(const ParamPoint&)>& fn, double p);

/// W^{1,p} Sobolev norm of a node field against a background metric:
/// (integral of |u|^p + |grad u|_{g0}^p dmu_{g0})^(1/p), gradients by central
/// differences (second-order one-sided at non-periodic edges), node-based
/// trapezoid quadrature. Throws for p < 1.
double sobolev_w1p_norm(const ScalarField& field,
                        const MetricModel& background, double p);

/// (integral along the path of |field|^p dt)^(1/p), trapezoid in the path's
/// own arclength parametrization. Throws on an empty path.
double trace_integral(const ScalarField& field, const GeodesicPath& path,
                      double p);

/// Empirical trace-inequality constant: for band-limited random fields,
/// the max over sampled background geodesics of
/// trace_integral / sobolev_w1p_norm. Per-field fixed seeds make the result
/// schedule-independent; zero-norm fields are rejected and resampled.
struct TraceRatioResult {
  struct FieldRow {
    unsigned seed;
    double sobolev_norm;
    double best_trace;
    double ratio;
  };
  double max_ratio = 0.0;
  std::vector<FieldRow> fields;
};

TraceRatioResult trace_ratio_test(const MetricModel& background,
                                  const Grid& grid, double p, int field_count,
                                  int path_count, unsigned seed);

/// Ball-volume density around a center: for each radius r, the ratio
/// vol(B(center, r)) / r^2, with ball membership decided by the graph
/// distance field (node measure = sqrt_det x node weight). Distinguishes
/// cone points (ratio -> pi*kappa > 0) from cusp points (ratio -> 0).
struct DensityEstimate {
  ParamPoint center;
  std::vector<double> radii;   // decreasing
  std::vector<double> ratios;  // vol(B(center,r)) / r^2
};

DensityEstimate density_estimate(const MetricModel& model, const Grid& grid,
                                 const ParamPoint& center,
                                 std::vector<double> radii);

}  // namespace metriclab
