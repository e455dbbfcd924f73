#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "metriclab/grid.hpp"
#include "metriclab/metric_model.hpp"

namespace metriclab {

/// Length of the straight parameter segment from a to b under the model.
/// Smooth kinds use 4-point Gauss quadrature; block/tiled kinds split the
/// segment at tile and region boundaries and sum exact Euclidean chord
/// lengths in pullback coordinates. Coordinates may be given unwrapped on
/// periodic axes.
double segment_length(const MetricModel& model, const ParamPoint& a,
                      const ParamPoint& b);

/// Weighted graph over the grid nodes under the stencil.  Edge weights are
/// segment lengths; rows where the warping vanishes collapse to pole
/// vertices joined radially to the adjacent row.  Build once, then run any
/// number of source solves against it (solves are independent and pure).
struct GridGraph {
  Grid grid;
  std::vector<ParamPoint> points;          // node id -> parameter point
  std::vector<int> offsets;                // CSR adjacency
  std::vector<int> neighbors;
  std::vector<double> weights;

  int size() const { return int(points.size()); }
};

GridGraph build_graph(const MetricModel& model, const Grid& grid);

/// Weight of the stencil edge joining the nodes
/// nearest a and b. Throws std::invalid_argument if they are not adjacent.
double edge_length(const MetricModel& model, const Grid& grid,
                   const ParamPoint& a, const ParamPoint& b);

/// Exact graph-metric distances from one source (Dijkstra), with the
/// predecessor map for path reconstruction.
struct DistanceField {
  const GridGraph* graph = nullptr;
  std::shared_ptr<const GridGraph> owned;  // set by the convenience overload
  int source = -1;
  Eigen::VectorXd dist;
  std::vector<int> pred;

  double at(const ParamPoint& p) const { return dist[graph->grid.snap(p)]; }
};

DistanceField single_source(const GridGraph& graph, const ParamPoint& source);
DistanceField single_source(const MetricModel& model, const Grid& grid,
                            const ParamPoint& source);
/// Distance to the nearest of several seed nodes (all started at 0).
DistanceField multi_source(const GridGraph& graph,
                           const std::vector<int>& seeds);

/// Node polyline of the graph geodesic from the field's source to target.
/// Cumulative arclength is read off the distance field, so total length
/// equals the distance value exactly.
struct GeodesicPath {
  std::vector<int> node_ids;
  std::vector<ParamPoint> points;
  std::vector<double> arclength;

  double length() const { return arclength.empty() ? 0.0 : arclength.back(); }
};

GeodesicPath geodesic_path(const DistanceField& field,
                           const ParamPoint& target);

/// Symmetric pairwise graph distances over a sample point set.
struct DistanceMatrix {
  std::vector<ParamPoint> samples;
  Eigen::MatrixXd values;
  std::string provenance;

  int size() const { return int(samples.size()); }

  /// Exact metric-axiom check: zero diagonal, symmetry, finiteness, and the
  /// triangle inequality over all sample triples (eps absorbs float
  /// summation noise only).
  bool metric_axioms_ok(double eps = 1e-9, std::string* why = nullptr) const;
};

DistanceMatrix distance_matrix(const MetricModel& model, const Grid& grid,
                               const std::vector<ParamPoint>& samples);
DistanceMatrix distance_matrix(const GridGraph& graph,
                               const std::vector<ParamPoint>& samples,
                               std::string provenance = {});

}  // namespace metriclab
