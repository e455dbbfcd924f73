#include "metriclab/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace metriclab {

namespace {

// 4-point Gauss-Legendre on [0,1].
constexpr double kGaussX[4] = {0.069431844202973712, 0.330009478207571868,
                               0.669990521792428132, 0.930568155797026288};
constexpr double kGaussW[4] = {0.173927422568726929, 0.326072577431273071,
                               0.326072577431273071, 0.173927422568726929};

double gauss_length(const MetricModel& model, const ParamPoint& a,
                    const Vec2& d) {
  double acc = 0.0;
  for (int k = 0; k < 4; ++k)
    acc += kGaussW[k] * std::sqrt(model.form(a + kGaussX[k] * d, d));
  return acc;
}

// Crossing parameters of the segment a + t*d, t in (0,1), with the line
// c0*x + c1*y = c2.
void add_crossing(const ParamPoint& a, const Vec2& d, double c0, double c1,
                  double c2, std::vector<double>& out) {
  const double denom = c0 * d.x() + c1 * d.y();
  if (std::abs(denom) < 1e-15) return;
  const double t = (c2 - c0 * a.x() - c1 * a.y()) / denom;
  if (t > 1e-12 && t < 1.0 - 1e-12) out.push_back(t);
}

// Exact length of a straight segment in block([0,1]^2, h) coordinates:
// split at region boundaries, then each flat piece contributes the chord
// length of its endpoint pullbacks.
double block_segment_length(const MetricModel& block, const ParamPoint& a,
                            const ParamPoint& b) {
  const Vec2 d = b - a;
  std::vector<double> cuts;
  cuts.reserve(8);
  add_crossing(a, d, 1.0, 0.0, 0.25, cuts);
  add_crossing(a, d, 1.0, 0.0, 0.75, cuts);
  add_crossing(a, d, 0.0, 1.0, 0.25, cuts);
  add_crossing(a, d, 0.0, 1.0, 0.75, cuts);
  add_crossing(a, d, 1.0, -1.0, 0.0, cuts);  // y = x
  add_crossing(a, d, 1.0, 1.0, 1.0, cuts);   // y = 1 - x
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  double len = 0.0;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double t0 = cuts[k], t1 = cuts[k + 1];
    if (t1 - t0 < 1e-14) continue;
    const ParamPoint p0 = a + t0 * d, p1 = a + t1 * d;
    const BlockRegion r = block.region_of(a + 0.5 * (t0 + t1) * d);
    // Chart formulas extend continuously to each region's closure, so the
    // midpoint's region is valid at both piece endpoints.
    const double h = block.block_height();
    len += (chart_pullback(r, p1, h) - chart_pullback(r, p0, h)).norm();
  }
  return len;
}

double tiled_segment_length(const MetricModel& tiled, const ParamPoint& a,
                            const ParamPoint& b) {
  const int n = tiled.tiles_per_axis();
  const Vec2 d = b - a;
  std::vector<double> cuts;
  for (int k = 1; k < n; ++k) {
    add_crossing(a, d, 1.0, 0.0, double(k) / n, cuts);
    add_crossing(a, d, 0.0, 1.0, double(k) / n, cuts);
  }
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  const MetricModel block = MetricModel::block(tiled.block_height());
  double len = 0.0;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double t0 = cuts[k], t1 = cuts[k + 1];
    if (t1 - t0 < 1e-14) continue;
    const auto tile = tiled.tile_local(a + 0.5 * (t0 + t1) * d).first;
    const ParamPoint base(double(tile.x()) / n, double(tile.y()) / n);
    const ParamPoint p0 = (a + t0 * d - base) * n;
    const ParamPoint p1 = (a + t1 * d - base) * n;
    len += block_segment_length(block, p0, p1) / n;
  }
  return len;
}

}  // namespace

double segment_length(const MetricModel& model, const ParamPoint& a,
                      const ParamPoint& b) {
  if ((b - a).squaredNorm() == 0.0) return 0.0;
  switch (model.kind()) {
    case MetricModel::Kind::Flat:
      return (b - a).norm();
    case MetricModel::Kind::Warped: {
      const Vec2 d = b - a;
      if (d.y() == 0.0) return std::abs(d.x());  // radial: g_uu == 1
      return gauss_length(model, a, d);
    }
    case MetricModel::Kind::Block:
      return block_segment_length(model, a, b);
    case MetricModel::Kind::Tiled:
      return tiled_segment_length(model, a, b);
  }
  return 0.0;
}

namespace {

struct Displacement {
  int di, dj;
};

// Signed half-stencils; the reverse edges are added symmetrically.
const Displacement kEight[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
const Displacement kSixteen[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1},
                                 {2, 1}, {1, 2}, {2, -1}, {1, -2}};

}  // namespace

GridGraph build_graph(const MetricModel& model, const Grid& grid) {
  GridGraph g;
  g.grid = grid;
  const int n = grid.node_count();
  g.points.resize(n);
  for (int i = grid.row_begin(); i < grid.row_end(); ++i)
    for (int j = 0; j < grid.nv; ++j)
      g.points[grid.node_id(i, j)] = grid.point(i, j);
  if (grid.pole_umin) g.points[grid.pole_min_id()] = grid.point(0, 0);
  if (grid.pole_umax) g.points[grid.pole_max_id()] = grid.point(grid.nu - 1, 0);

  const Displacement* disp = kEight;
  int ndisp = 4;
  if (grid.stencil == Stencil::Sixteen) {
    disp = kSixteen;
    ndisp = 8;
  }

  std::vector<std::vector<std::pair<int, double>>> adj(n);
  auto add_edge = [&](int u, int v, double w) {
    adj[u].emplace_back(v, w);
    adj[v].emplace_back(u, w);
  };

  const double du = grid.du(), dv = grid.dv();
  for (int i = grid.row_begin(); i < grid.row_end(); ++i) {
    for (int j = 0; j < grid.nv; ++j) {
      const int id = grid.node_id(i, j);
      const ParamPoint p = grid.point(i, j);
      for (int k = 0; k < ndisp; ++k) {
        int ii = i + disp[k].di;
        int jj = j + disp[k].dj;
        if (grid.periodic_u)
          ii = ((ii % grid.nu) + grid.nu) % grid.nu;
        else if (ii < 0 || ii >= grid.nu)
          continue;
        if (grid.periodic_v)
          jj = ((jj % grid.nv) + grid.nv) % grid.nv;
        else if (jj < 0 || jj >= grid.nv)
          continue;
        if (grid.is_pole_row(ii)) continue;  // pole edges added below
        const ParamPoint q(p.x() + disp[k].di * du, p.y() + disp[k].dj * dv);
        add_edge(id, grid.node_id(ii, jj), segment_length(model, p, q));
      }
    }
  }
  // Poles join the adjacent row by radial edges of weight du (g_uu == 1).
  if (grid.pole_umin)
    for (int j = 0; j < grid.nv; ++j)
      add_edge(grid.pole_min_id(), grid.node_id(1, j), du);
  if (grid.pole_umax)
    for (int j = 0; j < grid.nv; ++j)
      add_edge(grid.pole_max_id(), grid.node_id(grid.nu - 2, j), du);

  g.offsets.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets[v + 1] = g.offsets[v] + int(adj[v].size());
  g.neighbors.resize(g.offsets[n]);
  g.weights.resize(g.offsets[n]);
  for (int v = 0; v < n; ++v) {
    int at = g.offsets[v];
    for (auto& [to, w] : adj[v]) {
      g.neighbors[at] = to;
      g.weights[at] = w;
      ++at;
    }
  }
  return g;
}

double edge_length(const MetricModel& model, const Grid& grid,
                   const ParamPoint& a, const ParamPoint& b) {
  const ParamPoint pa = grid.node_point(grid.snap(a));
  const ParamPoint pb = grid.node_point(grid.snap(b));
  double ddu = pb.x() - pa.x();
  double ddv = pb.y() - pa.y();
  if (grid.periodic_u) ddu = wrap_delta(pa.x(), pb.x(), grid.rect.width());
  if (grid.periodic_v) ddv = wrap_delta(pa.y(), pb.y(), grid.rect.height());
  const int di = int(std::lround(ddu / grid.du()));
  const int dj = int(std::lround(ddv / grid.dv()));
  const int adi = std::abs(di), adj = std::abs(dj);
  const int hi = std::max(adi, adj), lo = std::min(adi, adj);
  const bool in8 = hi == 1;
  const bool knight = hi == 2 && lo == 1;
  if (!(in8 || (grid.stencil == Stencil::Sixteen && knight)))
    throw std::invalid_argument("edge_length: nodes not stencil-adjacent");
  return segment_length(model, pa,
                        ParamPoint(pa.x() + di * grid.du(),
                                   pa.y() + dj * grid.dv()));
}

DistanceField single_source(const GridGraph& graph, const ParamPoint& source) {
  const int n = graph.size();
  DistanceField f;
  f.graph = &graph;
  f.source = graph.grid.snap(source);
  f.dist = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  f.pred.assign(n, -1);

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  f.dist[f.source] = 0.0;
  heap.emplace(0.0, f.source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > f.dist[u]) continue;
    for (int e = graph.offsets[u]; e < graph.offsets[u + 1]; ++e) {
      const int v = graph.neighbors[e];
      const double nd = d + graph.weights[e];
      if (nd < f.dist[v]) {
        f.dist[v] = nd;
        f.pred[v] = u;
        heap.emplace(nd, v);
      }
    }
  }
  return f;
}

DistanceField single_source(const MetricModel& model, const Grid& grid,
                            const ParamPoint& source) {
  auto graph = std::make_shared<GridGraph>(build_graph(model, grid));
  DistanceField f = single_source(*graph, source);
  f.owned = graph;
  f.graph = f.owned.get();
  return f;
}

DistanceField multi_source(const GridGraph& graph,
                           const std::vector<int>& seeds) {
  const int n = graph.size();
  DistanceField f;
  f.graph = &graph;
  f.dist = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  f.pred.assign(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (int s : seeds) {
    f.dist[s] = 0.0;
    heap.emplace(0.0, s);
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > f.dist[u]) continue;
    for (int e = graph.offsets[u]; e < graph.offsets[u + 1]; ++e) {
      const int v = graph.neighbors[e];
      const double nd = d + graph.weights[e];
      if (nd < f.dist[v]) {
        f.dist[v] = nd;
        f.pred[v] = u;
        heap.emplace(nd, v);
      }
    }
  }
  return f;
}

GeodesicPath geodesic_path(const DistanceField& field,
                           const ParamPoint& target) {
  const int t = field.graph->grid.snap(target);
  if (!std::isfinite(field.dist[t]))
    throw std::runtime_error("geodesic_path: target unreachable");
  GeodesicPath path;
  for (int v = t; v != -1; v = field.pred[v]) path.node_ids.push_back(v);
  std::reverse(path.node_ids.begin(), path.node_ids.end());
  path.points.reserve(path.node_ids.size());
  path.arclength.reserve(path.node_ids.size());
  for (int id : path.node_ids) {
    path.points.push_back(field.graph->points[id]);
    path.arclength.push_back(field.dist[id]);
  }
  return path;
}

bool DistanceMatrix::metric_axioms_ok(double eps, std::string* why) const {
  const int n = size();
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int i = 0; i < n; ++i) {
    if (values(i, i) != 0.0) return fail("nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(values(i, j))) return fail("non-finite entry");
      if (values(i, j) < 0.0) return fail("negative entry");
      if (values(i, j) != values(j, i)) return fail("asymmetric");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (values(i, k) > values(i, j) + values(j, k) + eps)
          return fail("triangle inequality violated");
  return true;
}

DistanceMatrix distance_matrix(const GridGraph& graph,
                               const std::vector<ParamPoint>& samples,
                               std::string provenance) {
  if (samples.empty())
    throw std::invalid_argument("distance_matrix: empty sample set");
  const int n = int(samples.size());
  DistanceMatrix m;
  m.provenance = std::move(provenance);
  m.samples.reserve(n);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = graph.grid.snap(samples[i]);
    m.samples.push_back(graph.points[ids[i]]);
  }
  m.values = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    const DistanceField f = single_source(graph, m.samples[i]);
    for (int j = i + 1; j < n; ++j) {
      const double d = f.dist[ids[j]];
      m.values(i, j) = d;
      m.values(j, i) = d;
    }
  }
  return m;
}

DistanceMatrix distance_matrix(const MetricModel& model, const Grid& grid,
                               const std::vector<ParamPoint>& samples) {
  const GridGraph g = build_graph(model, grid);
  return distance_matrix(g, samples,
                         model.describe() + " on " + grid.describe());
}

}  // namespace metriclab
