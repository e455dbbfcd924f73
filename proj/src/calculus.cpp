#include "metriclab/calculus.hpp"

#include <algorithm>

#include <Eigen/LU>
#include <cmath>
#include <random>
#include <stdexcept>

namespace metriclab {

namespace {

bool straddles_boundary(const MetricModel& model, const ParamPoint& c,
                        double hu, double hv) {
  if (model.kind() != MetricModel::Kind::Block &&
      model.kind() != MetricModel::Kind::Tiled)
    return false;
  auto key = [&](const ParamPoint& p) {
    auto tl = model.kind() == MetricModel::Kind::Tiled
                  ? model.tile_local(p).first
                  : Eigen::Vector2i(0, 0);
    return std::make_tuple(tl.x(), tl.y(), model.region_of(p));
  };
  const auto k0 = key({c.x() - 0.5 * hu, c.y() - 0.5 * hv});
  return key({c.x() + 0.5 * hu, c.y() - 0.5 * hv}) != k0 ||
         key({c.x() - 0.5 * hu, c.y() + 0.5 * hv}) != k0 ||
         key({c.x() + 0.5 * hu, c.y() + 0.5 * hv}) != k0;
}

}  // namespace

double integrate(const MetricModel& model, const Grid& grid,
                 const std::function<double(const ParamPoint&)>& fn) {
  const int ncu = grid.periodic_u ? grid.nu : grid.nu - 1;
  const int ncv = grid.periodic_v ? grid.nv : grid.nv - 1;
  const double hu = grid.rect.width() / ncu;
  const double hv = grid.rect.height() / ncv;
  double acc = 0.0;
  for (int i = 0; i < ncu; ++i) {
    for (int j = 0; j < ncv; ++j) {
      const ParamPoint c(grid.rect.u0 + (i + 0.5) * hu,
                         grid.rect.v0 + (j + 0.5) * hv);
      if (straddles_boundary(model, c, hu, hv)) {
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            const ParamPoint s(c.x() + (a - 0.5) * 0.5 * hu,
                               c.y() + (b - 0.5) * 0.5 * hv);
            acc += fn(s) * model.sqrt_det(s) * 0.25 * hu * hv;
          }
      } else {
        acc += fn(c) * model.sqrt_det(c) * hu * hv;
      }
    }
  }
  return acc;
}

double volume(const MetricModel& model, const Grid& grid) {
  return integrate(model, grid, [](const ParamPoint&) { return 1.0; });
}

double lp_norm(const MetricModel& model, const Grid& grid,
               const std::function<double(const ParamPoint&)>& fn, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p >= 1 required");
  const double val = integrate(
      model, grid, [&](const ParamPoint& q) { return std::pow(std::abs(fn(q)), p); });
  return std::pow(val, 1.0 / p);
}

double sobolev_w1p_norm(const ScalarField& field,
                        const MetricModel& background, double p) {
  if (p < 1.0) throw std::invalid_argument("sobolev_w1p_norm: p >= 1 required");
  const Grid& g = field.grid();
  double acc = 0.0;
  for (int i = g.row_begin(); i < g.row_end(); ++i) {
    for (int j = 0; j < g.nv; ++j) {
      const ParamPoint q = g.point(i, j);
      const double w = g.node_weight(g.node_id(i, j));
      const double mu = background.sqrt_det(q);
      const double u = field.at(i, j);
      const Vec2 du = field.gradient(i, j);
      // |grad u|_{g0}^2 = (du)^T G0^{-1} (du)
      const Eigen::Matrix2d Ginv = background.form_matrix(q).inverse();
      const double grad2 = du.dot(Ginv * du);
      acc += (std::pow(std::abs(u), p) + std::pow(std::sqrt(grad2), p)) * mu * w;
    }
  }
  return std::pow(acc, 1.0 / p);
}

double trace_integral(const ScalarField& field, const GeodesicPath& path,
                      double p) {
  if (p < 1.0) throw std::invalid_argument("trace_integral: p >= 1 required");
  if (path.node_ids.empty())
    throw std::invalid_argument("trace_integral: empty path");
  double acc = 0.0;
  for (size_t k = 0; k + 1 < path.node_ids.size(); ++k) {
    const double ds = path.arclength[k + 1] - path.arclength[k];
    const double f0 = std::pow(std::abs(field.value(path.node_ids[k])), p);
    const double f1 = std::pow(std::abs(field.value(path.node_ids[k + 1])), p);
    acc += 0.5 * (f0 + f1) * ds;
  }
  return std::pow(acc, 1.0 / p);
}

TraceRatioResult trace_ratio_test(const MetricModel& background,
                                  const Grid& grid, double p, int field_count,
                                  int path_count, unsigned seed) {
  if (field_count < 1 || path_count < 1)
    throw std::invalid_argument("trace_ratio_test: counts >= 1 required");
  const GridGraph graph = build_graph(background, grid);

  // Sampled geodesics: a few sources, several targets each. Pairs are drawn
  // in the continuum and snapped, so refined grids see the same pairs.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uu(grid.rect.u0, grid.rect.u1);
  std::uniform_real_distribution<double> vv(grid.rect.v0, grid.rect.v1);
  const int per_source = 10;
  const int n_sources = (path_count + per_source - 1) / per_source;
  std::vector<GeodesicPath> paths;
  paths.reserve(path_count);
  for (int s = 0; s < n_sources && int(paths.size()) < path_count; ++s) {
    const ParamPoint src(uu(rng), vv(rng));
    const DistanceField f = single_source(graph, src);
    for (int t = 0; t < per_source && int(paths.size()) < path_count; ++t) {
      const ParamPoint dst(uu(rng), vv(rng));
      if (grid.snap(dst) == f.source) continue;
      paths.push_back(geodesic_path(f, dst));
    }
  }

  TraceRatioResult out;
  for (int k = 0; k < field_count; ++k) {
    unsigned fseed = seed + 1000 * (k + 1);
    ScalarField field = ScalarField::band_limited_random(grid, 8, fseed);
    double norm = sobolev_w1p_norm(field, background, p);
    while (norm < 1e-12) {  // degenerate draw: resample
      fseed += 1;
      field = ScalarField::band_limited_random(grid, 8, fseed);
      norm = sobolev_w1p_norm(field, background, p);
    }
    double best = 0.0;
    for (const auto& path : paths)
      best = std::max(best, trace_integral(field, path, p));
    const double ratio = best / norm;
    out.fields.push_back({fseed, norm, best, ratio});
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

DensityEstimate density_estimate(const MetricModel& model, const Grid& grid,
                                 const ParamPoint& center,
                                 std::vector<double> radii) {
  std::sort(radii.begin(), radii.end(), std::greater<double>());
  const double diam_cap = grid.rect.width() + grid.rect.height();
  for (double r : radii) {
    if (r <= 0.0) throw std::invalid_argument("density_estimate: radius <= 0");
    if (r > diam_cap)
      throw std::invalid_argument("density_estimate: radius exceeds domain");
  }
  const GridGraph graph = build_graph(model, grid);
  const DistanceField f = single_source(graph, center);

  DensityEstimate est;
  est.center = graph.points[f.source];
  est.radii = radii;
  for (double r : radii) {
    double vol = 0.0;
    for (int id = 0; id < graph.size(); ++id) {
      if (f.dist[id] < r)
        vol += model.sqrt_det(graph.points[id]) * grid.node_weight(id);
    }
    est.ratios.push_back(vol / (r * r));
  }
  return est;
}

}  // namespace metriclab
