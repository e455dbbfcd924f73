#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "metriclab/geodesic.hpp"

using namespace metriclab;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Brute-force quadrature oracle for segment lengths: 64-point midpoint rule
// over the model form along the straight parameter segment.
double quadrature_length(const MetricModel& m, const ParamPoint& a,
                         const ParamPoint& b, int n = 64) {
  const Vec2 d = b - a;
  double acc = 0.0;
  for (int k = 0; k < n; ++k)
    acc += std::sqrt(m.form(a + (k + 0.5) / n * d, d)) / n;
  return acc;
}

}  // namespace

TEST_CASE("edge_length closed cases") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 11, 11, Stencil::Sixteen);
  CHECK(edge_length(flat, g, {0.0, 0.0}, {0.1, 0.0}) ==
        doctest::Approx(0.1).epsilon(1e-14));
  CHECK_THROWS_AS(edge_length(flat, g, {0.0, 0.0}, {0.5, 0.0}),
                  std::invalid_argument);

  const auto w3 = MetricModel::warped(WarpingFunction::constant(3.0));
  const Grid gw = Grid::over(w3, 9, 64, Stencil::Sixteen);
  const double dth = 2.0 * kPi / 64.0;
  CHECK(edge_length(w3, gw, {0.0, 0.0}, {0.0, dth}) ==
        doctest::Approx(3.0 * dth).epsilon(1e-13));
}

TEST_CASE("block segment lengths: exact chart chords vs quadrature") {
  const auto m = MetricModel::block(2.0);
  // x-run inside U_left at y = 1/2: pullback s goes 0 -> 4h/8 = 1, t stays.
  CHECK(segment_length(m, {0.0, 0.5}, {0.125, 0.5}) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(quadrature_length(m, {0.0, 0.5}, {0.125, 0.5}, 2048) ==
        doctest::Approx(1.0).epsilon(1e-6));

  // Boundary runs are Euclidean.
  CHECK(segment_length(m, {0.1, 0.0}, {0.4, 0.0}) ==
        doctest::Approx(0.3).epsilon(1e-13));

  // A segment crossing several charts: the split-chord length is a real
  // curve length, so it dominates no chart and stays near the quadrature
  // value of the same polyline family.
  const ParamPoint a{0.05, 0.5}, b{0.95, 0.5};
  const double split = segment_length(m, a, b);
  CHECK(split > 0.0);
  // crossing the box wall twice costs at least 2h
  CHECK(split >= 2.0 * 2.0);
}

TEST_CASE("tiled segment scaling") {
  const auto block = MetricModel::block(3.0);
  const auto tiled = MetricModel::tiled(2, 3.0);
  // a segment within one tile maps to a block segment at 4x coordinates
  const ParamPoint a{0.05, 0.10}, b{0.20, 0.15};
  const double want =
      segment_length(block, {0.2, 0.4}, {0.8, 0.6}) / 4.0;
  CHECK(segment_length(tiled, a, b) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("single_source on the flat square") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 65, 65, Stencil::Sixteen);
  const DistanceField f = single_source(flat, g, {0.0, 0.0});
  const double d11 = f.at({1.0, 1.0});
  CHECK(d11 >= std::sqrt(2.0) - 1e-12);
  CHECK(d11 <= 1.03 * std::sqrt(2.0));
  CHECK(f.at({1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("flat cylinder wraps around") {
  const auto cyl =
      MetricModel::warped(WarpingFunction::constant(1.0, -1.0, 1.0));
  const Grid g = Grid::over(cyl, 33, 128, Stencil::Sixteen);
  const DistanceField f = single_source(cyl, g, {0.0, 0.0});
  CHECK(f.at({0.0, 1.5 * kPi}) ==
        doctest::Approx(0.5 * kPi).epsilon(1e-12));
}

TEST_CASE("nonuniform critical pair reproduces the plateau length") {
  const int j = 2;
  const auto m = MetricModel::warped(WarpingFunction::nonuniform(j, 0.5));
  const double W = 1.0 / (4.0 * j);
  const Grid win = Grid::window(Rect{-W, W, -W, W}, 129, 129,
                                Stencil::Sixteen);
  const ParamPoint p(-1.0 / 32.0, 0.0), q(1.0 / 32.0, 1.0 / 32.0);
  const DistanceField f = single_source(m, win, p);
  const double want = std::sqrt(2.0 + 2.0 * std::sqrt(2.0) + 5.0) / 32.0;
  CHECK(f.at(q) == doctest::Approx(want).epsilon(0.03));

  // the geodesic stays in the plateau band
  const GeodesicPath path = geodesic_path(f, q);
  for (const auto& pt : path.points)
    CHECK(std::abs(pt.x()) <= 1.0 / 32.0 + 2.0 * win.du());
  CHECK(path.length() == f.at(q));  // arclength is read off the field
  CHECK(path.arclength.front() == 0.0);
  for (size_t k = 1; k < path.arclength.size(); ++k)
    CHECK(path.arclength[k] >= path.arclength[k - 1]);
}

TEST_CASE("geodesic paths: straight line and degenerate target") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 33, 33, Stencil::Sixteen);
  const GridGraph graph = build_graph(flat, g);
  const DistanceField f = single_source(graph, {0.0, 0.0});
  const GeodesicPath line = geodesic_path(f, {1.0, 0.0});
  CHECK(line.length() == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& pt : line.points) CHECK(pt.y() == 0.0);

  const GeodesicPath self = geodesic_path(f, {0.0, 0.0});
  CHECK(self.node_ids.size() == 1);
  CHECK(self.length() == 0.0);
}

TEST_CASE("distance matrices: axioms, corners, domination") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 33, 33, Stencil::Sixteen);
  std::vector<ParamPoint> corners = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const DistanceMatrix dm = distance_matrix(flat, g, corners);
  CHECK(dm.metric_axioms_ok());
  CHECK(dm.values(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dm.values(0, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dm.values(0, 3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dm.values(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // one sample -> 1x1 zero matrix
  const DistanceMatrix one = distance_matrix(flat, g, {{0.5, 0.5}});
  CHECK(one.size() == 1);
  CHECK(one.values(0, 0) == 0.0);

  // f_j >= 1 dominates f == 1 edge-wise, hence in every distance
  const auto mj = MetricModel::warped(WarpingFunction::nonuniform(2, 0.5));
  const auto m0 =
      MetricModel::warped(WarpingFunction::constant(1.0, -1.0, 1.0));
  const Grid gw = Grid::over(mj, 65, 64, Stencil::Sixteen);
  std::vector<ParamPoint> pts = {{-0.8, 0.1}, {0.0, 1.0}, {0.7, 3.0},
                                 {-0.2, 5.0}, {0.3, 2.2}};
  const DistanceMatrix dj = distance_matrix(mj, gw, pts);
  const DistanceMatrix d0 = distance_matrix(m0, gw, pts);
  CHECK(dj.metric_axioms_ok());
  for (int a = 0; a < dj.size(); ++a)
    for (int b = 0; b < dj.size(); ++b)
      CHECK(dj.values(a, b) >= d0.values(a, b) * (1.0 - 1e-12));
}

TEST_CASE("refinement is monotone on nested grids") {
  const auto m = MetricModel::warped(WarpingFunction::cinch(2, 0.5), true);
  // endpoints are exact nodes of the coarsest grid, hence of every finer one
  const ParamPoint a(-kPi + 3.0 * kPi / 8.0, kPi / 4.0);
  const ParamPoint b(0.5 * kPi, kPi + kPi / 8.0);
  double prev_d = -1.0, prev_gap = -1.0;
  for (int n : {64, 128, 256}) {
    const Grid g = Grid::over(m, n, n, Stencil::Sixteen);
    const double d = single_source(m, g, a).at(b);
    if (prev_d >= 0.0) {
      CHECK(d <= prev_d + 1e-12);  // coarse paths embed in the fine graph
      const double gap = prev_d - d;
      if (prev_gap >= 0.0) CHECK(gap <= prev_gap + 1e-12);
      prev_gap = gap;
    }
    prev_d = d;
  }
}

TEST_CASE("pole handling is symmetric and resolution-stable") {
  const auto m = MetricModel::warped(WarpingFunction::cone_limit());
  const Grid g = Grid::over(m, 257, 24, Stencil::Sixteen);
  const DistanceField f = single_source(m, g, {kPi, 0.0});
  // rotational symmetry: same-latitude targets are equidistant
  const double dv = g.dv();
  const double d1 = f.at({0.5 * kPi, 4 * dv});
  const double d2 = f.at({0.5 * kPi, 11 * dv});
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
  // radial distance to a latitude row is exact
  CHECK(f.at({0.5 * kPi, 0.0}) == doctest::Approx(0.5 * kPi).epsilon(1e-12));
  // perturbing the fiber resolution barely moves pole distances
  const Grid g2 = Grid::over(m, 257, 40, Stencil::Sixteen);
  const DistanceField f2 = single_source(m, g2, {kPi, 0.0});
  CHECK(f2.at({0.5 * kPi, 0.0}) == doctest::Approx(d1).epsilon(1e-9));
  // paths cross the pole: antipodal-ish distance is about pi
  CHECK(f.at({0.0, kPi}) == doctest::Approx(kPi).epsilon(1e-6));
}

TEST_CASE("block boundary geodesics ride the boundary") {
  const auto m = MetricModel::block(2.0);
  const Grid g = Grid::over(m, 65, 65, Stencil::Sixteen);
  const GridGraph graph = build_graph(m, g);
  const DistanceField f = single_source(graph, {0.0, 0.0});
  // opposite corners: half the perimeter, along either pair of sides
  CHECK(f.at({1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.at({1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
  // the geodesic to the far corner never enters the lid
  const GeodesicPath path = geodesic_path(f, {1.0, 1.0});
  for (const auto& pt : path.points)
    CHECK(m.region_of(pt) != BlockRegion::Top);
}

TEST_CASE("8-neighbor stencil stays within its chordal bound") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 65, 65, Stencil::Eight);
  const DistanceField f = single_source(flat, g, {0.0, 0.0});
  CHECK(f.at({1.0, 1.0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // (2,1) direction: the 8-stencil overestimates by up to 1/cos(pi/8)
  const double d = f.at({1.0, 0.5});
  const double euclid = std::sqrt(1.25);
  CHECK(d >= euclid - 1e-12);
  CHECK(d <= euclid / std::cos(kPi / 8.0) + 1e-12);
}

TEST_CASE("graph build is deterministic") {
  const auto m = MetricModel::block(2.0);
  const Grid g = Grid::over(m, 33, 33, Stencil::Sixteen);
  const GridGraph g1 = build_graph(m, g);
  const GridGraph g2 = build_graph(m, g);
  REQUIRE(g1.weights.size() == g2.weights.size());
  for (size_t k = 0; k < g1.weights.size(); ++k)
    CHECK(g1.weights[k] == g2.weights[k]);
  const DistanceField f1 = single_source(g1, {0.2, 0.6});
  const DistanceField f2 = single_source(g2, {0.2, 0.6});
  CHECK((f1.dist - f2.dist).cwiseAbs().maxCoeff() == 0.0);
}
