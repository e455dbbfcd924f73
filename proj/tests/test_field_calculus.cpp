#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "metriclab/calculus.hpp"
#include "metriclab/field.hpp"

using namespace metriclab;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Composite Simpson oracle for 1-D integrals.
double simpson(const std::function<double(double)>& f, double a, double b,
               int n = 2048) {
  double acc = f(a) + f(b);
  for (int k = 1; k < n; ++k)
    acc += f(a + k * (b - a) / n) * (k % 2 ? 4.0 : 2.0);
  return acc * (b - a) / (3.0 * n);
}

}  // namespace

TEST_CASE("volume: flat, block, cylinder, additivity") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 129, 129, Stencil::Sixteen);
  CHECK(volume(flat, g) == doctest::Approx(1.0).epsilon(1e-10));

  const auto block = MetricModel::block(2.0);
  const Grid gb = Grid::over(block, 257, 257, Stencil::Sixteen);
  CHECK(volume(block, gb) == doctest::Approx(9.0).epsilon(0.01));

  const auto cyl = MetricModel::warped(WarpingFunction::constant(1.0));
  const Grid gc = Grid::over(cyl, 257, 64, Stencil::Sixteen);
  CHECK(volume(cyl, gc) == doctest::Approx(4.0 * kPi).epsilon(1e-6));

  // additivity over a 2x2 partition with aligned cells
  const auto m = MetricModel::warped(WarpingFunction::nonuniform(2, 0.5));
  const Grid whole = Grid::over(m, 257, 64, Stencil::Sixteen);
  const double vol = volume(m, whole);
  double parts = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Grid quarter = whole;
      quarter.rect = Rect{a == 0 ? -1.0 : 0.0, a == 0 ? 0.0 : 1.0,
                          b == 0 ? 0.0 : kPi, b == 0 ? kPi : 2.0 * kPi};
      quarter.nu = 129;
      quarter.nv = 33;
      quarter.periodic_u = quarter.periodic_v = false;
      parts += volume(m, quarter);
    }
  CHECK(parts == doctest::Approx(vol).epsilon(1e-10));
}

TEST_CASE("volume: tiled identity 1 + 4h resolved per tile") {
  for (int j : {1, 2}) {
    const double h = 2.0 + j;
    const auto m = MetricModel::tiled(j, h);
    const Grid g = Grid::over(m, 513, 513, Stencil::Sixteen);
    CHECK(volume(m, g) == doctest::Approx(1.0 + 4.0 * h).epsilon(0.01));
  }
  // depth and height vary independently of the identity
  const auto m = MetricModel::tiled(2, 3.0);
  const Grid g = Grid::over(m, 513, 513, Stencil::Sixteen);
  CHECK(volume(m, g) == doctest::Approx(13.0).epsilon(0.01));
}

TEST_CASE("warped volumes agree with the 1-D profile integral") {
  // volume = 2 pi int f_j dr; the closed form behind the volume reference
  // rows is checked here against composite Simpson on the bump profile.
  for (int j : {1, 3, 7}) {
    const double eta = 0.5;
    const auto f = WarpingFunction::nonuniform(j, eta);
    const double want =
        2.0 * kPi * simpson([&](double r) { return f(r); }, -1.0, 1.0, 4096);
    CHECK(4.0 * kPi + 3.0 * kPi * std::pow(double(j), eta - 1.0) ==
          doctest::Approx(want).epsilon(1e-8));
    const auto m = MetricModel::warped(f);
    const Grid g = Grid::over(m, 4097, 8, Stencil::Sixteen);
    CHECK(volume(m, g) == doctest::Approx(want).epsilon(1e-4));
  }
}

TEST_CASE("tensor_norm_field closed forms") {
  const auto m0 = MetricModel::warped(WarpingFunction::constant(1.0));
  const auto m3 = MetricModel::warped(WarpingFunction::constant(3.0));
  const Grid g = Grid::over(m0, 17, 16, Stencil::Sixteen);

  const ScalarField same = tensor_norm_field(m0, m0, g);
  CHECK(same.value(g.snap({0.5, 1.0})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

  const ScalarField f = tensor_norm_field(m3, m0, g);
  CHECK(f.value(g.snap({0.5, 1.0})) ==
        doctest::Approx(std::sqrt(82.0)).epsilon(1e-13));

  // independent oracle: eigenvalues of G0^{-1} Gj via the generalized solver
  const ParamPoint p(0.5, 1.0);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> es(
      m3.form_matrix(p), m0.form_matrix(p));
  const double want = std::sqrt(es.eigenvalues().array().square().sum());
  CHECK(f.value(g.snap(p)) == doctest::Approx(want).epsilon(1e-12));

  // nonuniform vs flat: sqrt(2) outside the bump, sqrt(1 + f^4) inside
  const auto mj = MetricModel::warped(WarpingFunction::nonuniform(2, 0.5));
  const auto base = MetricModel::warped(WarpingFunction::constant(1.0, -1, 1));
  const Grid gw = Grid::over(base, 65, 16, Stencil::Sixteen);
  const ScalarField tn = tensor_norm_field(mj, base, gw);
  CHECK(tn.value(gw.snap({0.75, 0.0})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  const double fj = std::sqrt(2.0) + 1.0;
  CHECK(tn.value(gw.snap({0.0, 0.0})) ==
        doctest::Approx(std::sqrt(1.0 + std::pow(fj, 4.0))).epsilon(1e-13));
}

TEST_CASE("sobolev_w1p_norm closed forms") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 129, 129, Stencil::Sixteen);

  const auto c = ScalarField::from_function(
      g, [](const ParamPoint&) { return 2.5; });
  CHECK(sobolev_w1p_norm(c, flat, 1.0) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(sobolev_w1p_norm(c, flat, 2.0) == doctest::Approx(2.5).epsilon(1e-12));

  // u = x on the unit square, p = 2: (int x^2 + 1)^(1/2) = sqrt(4/3)
  const auto u = ScalarField::from_function(
      g, [](const ParamPoint& p) { return p.x(); });
  CHECK(sobolev_w1p_norm(u, flat, 2.0) ==
        doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(0.01));

  // p = 1 is the plain W^{1,1} sum; hand-computed trapezoid oracle
  const Grid small = Grid::over(flat, 9, 9, Stencil::Sixteen);
  const auto v = ScalarField::from_function(
      small, [](const ParamPoint& p) { return p.x() * p.x(); });
  double oracle = 0.0;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const double x = i / 8.0;
      double w = (i == 0 || i == 8 ? 0.5 : 1.0) * (j == 0 || j == 8 ? 0.5 : 1.0);
      const Vec2 grad = v.gradient(i, j);
      oracle += (x * x + std::hypot(grad.x(), grad.y())) * w / 64.0;
    }
  CHECK(sobolev_w1p_norm(v, flat, 1.0) == doctest::Approx(oracle).epsilon(1e-12));

  CHECK_THROWS_AS(sobolev_w1p_norm(u, flat, 0.5), std::invalid_argument);
}

TEST_CASE("gradient order is near two on refinement") {
  const auto flat = MetricModel::flat();
  auto err = [&](int n) {
    const Grid g = Grid::over(flat, n, n, Stencil::Sixteen);
    const auto u = ScalarField::from_function(g, [](const ParamPoint& p) {
      return std::sin(2.0 * p.x() + 1.0) * std::cos(3.0 * p.y());
    });
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const ParamPoint p = g.point(i, j);
        const Vec2 want(2.0 * std::cos(2.0 * p.x() + 1.0) * std::cos(3.0 * p.y()),
                        -3.0 * std::sin(2.0 * p.x() + 1.0) *
                            std::sin(3.0 * p.y()));
        worst = std::max(worst, (u.gradient(i, j) - want).norm());
      }
    return worst;
  };
  const double order = std::log2(err(33) / err(65));
  CHECK(order >= 1.8);
}

TEST_CASE("trace_integral closed forms") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 65, 65, Stencil::Sixteen);
  const GridGraph graph = build_graph(flat, g);
  const DistanceField f = single_source(graph, {0.0, 0.0});
  const GeodesicPath path = geodesic_path(f, {1.0, 0.0});  // length 1

  const auto one = ScalarField::from_function(
      g, [](const ParamPoint&) { return 1.0; });
  CHECK(trace_integral(one, path, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_integral(one, path, 2.0) == doctest::Approx(1.0).epsilon(1e-12));

  const DistanceField f2 = single_source(graph, {0.0, 0.5});
  const GeodesicPath half = geodesic_path(f2, {0.5, 0.5});  // length 1/2
  CHECK(trace_integral(one, half, 2.0) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  const auto xf = ScalarField::from_function(
      g, [](const ParamPoint& p) { return p.x(); });
  CHECK(trace_integral(xf, path, 1.0) == doctest::Approx(0.5).epsilon(0.01));

  GeodesicPath empty;
  CHECK_THROWS_AS(trace_integral(one, empty, 1.0), std::invalid_argument);
}

TEST_CASE("trace_ratio_test: constant-field identity and stability") {
  const auto flat = MetricModel::flat();
  // For constant fields the ratio is L_max^{1/p} / Vol^{1/p}; verify by
  // feeding the machinery a single-mode zero-frequency field via seeds is
  // fragile, so check the identity directly on the pieces instead.
  const Grid g = Grid::over(flat, 65, 65, Stencil::Sixteen);
  const GridGraph graph = build_graph(flat, g);
  const DistanceField f = single_source(graph, {0.0, 0.0});
  const GeodesicPath diag = geodesic_path(f, {1.0, 1.0});
  const auto c = ScalarField::from_function(
      g, [](const ParamPoint&) { return 0.7; });
  const double p = 1.0;
  const double ratio =
      trace_integral(c, diag, p) / sobolev_w1p_norm(c, flat, p);
  CHECK(ratio == doctest::Approx(diag.length() / 1.0).epsilon(1e-12));

  // the sampled max ratio is finite and refinement-stable
  double prev = 0.0;
  for (int n : {33, 65}) {
    const Grid gn = Grid::over(flat, n, n, Stencil::Sixteen);
    const auto res = trace_ratio_test(flat, gn, 1.0, 6, 30, 42);
    CHECK(std::isfinite(res.max_ratio));
    CHECK(res.max_ratio > 0.0);
    CHECK(int(res.fields.size()) == 6);
    if (prev > 0.0)
      CHECK(std::abs(res.max_ratio - prev) / prev <= 0.25);
    prev = res.max_ratio;
  }
}

TEST_CASE("density_estimate: flat disk, cone, cusp") {
  const auto flat = MetricModel::flat();
  const Grid g = Grid::over(flat, 513, 513, Stencil::Sixteen);
  const auto flat_est = density_estimate(flat, g, {0.5, 0.5}, {0.3, 0.2});
  CHECK(flat_est.ratios[1] == doctest::Approx(kPi).epsilon(0.05));

  const auto cone = MetricModel::warped(WarpingFunction::cone_limit());
  const Grid gc = Grid::over(cone, 2049, 16, Stencil::Sixteen);
  const auto cone_est =
      density_estimate(cone, gc, {kPi, 0.0}, {0.4, 0.2, 0.1});
  CHECK(cone_est.ratios[2] == doctest::Approx(2.0).epsilon(0.10));

  // oracle: near the pole vol(B(rho)) = 2 pi int_0^rho f(pi - s) ds
  auto conef = WarpingFunction::cone_limit();
  for (double rho : {0.4, 0.1}) {
    const double want =
        2.0 * kPi *
        simpson([&](double s) { return conef(kPi - s); }, 0.0, rho) /
        (rho * rho);
    CHECK(want == doctest::Approx(2.0).epsilon(1e-3));
  }

  const auto cusp = MetricModel::warped(WarpingFunction::cusp_limit());
  const auto cusp_est =
      density_estimate(cusp, gc, {kPi, 0.0}, {0.4, 0.2, 0.1});
  CHECK(cusp_est.ratios[2] / cusp_est.ratios[0] <= 0.5);
  // cusp oracle: vol(B(rho))/rho^2 ~ (8/(3 pi)) rho -> ratio(0.1)/ratio(0.4)
  // ~ 1/4
  CHECK(cusp_est.ratios[2] / cusp_est.ratios[0] ==
        doctest::Approx(0.25).epsilon(0.1));

  CHECK_THROWS_AS(density_estimate(flat, g, {0.5, 0.5}, {5.0}),
                  std::invalid_argument);
}

TEST_CASE("holder chain: d_j bounded by the trace of |g_j| along flat paths") {
  // d_j(q1,q2) <= (int_gamma |g_j|^p dt)^(1/p) * d_0(q1,q2)^((p-1)/p) along
  // the background geodesic gamma, evaluated with the computed trace.
  const auto mj = MetricModel::warped(WarpingFunction::nonuniform(2, 0.5));
  const auto m0 =
      MetricModel::warped(WarpingFunction::constant(1.0, -1.0, 1.0));
  const Grid g = Grid::over(m0, 129, 128, Stencil::Sixteen);
  const GridGraph graph_j = build_graph(mj, g);
  const GridGraph graph_0 = build_graph(m0, g);
  const ScalarField norm_field = tensor_norm_field(mj, m0, g);
  const double p = 2.0;

  const std::vector<std::pair<ParamPoint, ParamPoint>> pairs = {
      {{-0.7, 0.2}, {0.6, 1.0}},
      {{-0.3, 3.0}, {0.4, 3.5}},
      {{0.1, 5.0}, {0.9, 0.3}},
  };
  for (const auto& [a, b] : pairs) {
    const DistanceField fj = single_source(graph_j, a);
    const DistanceField f0 = single_source(graph_0, a);
    const GeodesicPath gamma = geodesic_path(f0, b);
    const double dj = fj.at(b);
    const double d0 = f0.at(b);
    const double trace = trace_integral(norm_field, gamma, p);
    CHECK(dj <= trace * std::pow(d0, (p - 1.0) / p) * 1.02);
  }
}
