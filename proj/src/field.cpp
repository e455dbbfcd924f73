#include "metriclab/field.hpp"

#include <cmath>

#include <Eigen/LU>
#include <random>
#include <stdexcept>

namespace metriclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ScalarField::ScalarField(Grid grid, Eigen::ArrayXd values)
    : grid_(grid), values_(std::move(values)) {
  if (int(values_.size()) != grid_.node_count())
    throw std::invalid_argument("ScalarField: value count != node count");
}

ScalarField ScalarField::from_function(
    const Grid& grid, const std::function<double(const ParamPoint&)>& f) {
  Eigen::ArrayXd vals = Eigen::ArrayXd::Zero(grid.node_count());
  for (int i = grid.row_begin(); i < grid.row_end(); ++i)
    for (int j = 0; j < grid.nv; ++j)
      vals[grid.node_id(i, j)] = f(grid.point(i, j));
  return ScalarField(grid, std::move(vals));
}

ScalarField ScalarField::band_limited_random(const Grid& grid, int max_mode,
                                             unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int K = max_mode;
  Eigen::MatrixXd coeff(K + 1, K + 1);
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= K; ++l) {
      const double mag = std::sqrt(double(k * k + l * l));
      const double sigma = std::pow(1.0 + mag, -1.5);
      coeff(k, l) = sigma * gauss(rng);
    }
  const Rect r = grid.rect;
  return from_function(grid, [=](const ParamPoint& p) {
    const double x = (p.x() - r.u0) / r.width();
    const double y = (p.y() - r.v0) / r.height();
    double acc = 0.0;
    for (int k = 0; k <= K; ++k)
      for (int l = 0; l <= K; ++l)
        acc += coeff(k, l) * std::cos(kPi * k * x) * std::cos(kPi * l * y);
    return acc;
  });
}

Vec2 ScalarField::gradient(int i, int j) const {
  const Grid& g = grid_;
  const double du = g.du(), dv = g.dv();
  auto val = [&](int ii, int jj) {
    if (g.periodic_u) ii = ((ii % g.nu) + g.nu) % g.nu;
    if (g.periodic_v) jj = ((jj % g.nv) + g.nv) % g.nv;
    return values_[g.node_id(ii, jj)];
  };
  double gu, gv;
  const int lo_u = g.row_begin(), hi_u = g.row_end() - 1;
  if (g.periodic_u) {
    gu = (val(i + 1, j) - val(i - 1, j)) / (2 * du);
  } else if (i == lo_u) {
    gu = (-3 * val(i, j) + 4 * val(i + 1, j) - val(i + 2, j)) / (2 * du);
  } else if (i == hi_u) {
    gu = (3 * val(i, j) - 4 * val(i - 1, j) + val(i - 2, j)) / (2 * du);
  } else {
    gu = (val(i + 1, j) - val(i - 1, j)) / (2 * du);
  }
  if (g.periodic_v) {
    gv = (val(i, j + 1) - val(i, j - 1)) / (2 * dv);
  } else if (j == 0) {
    gv = (-3 * val(i, j) + 4 * val(i, j + 1) - val(i, j + 2)) / (2 * dv);
  } else if (j == g.nv - 1) {
    gv = (3 * val(i, j) - 4 * val(i, j - 1) + val(i, j - 2)) / (2 * dv);
  } else {
    gv = (val(i, j + 1) - val(i, j - 1)) / (2 * dv);
  }
  return {gu, gv};
}

ScalarField tensor_norm_field(const MetricModel& model_j,
                              const MetricModel& model_0, const Grid& grid) {
  Eigen::ArrayXd vals = Eigen::ArrayXd::Zero(grid.node_count());
  for (int i = grid.row_begin(); i < grid.row_end(); ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const ParamPoint p = grid.point(i, j);
      const Eigen::Matrix2d M =
          model_0.form_matrix(p).inverse() * model_j.form_matrix(p);
      vals[grid.node_id(i, j)] = std::sqrt((M * M).trace());
    }
  return ScalarField(grid, std::move(vals));
}

}  // namespace metriclab
