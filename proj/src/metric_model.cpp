#include "metriclab/metric_model.hpp"

#include <cmath>

#include <Eigen/LU>
#include <stdexcept>

namespace metriclab {

namespace {
constexpr double kPi = 3.14159265358979323846;

BlockRegion classify(const ParamPoint& p) {
  const double x = p.x(), y = p.y();
  if (x >= 0.25 && x <= 0.75 && y >= 0.25 && y <= 0.75)
    return BlockRegion::Top;
  if (x <= y && y <= 1.0 - x) return BlockRegion::Left;
  if (1.0 - x <= y && y <= x) return BlockRegion::Right;
  if (y <= x && x <= 1.0 - y) return BlockRegion::Front;
  return BlockRegion::Back;
}

}  // namespace

Eigen::Matrix2d chart_pullback_jacobian(BlockRegion r, const ParamPoint& p,
                                        double h) {
  const double x = p.x(), y = p.y();
  Eigen::Matrix2d J;
  switch (r) {
    case BlockRegion::Top:
      J << 2.0, 0.0, 0.0, 2.0;
      return J;
    case BlockRegion::Left: {
      const double d = 1.0 - 2.0 * x;
      J << 4.0 * h, 0.0, (2.0 * y - 1.0) / (d * d), 1.0 / d;
      return J;
    }
    case BlockRegion::Right: {
      const double d = 1.0 - 2.0 * x;
      J << -4.0 * h, 0.0, (2.0 * y - 1.0) / (d * d), 1.0 / d;
      return J;
    }
    case BlockRegion::Front: {
      const double d = 1.0 - 2.0 * y;
      J << 1.0 / d, (2.0 * x - 1.0) / (d * d), 0.0, 4.0 * h;
      return J;
    }
    case BlockRegion::Back: {
      const double d = 1.0 - 2.0 * y;
      J << 1.0 / d, (2.0 * x - 1.0) / (d * d), 0.0, -4.0 * h;
      return J;
    }
  }
  J.setIdentity();
  return J;
}

ParamPoint chart_pullback(BlockRegion r, const ParamPoint& p, double h) {
  const double x = p.x(), y = p.y();
  switch (r) {
    case BlockRegion::Top:
      return {2.0 * x - 0.5, 2.0 * y - 0.5};
    case BlockRegion::Left:
      return {4.0 * h * x, (y - x) / (1.0 - 2.0 * x)};
    case BlockRegion::Right:
      return {4.0 * h * (1.0 - x), (y - x) / (1.0 - 2.0 * x)};
    case BlockRegion::Front:
      return {(x - y) / (1.0 - 2.0 * y), 4.0 * h * y};
    case BlockRegion::Back:
      return {(x - y) / (1.0 - 2.0 * y), 4.0 * h * (1.0 - y)};
  }
  return p;
}

const char* to_string(BlockRegion r) {
  switch (r) {
    case BlockRegion::Top:
      return "top";
    case BlockRegion::Left:
      return "left";
    case BlockRegion::Right:
      return "right";
    case BlockRegion::Front:
      return "front";
    case BlockRegion::Back:
      return "back";
  }
  return "?";
}

MetricModel MetricModel::flat(Rect rect, bool periodic_u, bool periodic_v) {
  MetricModel m;
  m.kind_ = Kind::Flat;
  m.rect_ = rect;
  m.periodic_u_ = periodic_u;
  m.periodic_v_ = periodic_v;
  return m;
}

MetricModel MetricModel::warped(WarpingFunction f, bool periodic_u) {
  MetricModel m;
  m.kind_ = Kind::Warped;
  m.rect_ = Rect{f.domain_min(), f.domain_max(), 0.0, 2.0 * kPi};
  m.periodic_u_ = periodic_u;
  m.periodic_v_ = true;
  m.pole_umin_ = !periodic_u && f.vanishes_at_min();
  m.pole_umax_ = !periodic_u && f.vanishes_at_max();
  m.warping_ = std::move(f);
  return m;
}

MetricModel MetricModel::block(double h) {
  if (h <= 1.0) throw std::invalid_argument("block: h > 1 required");
  MetricModel m;
  m.kind_ = Kind::Block;
  m.rect_ = unit_square();
  m.h_ = h;
  return m;
}

MetricModel MetricModel::tiled(int j, double h) {
  if (j < 1) throw std::invalid_argument("tiled: j >= 1 required");
  if (h <= 1.0) throw std::invalid_argument("tiled: h > 1 required");
  MetricModel m;
  m.kind_ = Kind::Tiled;
  m.rect_ = unit_square();
  m.h_ = h;
  m.tile_j_ = j;
  return m;
}

bool MetricModel::contains(const ParamPoint& p) const {
  ParamPoint q = p;
  if (periodic_u_) q.x() = wrap_periodic(q.x(), rect_.u0, rect_.width());
  if (periodic_v_) q.y() = wrap_periodic(q.y(), rect_.v0, rect_.height());
  return rect_.contains(q);
}

bool MetricModel::is_pole(const ParamPoint& p) const {
  if (!pole_umin_ && !pole_umax_) return false;
  const double eps = 1e-12 * std::max(1.0, std::abs(rect_.width()));
  if (pole_umin_ && std::abs(p.x() - rect_.u0) <= eps) return true;
  if (pole_umax_ && std::abs(p.x() - rect_.u1) <= eps) return true;
  return false;
}

double MetricModel::warped_f(double u) const {
  if (periodic_u_) u = wrap_periodic(u, rect_.u0, rect_.width());
  return warping_(u);
}

double MetricModel::form(const ParamPoint& p, const Vec2& w) const {
  if (!contains(p)) throw std::domain_error("form: point outside domain");
  switch (kind_) {
    case Kind::Flat:
      return w.squaredNorm();
    case Kind::Warped: {
      if (is_pole(p)) throw std::domain_error("form: degenerate at pole");
      const double f = warped_f(p.x());
      return w.x() * w.x() + f * f * w.y() * w.y();
    }
    case Kind::Block: {
      const Eigen::Matrix2d J = chart_pullback_jacobian(region_of(p), p, h_);
      return (J * w).squaredNorm();
    }
    case Kind::Tiled: {
      // g = (1/2^j)^2 F* g_h tile by tile; DF scales vectors by 2^j.
      const double scale = 1.0 / tiles_per_axis();
      const ParamPoint local = tile_local(p).second;
      const Eigen::Matrix2d J =
          chart_pullback_jacobian(classify(local), local, h_);
      const Vec2 dw = w / scale;
      return scale * scale * (J * dw).squaredNorm();
    }
  }
  return 0.0;
}

Eigen::Matrix2d MetricModel::form_matrix(const ParamPoint& p) const {
  Eigen::Matrix2d G;
  switch (kind_) {
    case Kind::Flat:
      G.setIdentity();
      if (!contains(p)) throw std::domain_error("form: point outside domain");
      return G;
    case Kind::Warped: {
      if (!contains(p)) throw std::domain_error("form: point outside domain");
      if (is_pole(p)) throw std::domain_error("form: degenerate at pole");
      const double f = warped_f(p.x());
      G << 1.0, 0.0, 0.0, f * f;
      return G;
    }
    case Kind::Block:
    case Kind::Tiled: {
      if (!contains(p)) throw std::domain_error("form: point outside domain");
      ParamPoint q = p;
      if (kind_ == Kind::Tiled) q = tile_local(p).second;
      const Eigen::Matrix2d J = chart_pullback_jacobian(classify(q), q, h_);
      // For tiled kinds the (1/2^j)^2 prefactor cancels against DF exactly.
      return J.transpose() * J;
    }
  }
  return G;
}

double MetricModel::sqrt_det(const ParamPoint& p) const {
  switch (kind_) {
    case Kind::Flat:
      return 1.0;
    case Kind::Warped:
      if (is_pole(p)) return 0.0;
      return warped_f(p.x());
    case Kind::Block: {
      const Eigen::Matrix2d J = chart_pullback_jacobian(region_of(p), p, h_);
      return std::abs(J.determinant());
    }
    case Kind::Tiled: {
      const ParamPoint local = tile_local(p).second;
      const Eigen::Matrix2d J = chart_pullback_jacobian(classify(local), local, h_);
      return std::abs(J.determinant());
    }
  }
  return 1.0;
}

BlockRegion MetricModel::region_of(const ParamPoint& p) const {
  if (kind_ != Kind::Block && kind_ != Kind::Tiled)
    throw std::logic_error("region_of: block/tiled kinds only");
  if (!rect_.contains(p)) throw std::domain_error("region_of: outside [0,1]^2");
  return classify(kind_ == Kind::Tiled ? tile_local(p).second : p);
}

std::pair<BlockRegion, ParamPoint> MetricModel::pullback(
    const ParamPoint& p) const {
  ParamPoint q = p;
  if (kind_ == Kind::Tiled) q = tile_local(p).second;
  const BlockRegion r = region_of(p);
  return {r, chart_pullback(r, q, h_)};
}

std::pair<Eigen::Vector2i, ParamPoint> MetricModel::tile_local(
    const ParamPoint& p) const {
  const int n = tiles_per_axis();
  int l = std::min(int(std::floor(p.x() * n)), n - 1);
  int m = std::min(int(std::floor(p.y() * n)), n - 1);
  l = std::max(l, 0);
  m = std::max(m, 0);
  return {Eigen::Vector2i(l, m), ParamPoint(p.x() * n - l, p.y() * n - m)};
}

std::string MetricModel::describe() const {
  switch (kind_) {
    case Kind::Flat:
      return "flat";
    case Kind::Warped:
      return "warped[" + warping_.describe() + "]";
    case Kind::Block:
      return "block(h=" + std::to_string(h_) + ")";
    case Kind::Tiled:
      return "tiled(j=" + std::to_string(tile_j_) +
             ",h=" + std::to_string(h_) + ")";
  }
  return "model";
}

}  // namespace metriclab
