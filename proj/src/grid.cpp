#include "metriclab/grid.hpp"

#include <cmath>

namespace metriclab {

Grid Grid::over(const MetricModel& model, int nu, int nv, Stencil stencil) {
  Grid g;
  g.rect = model.domain();
  g.nu = nu;
  g.nv = nv;
  g.periodic_u = model.periodic_u();
  g.periodic_v = model.periodic_v();
  g.stencil = stencil;
  g.pole_umin = model.pole_at_umin();
  g.pole_umax = model.pole_at_umax();
  g.validate();
  return g;
}

Grid Grid::window(Rect rect, int nu, int nv, Stencil stencil) {
  Grid g;
  g.rect = rect;
  g.nu = nu;
  g.nv = nv;
  g.stencil = stencil;
  g.validate();
  return g;
}

void Grid::validate() const {
  if (nu < 8 || nv < 8) throw std::invalid_argument("grid: nu, nv >= 8");
  if (rect.width() <= 0 || rect.height() <= 0)
    throw std::invalid_argument("grid: empty rectangle");
  if ((pole_umin || pole_umax) && periodic_u)
    throw std::invalid_argument("grid: poles on a periodic axis");
}

ParamPoint Grid::node_point(int id) const {
  if (pole_umin && id == pole_min_id()) return point(0, 0);
  if (pole_umax && id == pole_max_id()) return point(nu - 1, 0);
  const int i = id / nv + row_begin();
  const int j = id % nv;
  return point(i, j);
}

int Grid::snap(const ParamPoint& p) const {
  double fu = (p.x() - rect.u0) / du();
  double fv = (p.y() - rect.v0) / dv();
  int i = int(std::lround(fu));
  int j = int(std::lround(fv));
  if (periodic_u) {
    i = ((i % nu) + nu) % nu;
  } else if (i < 0 || i > nu - 1) {
    throw std::domain_error("snap: point outside grid");
  }
  if (periodic_v) {
    j = ((j % nv) + nv) % nv;
  } else if (j < 0 || j > nv - 1) {
    throw std::domain_error("snap: point outside grid");
  }
  return node_id(i, j);
}

double Grid::node_weight(int id) const {
  if ((pole_umin && id == pole_min_id()) ||
      (pole_umax && id == pole_max_id()))
    return 0.0;
  const int i = id / nv + row_begin();
  const int j = id % nv;
  double wu = du(), wv = dv();
  if (!periodic_u && (i == 0 || i == nu - 1)) wu *= 0.5;
  if (!periodic_v && (j == 0 || j == nv - 1)) wv *= 0.5;
  return wu * wv;
}

std::string Grid::describe() const {
  std::string s = std::to_string(nu) + "x" + std::to_string(nv);
  s += stencil == Stencil::Sixteen ? "/16" : "/8";
  if (periodic_u) s += " per-u";
  if (periodic_v) s += " per-v";
  if (pole_umin || pole_umax) s += " poles";
  return s;
}

}  // namespace metriclab
