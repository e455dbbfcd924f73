#pragma once

#include <stdexcept>
#include <string>

#include "metriclab/geometry.hpp"
#include "metriclab/metric_model.hpp"

namespace metriclab {

enum class Stencil { Eight, Sixteen };

/// Uniform discretization of a parameter rectangle. Along a non-periodic axis
/// the n nodes include both endpoints (spacing = extent/(n-1)); along a
/// periodic axis the n nodes tile the circle (spacing = extent/n). A pole
/// flag collapses the corresponding u-row to a single vertex appended after
/// the regular lattice.
struct Grid {
  Rect rect;
  int nu = 0;
  int nv = 0;
  bool periodic_u = false;
  bool periodic_v = false;
  Stencil stencil = Stencil::Sixteen;
  bool pole_umin = false;
  bool pole_umax = false;

  /// Grid over the full model domain; periodicity and pole flags are taken
  /// from the model.
  static Grid over(const MetricModel& model, int nu, int nv,
                   Stencil stencil = Stencil::Sixteen);

  /// Non-periodic grid over a sub-rectangle of the model domain.
  static Grid window(Rect rect, int nu, int nv,
                     Stencil stencil = Stencil::Sixteen);

  double du() const { return rect.width() / (periodic_u ? nu : nu - 1); }
  double dv() const { return rect.height() / (periodic_v ? nv : nv - 1); }

  int row_begin() const { return pole_umin ? 1 : 0; }
  int row_end() const { return pole_umax ? nu - 1 : nu; }
  int regular_rows() const { return row_end() - row_begin(); }
  int node_count() const {
    return regular_rows() * nv + (pole_umin ? 1 : 0) + (pole_umax ? 1 : 0);
  }
  int pole_min_id() const { return regular_rows() * nv; }
  int pole_max_id() const {
    return regular_rows() * nv + (pole_umin ? 1 : 0);
  }

  bool is_pole_row(int i) const {
    return (pole_umin && i == 0) || (pole_umax && i == nu - 1);
  }

  /// Node id for lattice coordinates; pole rows map to their pole vertex.
  int node_id(int i, int j) const {
    if (pole_umin && i == 0) return pole_min_id();
    if (pole_umax && i == nu - 1) return pole_max_id();
    return (i - row_begin()) * nv + j;
  }

  ParamPoint point(int i, int j) const {
    return {rect.u0 + i * du(), rect.v0 + j * dv()};
  }

  ParamPoint node_point(int id) const;

  /// Nearest node to p (periodic axes wrap). Throws if p is outside a
  /// non-periodic extent by more than half a cell.
  int snap(const ParamPoint& p) const;

  /// Lattice quadrature weight of a node (trapezoid along each non-periodic
  /// axis, uniform along periodic axes); poles carry weight 0.
  double node_weight(int id) const;

  std::string describe() const;

  void validate() const;
};

}  // namespace metriclab
