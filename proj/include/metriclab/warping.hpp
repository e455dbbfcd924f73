#pragma once

#include <string>

namespace metriclab {

/// Warping factor f of a warped-product metric g = du^2 + f(u)^2 dv^2.
///
/// Families:
///   constant    f == c on [a,b]
///   nonuniform  f_j = h_j(j u) on [-1/j,1/j], 1 elsewhere, on [-1,1]; the bump
///               h_j rises from 1 to the plateau value j^eta + 1 held on
///               [-1/(2j), 1/(2j)], via a C^1 smoothstep wing
///   cusp        f_j = (1/j) sin(u) + (1-1/j) fc(u) on [0,pi], where fc is
///               sin on [0,pi/2] and (4/pi^2)(u-pi)^2 on [3pi/4,pi], joined by
///               a cubic Hermite on (pi/2, 3pi/4); j = infinity gives fc itself
///   cone        as cusp but with the outer piece -(2/pi)(u-pi)
///   cinch       f_j = h(j u) on [-1/j,1/j], 1 elsewhere, on [-pi,pi]; the dip
///               h(t) = h0 + (1-h0)(3t^2 - 2|t|^3) has h(0)=h0, h(+-1)=1
///
/// All families are C^1 and strictly positive on the open domain; cusp/cone
/// vanish exactly at the sphere poles u in {0, pi}. Instances are immutable
/// and evaluation is pure.
class WarpingFunction {
 public:
  enum class Family { Constant, NonUniform, Cusp, Cone, Cinch };

  static WarpingFunction constant(double c, double a = -1.0, double b = 1.0);
  static WarpingFunction nonuniform(int j, double eta);
  static WarpingFunction cusp(int j);
  static WarpingFunction cusp_limit();
  static WarpingFunction cone(int j);
  static WarpingFunction cone_limit();
  static WarpingFunction cinch(int j, double h0);

  /// f(u). Throws std::domain_error outside [a,b].
  double operator()(double u) const;

  Family family() const { return family_; }
  double domain_min() const { return a_; }
  double domain_max() const { return b_; }
  /// True where f vanishes at the domain edge (sphere pole).
  bool vanishes_at_min() const;
  bool vanishes_at_max() const;
  /// Infimum of f over the open domain (0 for cusp/cone families).
  double min_value() const;
  double plateau_value() const;  // nonuniform: j^eta + 1

  int j() const { return j_; }
  double eta() const { return eta_; }
  double h0() const { return h0_; }

  std::string describe() const;

 private:
  WarpingFunction() = default;

  Family family_ = Family::Constant;
  double a_ = -1.0, b_ = 1.0;
  int j_ = 1;
  double eta_ = 0.0;
  double h0_ = 1.0;
  double c_ = 1.0;
  double inv_j_ = 0.0;  // cusp/cone: 1/j, 0 at the j->infinity limit
};

/// Free-function spelling of WarpingFunction::operator().
inline double warping_value(const WarpingFunction& f, double u) { return f(u); }

}  // namespace metriclab
