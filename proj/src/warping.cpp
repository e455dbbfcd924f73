#include "metriclab/warping.hpp"

#include <cmath>
#include <stdexcept>

namespace metriclab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double smoothstep(double x) { return x * x * (3.0 - 2.0 * x); }

// Cubic Hermite on [a,b] with values p0,p1 and slopes m0,m1 at the ends.
double hermite(double a, double b, double p0, double m0, double p1, double m1,
               double u) {
  const double h = b - a;
  const double t = (u - a) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * p0 + (t3 - 2 * t2 + t) * h * m0 +
         (-2 * t3 + 3 * t2) * p1 + (t3 - t2) * h * m1;
}

// Limit profile of the cusp family: sin on [0,pi/2], (4/pi^2)(u-pi)^2 on
// [3pi/4,pi], Hermite join between.
double cusp_profile(double u) {
  if (u <= 0.5 * kPi) return std::sin(u);
  if (u >= 0.75 * kPi) return 4.0 / (kPi * kPi) * (u - kPi) * (u - kPi);
  return hermite(0.5 * kPi, 0.75 * kPi, 1.0, 0.0, 0.25, -2.0 / kPi, u);
}

// Limit profile of the cone family: sin on [0,pi/2], -(2/pi)(u-pi) on
// [3pi/4,pi], Hermite join between.
double cone_profile(double u) {
  if (u <= 0.5 * kPi) return std::sin(u);
  if (u >= 0.75 * kPi) return -2.0 / kPi * (u - kPi);
  return hermite(0.5 * kPi, 0.75 * kPi, 1.0, 0.0, 0.5, -2.0 / kPi, u);
}

}  // namespace

WarpingFunction WarpingFunction::constant(double c, double a, double b) {
  if (c <= 0.0) throw std::invalid_argument("constant warping must be > 0");
  WarpingFunction f;
  f.family_ = Family::Constant;
  f.c_ = c;
  f.a_ = a;
  f.b_ = b;
  return f;
}

WarpingFunction WarpingFunction::nonuniform(int j, double eta) {
  if (j < 1) throw std::invalid_argument("nonuniform: j >= 1 required");
  if (eta <= 0.0 || eta >= 1.0)
    throw std::invalid_argument("nonuniform: eta in (0,1) required");
  WarpingFunction f;
  f.family_ = Family::NonUniform;
  f.j_ = j;
  f.eta_ = eta;
  f.a_ = -1.0;
  f.b_ = 1.0;
  return f;
}

WarpingFunction WarpingFunction::cusp(int j) {
  if (j < 1) throw std::invalid_argument("cusp: j >= 1 required");
  WarpingFunction f;
  f.family_ = Family::Cusp;
  f.j_ = j;
  f.inv_j_ = 1.0 / j;
  f.a_ = 0.0;
  f.b_ = kPi;
  return f;
}

WarpingFunction WarpingFunction::cusp_limit() {
  WarpingFunction f = cusp(1);
  f.j_ = 0;
  f.inv_j_ = 0.0;
  return f;
}

WarpingFunction WarpingFunction::cone(int j) {
  if (j < 1) throw std::invalid_argument("cone: j >= 1 required");
  WarpingFunction f;
  f.family_ = Family::Cone;
  f.j_ = j;
  f.inv_j_ = 1.0 / j;
  f.a_ = 0.0;
  f.b_ = kPi;
  return f;
}

WarpingFunction WarpingFunction::cone_limit() {
  WarpingFunction f = cone(1);
  f.j_ = 0;
  f.inv_j_ = 0.0;
  return f;
}

WarpingFunction WarpingFunction::cinch(int j, double h0) {
  if (j < 1) throw std::invalid_argument("cinch: j >= 1 required");
  if (h0 <= 0.0 || h0 > 1.0)
    throw std::invalid_argument("cinch: h0 in (0,1] required");
  WarpingFunction f;
  f.family_ = Family::Cinch;
  f.j_ = j;
  f.h0_ = h0;
  f.a_ = -kPi;
  f.b_ = kPi;
  return f;
}

double WarpingFunction::operator()(double u) const {
  if (u < a_ - 1e-9 || u > b_ + 1e-9)
    throw std::domain_error("warping evaluated outside its domain");
  switch (family_) {
    case Family::Constant:
      return c_;
    case Family::NonUniform: {
      const double t = j_ * u;
      if (std::abs(t) >= 1.0) return 1.0;
      const double amp = std::pow(double(j_), eta_);
      const double at = std::abs(t);
      if (at <= 0.5) return amp + 1.0;
      // wing: smoothstep from 1 at |t|=1 up to amp+1 at |t|=1/2
      return 1.0 + amp * smoothstep(2.0 * (1.0 - at));
    }
    case Family::Cusp:
      return inv_j_ * std::sin(u) + (1.0 - inv_j_) * cusp_profile(u);
    case Family::Cone:
      return inv_j_ * std::sin(u) + (1.0 - inv_j_) * cone_profile(u);
    case Family::Cinch: {
      const double t = j_ * u;
      if (std::abs(t) >= 1.0) return 1.0;
      const double at = std::abs(t);
      return h0_ + (1.0 - h0_) * (3.0 * t * t - 2.0 * at * at * at);
    }
  }
  return 1.0;
}

bool WarpingFunction::vanishes_at_min() const {
  return family_ == Family::Cusp || family_ == Family::Cone;
}

bool WarpingFunction::vanishes_at_max() const {
  return family_ == Family::Cusp || family_ == Family::Cone;
}

double WarpingFunction::min_value() const {
  switch (family_) {
    case Family::Constant:
      return c_;
    case Family::NonUniform:
      return 1.0;
    case Family::Cusp:
    case Family::Cone:
      return 0.0;
    case Family::Cinch:
      return h0_;
  }
  return 0.0;
}

double WarpingFunction::plateau_value() const {
  if (family_ != Family::NonUniform)
    throw std::logic_error("plateau_value: nonuniform family only");
  return std::pow(double(j_), eta_) + 1.0;
}

std::string WarpingFunction::describe() const {
  switch (family_) {
    case Family::Constant:
      return "constant(" + std::to_string(c_) + ")";
    case Family::NonUniform:
      return "nonuniform(j=" + std::to_string(j_) +
             ",eta=" + std::to_string(eta_) + ")";
    case Family::Cusp:
      return j_ == 0 ? "cusp(limit)" : "cusp(j=" + std::to_string(j_) + ")";
    case Family::Cone:
      return j_ == 0 ? "cone(limit)" : "cone(j=" + std::to_string(j_) + ")";
    case Family::Cinch:
      return "cinch(j=" + std::to_string(j_) + ",h0=" + std::to_string(h0_) +
             ")";
  }
  return "warping";
}

}  // namespace metriclab
