#pragma once

#include <stdexcept>
#include <vector>

#include "metriclab/geodesic.hpp"
#include "metriclab/geometry.hpp"

namespace metriclab {

/// A direct (closed-form or tabulated) distance function:
///   taxi    |x1-x2| + |y1-y2| on [0,1]^2
///   power   |x-y|^(1/j) on [0,1] (1-D; the v coordinate is ignored)
///   matrix  a DistanceMatrix, evaluable at its own sample points
class DistanceModel {
 public:
  enum class Kind { Taxi, Power, Matrix };

  static DistanceModel taxi();
  static DistanceModel power(int j);
  static DistanceModel matrix(DistanceMatrix m);

  Kind kind() const { return kind_; }
  int power_j() const { return j_; }
  const DistanceMatrix& table() const { return matrix_; }

  double operator()(const ParamPoint& p, const ParamPoint& q) const;

 private:
  DistanceModel() = default;
  Kind kind_ = Kind::Taxi;
  int j_ = 1;
  DistanceMatrix matrix_;
};

inline double eval_distance_model(const DistanceModel& d, const ParamPoint& p,
                                  const ParamPoint& q) {
  return d(p, q);
}

/// Tabulate a DistanceModel over an explicit sample list.
DistanceMatrix distance_matrix_from_model(const DistanceModel& model,
                                          const std::vector<ParamPoint>& samples);

}  // namespace metriclab
