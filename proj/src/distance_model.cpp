#include "metriclab/distance_model.hpp"

#include <cmath>

namespace metriclab {

DistanceModel DistanceModel::taxi() {
  DistanceModel d;
  d.kind_ = Kind::Taxi;
  return d;
}

DistanceModel DistanceModel::power(int j) {
  if (j < 1) throw std::invalid_argument("power: j >= 1 required");
  DistanceModel d;
  d.kind_ = Kind::Power;
  d.j_ = j;
  return d;
}

DistanceModel DistanceModel::matrix(DistanceMatrix m) {
  DistanceModel d;
  d.kind_ = Kind::Matrix;
  d.matrix_ = std::move(m);
  return d;
}

double DistanceModel::operator()(const ParamPoint& p,
                                 const ParamPoint& q) const {
  switch (kind_) {
    case Kind::Taxi:
      return std::abs(p.x() - q.x()) + std::abs(p.y() - q.y());
    case Kind::Power: {
      if (p.x() < -1e-12 || p.x() > 1.0 + 1e-12 || q.x() < -1e-12 ||
          q.x() > 1.0 + 1e-12)
        throw std::domain_error("power metric: x outside [0,1]");
      const double s = std::abs(p.x() - q.x());
      return s == 0.0 ? 0.0 : std::pow(s, 1.0 / j_);
    }
    case Kind::Matrix: {
      auto find = [&](const ParamPoint& a) {
        for (int i = 0; i < matrix_.size(); ++i)
          if ((matrix_.samples[i] - a).norm() < 1e-9) return i;
        throw std::domain_error("matrix metric: point is not a sample");
      };
      return matrix_.values(find(p), find(q));
    }
  }
  return 0.0;
}

DistanceMatrix distance_matrix_from_model(
    const DistanceModel& model, const std::vector<ParamPoint>& samples) {
  if (samples.empty())
    throw std::invalid_argument("distance_matrix_from_model: empty samples");
  const int n = int(samples.size());
  DistanceMatrix m;
  m.samples = samples;
  m.provenance = "closed-form";
  m.values = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = model(samples[i], samples[j]);
      m.values(i, j) = d;
      m.values(j, i) = d;
    }
  return m;
}

}  // namespace metriclab
