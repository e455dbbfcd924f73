#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "metriclab/geodesic.hpp"

namespace metriclab {

/// sup over sampled pairs of |d1 - d2|. Both matrices must tabulate the
/// same sample list. Pure; a metric on distance matrices over a fixed set.
double uniform_distance(const DistanceMatrix& d1, const DistanceMatrix& d2);

/// Gromov-Hausdorff upper bound via the identity correspondence:
/// d_GH <= uniform_distance / 2.
double gh_upper_bound(const DistanceMatrix& d1, const DistanceMatrix& d2);

/// Sampled Holder/Lipschitz constants between two distance functions:
///   lambda_hat = max over distinct pairs of d_j / d_0^alpha
///   c_hat      = min over distinct pairs of d_j / d_0
/// lambda_hat under-estimates the true sup (it is a sample lower bound of
/// lambda); the pair indices attaining each extreme are reported.
struct HolderFit {
  double alpha = 1.0;
  double lambda_hat = 0.0;
  double c_hat = 0.0;
  std::pair<int, int> argmax{-1, -1};
  std::pair<int, int> argmin{-1, -1};
};

HolderFit fit_holder(const DistanceMatrix& dj, const DistanceMatrix& d0,
                     double alpha);

/// Per-pair convergence diagnostics of a matrix sequence against a
/// reference: deviation |d_step - d_ref| for every pair and step, the sup
/// over pairs per step, and a flag per pair telling whether the deviation is
/// nonincreasing over the tail (second half) of the sequence.
struct ConvergenceReport {
  std::vector<std::pair<int, int>> pairs;
  Eigen::MatrixXd deviations;  // steps x pairs
  std::vector<double> sup_deviation;
  std::vector<bool> monotone_tail;

  bool all_monotone() const;
};

ConvergenceReport pointwise_convergence_report(
    const std::vector<DistanceMatrix>& sequence, const DistanceMatrix& ref);

}  // namespace metriclab
