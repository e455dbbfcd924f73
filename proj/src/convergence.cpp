#include "metriclab/convergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace metriclab {

namespace {

void require_same_samples(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance matrices: sample counts differ");
  for (int i = 0; i < a.size(); ++i)
    if ((a.samples[i] - b.samples[i]).norm() > 1e-12)
      throw std::invalid_argument("distance matrices: sample sets differ");
}

}  // namespace

double uniform_distance(const DistanceMatrix& d1, const DistanceMatrix& d2) {
  require_same_samples(d1, d2);
  double sup = 0.0;
  for (int i = 0; i < d1.size(); ++i)
    for (int j = i + 1; j < d1.size(); ++j)
      sup = std::max(sup, std::abs(d1.values(i, j) - d2.values(i, j)));
  return sup;
}

double gh_upper_bound(const DistanceMatrix& d1, const DistanceMatrix& d2) {
  return 0.5 * uniform_distance(d1, d2);
}

HolderFit fit_holder(const DistanceMatrix& dj, const DistanceMatrix& d0,
                     double alpha) {
  require_same_samples(dj, d0);
  if (alpha <= 0.0 || alpha > 1.0)
    throw std::invalid_argument("fit_holder: alpha in (0,1] required");
  HolderFit fit;
  fit.alpha = alpha;
  fit.lambda_hat = 0.0;
  fit.c_hat = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dj.size(); ++i) {
    for (int j = i + 1; j < dj.size(); ++j) {
      const double base = d0.values(i, j);
      if (base <= 0.0)
        throw std::invalid_argument(
            "fit_holder: zero background distance between distinct samples");
      const double up = dj.values(i, j) / std::pow(base, alpha);
      const double low = dj.values(i, j) / base;
      if (up > fit.lambda_hat) {
        fit.lambda_hat = up;
        fit.argmax = {i, j};
      }
      if (low < fit.c_hat) {
        fit.c_hat = low;
        fit.argmin = {i, j};
      }
    }
  }
  return fit;
}

bool ConvergenceReport::all_monotone() const {
  for (bool m : monotone_tail)
    if (!m) return false;
  return true;
}

ConvergenceReport pointwise_convergence_report(
    const std::vector<DistanceMatrix>& sequence, const DistanceMatrix& ref) {
  if (sequence.empty())
    throw std::invalid_argument("pointwise_convergence_report: empty sequence");
  for (const auto& m : sequence) require_same_samples(m, ref);

  ConvergenceReport rep;
  const int n = ref.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rep.pairs.emplace_back(i, j);
  const int steps = int(sequence.size());
  const int npairs = int(rep.pairs.size());
  rep.deviations.resize(steps, npairs);
  rep.sup_deviation.assign(steps, 0.0);
  for (int s = 0; s < steps; ++s) {
    for (int k = 0; k < npairs; ++k) {
      auto [i, j] = rep.pairs[k];
      const double dev = std::abs(sequence[s].values(i, j) - ref.values(i, j));
      rep.deviations(s, k) = dev;
      rep.sup_deviation[s] = std::max(rep.sup_deviation[s], dev);
    }
  }
  rep.monotone_tail.assign(npairs, true);
  const int tail = steps / 2;
  for (int k = 0; k < npairs; ++k)
    for (int s = tail; s + 1 < steps; ++s)
      if (rep.deviations(s + 1, k) > rep.deviations(s, k) + 1e-12)
        rep.monotone_tail[k] = false;
  return rep;
}

}  // namespace metriclab
