#include "metriclab/reference.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace metriclab {

LambdaSearch holder_lambda_search(int j, double h_j, double alpha,
                                  int s_points) {
  if (alpha <= 0.0 || alpha > 1.0)
    throw std::invalid_argument("holder_lambda_search: alpha in (0,1]");
  if (s_points < 3)
    throw std::invalid_argument("holder_lambda_search: s_points >= 3");
  const double dj = ref::delta_j(j, h_j);

  std::vector<double> svals;
  svals.reserve(s_points + 2);
  for (int k = 1; k <= s_points; ++k)
    svals.push_back(2.0 * double(k) / s_points);
  if (h_j > 0.0) {
    const double kink = dj / h_j;
    if (kink > 0.0 && kink <= 2.0) svals.push_back(kink);
  }
  svals.push_back(2.0);
  std::sort(svals.begin(), svals.end());

  LambdaSearch out;
  out.kink_s = h_j > 0.0 ? dj / h_j : 0.0;
  for (double s : svals) {
    const double ratio = ref::tiled_envelope(s, h_j, dj) / std::pow(s, alpha);
    if (ratio > out.lambda) {
      out.lambda = ratio;
      out.s_argmax = s;
    }
  }
  if (out.kink_s > 0.0 && out.kink_s <= 2.0)
    out.kink_ratio = ref::tiled_envelope(out.kink_s, h_j, dj) /
                     std::pow(out.kink_s, alpha);
  out.bound_holds = true;
  for (double s : svals)
    if (ref::tiled_envelope(s, h_j, dj) >
        out.lambda * std::pow(s, alpha) * (1.0 + 1e-12)) {
      out.bound_holds = false;
      break;
    }
  return out;
}

}  // namespace metriclab
