#pragma once

#include <cmath>

namespace metriclab::ref {

inline constexpr double kPi = 3.14159265358979323846;

// --- nonuniform warped family (critical pair p_j, q_j at scale 1/(8 j^2)) ---

/// Length of the plateau geodesic joining p_j and q_j:
/// sqrt(j^{2 eta} + 2 j^eta + 5) / (8 j^2).
inline double nonuniform_plateau_length(int j, double eta) {
  const double je = std::pow(double(j), eta);
  return std::sqrt(je * je + 2.0 * je + 5.0) / (8.0 * j * j);
}

/// Flat-cylinder distance of the same pair: (sqrt(5)/8) j^{-2}.
inline double nonuniform_flat_distance(int j) {
  return std::sqrt(5.0) / (8.0 * double(j) * j);
}

/// Lipschitz ratio of the pair: sqrt(j^{2 eta} + 2 j^eta + 5) / sqrt(5).
inline double nonuniform_pair_ratio(int j, double eta) {
  const double je = std::pow(double(j), eta);
  return std::sqrt(je * je + 2.0 * je + 5.0) / std::sqrt(5.0);
}

/// Exact volume of the C^1 bump profile used here:
/// 2 pi * (2 - 2/j + (2 + (3/2) j^eta)/j) = 4 pi + 3 pi j^{eta-1}.
inline double nonuniform_volume(int j, double eta) {
  return 4.0 * kPi + 3.0 * kPi * std::pow(double(j), eta - 1.0);
}

inline double nonuniform_volume_bound() { return 16.0 * kPi; }

// --- block / tiled family ---

inline double block_volume(double h) { return 1.0 + 4.0 * h; }

/// Every point lies within h + sqrt(2) of the boundary.
inline double block_boundary_reach(double h) { return h + std::sqrt(2.0); }

inline double tile_volume(int j, double h) {
  const double s = 1.0 / (1 << j);
  return s * s * (1.0 + 4.0 * h);
}

/// GH gap to the taxi square: delta_j = (1/2^j)(h_j + sqrt(2) + 1).
inline double delta_j(int j, double h) {
  return (h + std::sqrt(2.0) + 1.0) / (1 << j);
}

/// Distance envelope f_j(s) = min{(2+h)s, 2s + delta_j} of the tiled metric
/// against the background square.
inline double tiled_envelope(double s, double h, double dj) {
  return std::min((2.0 + h) * s, 2.0 * s + dj);
}

// --- misc closed forms ---

/// Power-metric sup deviation from the discrete metric over a sample with
/// minimum separation m: 1 - m^{1/j}.
inline double power_sup_deviation(int j, double min_separation) {
  return 1.0 - std::pow(min_separation, 1.0 / j);
}

/// Cone-limit density at the pole: vol(B(r))/r^2 -> pi * (2/pi) = 2.
inline double cone_pole_density() { return 2.0; }

/// Flat interior density: pi.
inline double flat_density() { return kPi; }

/// Cinched-circle distance between antipodal fiber points: h0 * pi.
inline double cinch_antipodal_distance(double h0) { return h0 * kPi; }

}  // namespace metriclab::ref

namespace metriclab {

/// Least lambda with f_j(s) <= lambda s^alpha on a dense s-grid over (0,2],
/// where f_j is the tiled distance envelope. The kink s = delta_j/h_j and
/// the endpoint s = 2 are placed on the grid exactly; the kink ratio is a
/// certified lower bound for lambda.
struct LambdaSearch {
  double lambda = 0.0;
  double s_argmax = 0.0;
  double kink_s = 0.0;
  double kink_ratio = 0.0;
  bool bound_holds = false;  // f_j <= lambda s^alpha on the whole grid
};

LambdaSearch holder_lambda_search(int j, double h_j, double alpha,
                                  int s_points = 10000);

}  // namespace metriclab
