#pragma once

#include <map>
#include <string>
#include <vector>

#include "metriclab/grid.hpp"

namespace metriclab {

/// Configuration of a named experiment. Zero-valued grid/pair fields mean
/// "use the experiment's default". Parsed from a flat key=value text file
/// ('#' starts a comment); unknown keys are rejected.
///
/// Keys: experiment, j_list (comma separated), eta, h0, h, p, q,
///       nu, nv, grid (sets both), stencil (8|16), pairs, seed, out,
///       tol_<quantity> (tolerance override for matching report rows).
struct ExperimentConfig {
  std::string experiment;
  std::vector<int> j_list;
  double eta = 0.5;
  double h0 = 0.5;
  double h = 2.0;
  bool h_set = false;  // tiled heights default to h_j = j unless h is given
  double p = 1.0;
  double q = 2.0;
  int nu = 0;
  int nv = 0;
  Stencil stencil = Stencil::Sixteen;
  int pairs = 0;
  unsigned seed = 20240817;
  std::string out_dir = ".";
  std::map<std::string, double> tol;

  static ExperimentConfig from_file(const std::string& path);
  void set(const std::string& key, const std::string& value);
  void validate() const;

  /// Flattened view for the JSON config echo.
  std::map<std::string, std::string> echo() const;

  int nu_or(int fallback) const { return nu > 0 ? nu : fallback; }
  int nv_or(int fallback) const { return nv > 0 ? nv : fallback; }
  int pairs_or(int fallback) const { return pairs > 0 ? pairs : fallback; }
  std::vector<int> j_list_or(std::vector<int> fallback) const {
    return j_list.empty() ? fallback : j_list;
  }
};

}  // namespace metriclab
