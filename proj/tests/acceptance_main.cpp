// Acceptance suite: runs every named experiment at its default settings and
// grades thirteen criteria, one line each. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "metriclab/experiment.hpp"

using metriclab::ExperimentConfig;
using metriclab::ExperimentReport;
using metriclab::ReportRow;

namespace {

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = true;
  int rows = 0;
  std::vector<std::string> failures;
};

Criterion make_criterion(int id, std::string title = {}) {
  Criterion c;
  c.id = id;
  c.title = std::move(title);
  return c;
}

class Grader {
 public:
  void add_report(const ExperimentReport& rep) {
    for (const auto& r : rep.rows()) rows_.push_back(r);
  }

  // Fold every judged row of an experiment whose quantity matches one of the
  // given prefixes into a criterion.
  void grade(Criterion& c, const std::string& experiment,
             std::initializer_list<const char*> quantity_prefixes) {
    for (const auto& r : rows_) {
      if (r.experiment != experiment || !r.passed.has_value()) continue;
      bool match = false;
      for (const char* q : quantity_prefixes)
        if (r.quantity.rfind(q, 0) == 0) match = true;
      if (!match) continue;
      ++c.rows;
      if (!*r.passed) {
        c.pass = false;
        c.failures.push_back(r.experiment + "/" + r.case_label + "/" +
                             r.quantity);
      }
    }
    if (c.rows == 0) {
      c.pass = false;
      c.failures.push_back("no rows matched");
    }
  }

 private:
  std::vector<ReportRow> rows_;
};

}  // namespace

int main() {
  Grader grader;
  std::map<std::string, double> runtime;
  for (const auto& info : metriclab::list_experiments()) {
    ExperimentConfig cfg;
    cfg.experiment = info.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      grader.add_report(metriclab::run_experiment(cfg));
    } catch (const std::exception& e) {
      std::fprintf(stderr, "experiment %s threw: %s\n", info.name.c_str(),
                   e.what());
      return 99;
    }
    runtime[info.name] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::fprintf(stderr, "  ran %-22s %6.1fs\n", info.name.c_str(),
                 runtime[info.name]);
  }

  std::vector<Criterion> cs;

  cs.push_back(make_criterion(1, "flat exactness: graph/Euclidean ratio in [1.0, 1.03]"));
  grader.grade(cs.back(), "flat-check",
               {"ratio_to_euclidean", "wrap_distance_ratio", "volume",
                "edge_distance", "diagonal_distance"});
  if (runtime["flat-check"] >= 30.0) {
    cs.back().pass = false;
    cs.back().failures.push_back("runtime >= 30s");
  }

  cs.push_back(make_criterion(2, "warped bump critical-pair distances (3% at j=2, 5% at j=4)"));
  grader.grade(cs.back(), "nonuniform",
               {"critical_pair_distance", "flat_pair_distance"});

  cs.push_back(make_criterion(3, "warped bump ratio growth matches the closed form (5%)"));
  grader.grade(cs.back(), "nonuniform", {"pair_ratio", "holder_ratio"});

  cs.push_back(make_criterion(4, "warped bump volumes: <= 16 pi and 1e-6 consistency"));
  grader.grade(cs.back(), "nonuniform", {"volume", "volume_bound_16pi"});

  cs.push_back(make_criterion(5, "block metric: volume 1+4h, boundary geodesics, reach"));
  grader.grade(cs.back(), "blocks",
               {"volume", "boundary_pair_rel_err", "boundary_reach"});

  cs.push_back(make_criterion(6, "tiled metric: tile volumes, taxi lines, GH bound"));
  grader.grade(cs.back(), "tiled",
               {"tile_volume", "total_volume", "grid_line_taxi_rel_err",
                "grid_line_routed_rel_err", "gh_bound_vs_taxi"});

  cs.push_back(make_criterion(7, "envelope f_j(s) <= lambda_alpha s^alpha with kink candidate"));
  grader.grade(cs.back(), "holder-lambda",
               {"envelope_below_lambda_s_alpha", "lambda_vs_kink_candidate",
                "kink_bounded_when_admissible"});

  cs.push_back(make_criterion(8, "power metrics: exact sup deviation, pointwise collapse"));
  grader.grade(cs.back(), "power-holder",
               {"sup_deviation", "per_pair_deviation_monotone",
                "sup_deviation_floor"});

  cs.push_back(make_criterion(9, "density dichotomy: cone 2 (10%), cusp decay, flat pi (5%)"));
  grader.grade(cs.back(), "cone", {"cone_density"});
  {
    Criterion extra = make_criterion(9);
    grader.grade(extra, "cusp", {"cusp_density_decay"});
    Criterion extra2 = make_criterion(9);
    grader.grade(extra2, "flat-check", {"interior_density_ratio"});
    cs.back().rows += extra.rows + extra2.rows;
    if (!extra.pass || !extra2.pass) cs.back().pass = false;
    for (auto& f : extra.failures) cs.back().failures.push_back(f);
    for (auto& f : extra2.failures) cs.back().failures.push_back(f);
  }

  cs.push_back(make_criterion(10, "cinched torus: d = h0 pi (10%), lower bound fails"));
  grader.grade(cs.back(), "cinch",
               {"cinch_distance", "min_distance_ratio"});

  cs.push_back(make_criterion(11, "trace ratio finite and stable (25%) across refinement"));
  grader.grade(cs.back(), "trace",
               {"max_trace_ratio_finite", "max_ratio_rel_change"});

  cs.push_back(make_criterion(12, "log-distance field: trace grows >= 1.1x, L2 stable (2%)"));
  grader.grade(cs.back(), "trace-counterexample",
               {"trace_growth_factor", "l2_norm_rel_change"});

  cs.push_back(make_criterion(13, "metric axioms and domination on every emitted matrix"));
  for (const char* exp :
       {"flat-check", "nonuniform", "cinch", "blocks", "tiled"}) {
    Criterion part = make_criterion(13);
    grader.grade(part, exp, {"metric_axioms"});
    cs.back().rows += part.rows;
    if (!part.pass) cs.back().pass = false;
    for (auto& f : part.failures) cs.back().failures.push_back(f);
  }
  {
    Criterion dom = make_criterion(13);
    grader.grade(dom, "nonuniform", {"dominates_flat"});
    cs.back().rows += dom.rows;
    if (!dom.pass) cs.back().pass = false;
    for (auto& f : dom.failures) cs.back().failures.push_back(f);
  }

  int failures = 0;
  for (const auto& c : cs) {
    std::printf("[%2d] %s  %s (%d row%s)\n", c.id,
                c.pass ? "PASS" : "FAIL", c.title.c_str(), c.rows,
                c.rows == 1 ? "" : "s");
    if (!c.pass) {
      ++failures;
      for (const auto& f : c.failures)
        std::printf("      failed: %s\n", f.c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", int(cs.size()) - failures,
              cs.size());
  return failures;
}
