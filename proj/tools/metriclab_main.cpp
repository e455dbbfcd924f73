#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "metriclab/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"metriclab: metric families, grid geodesics, and convergence "
               "experiments"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "enumerate the named experiments");

  std::string name, config_path, out_dir;
  int seed = -1, grid = 0;
  auto* run = app.add_subcommand("run", "run a named experiment");
  run->add_option("name", name, "experiment name (see `list`)")->required();
  run->add_option("--config", config_path, "key=value config file");
  run->add_option("--out", out_dir, "output directory for report.csv/json");
  run->add_option("--seed", seed, "random seed override");
  run->add_option("--grid", grid, "grid resolution override (nu = nv)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& e : metriclab::list_experiments())
        std::printf("%-22s %s\n", e.name.c_str(), e.summary.c_str());
      return 0;
    }

    metriclab::ExperimentConfig cfg;
    if (!config_path.empty())
      cfg = metriclab::ExperimentConfig::from_file(config_path);
    cfg.experiment = name;
    if (seed >= 0) cfg.seed = unsigned(seed);
    if (grid > 0) cfg.nu = cfg.nv = grid;
    if (!out_dir.empty()) cfg.out_dir = out_dir;

    const metriclab::ExperimentReport report = metriclab::run_experiment(cfg);
    report.write_files(cfg.out_dir, cfg.echo());
    for (const auto& row : report.rows()) {
      std::printf("%-14s %-22s %-32s %14.8g", row.experiment.c_str(),
                  row.case_label.c_str(), row.quantity.c_str(), row.computed);
      if (row.reference) std::printf("  ref %14.8g", *row.reference);
      if (row.passed) std::printf("  [%s]", *row.passed ? "pass" : "FAIL");
      std::printf("\n");
    }
    std::printf("%s: %d row(s) failed; reports in %s\n",
                report.experiment().c_str(), report.failures(),
                cfg.out_dir.c_str());
    return report.all_passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
