#include "metriclab/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace metriclab {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

void ExperimentReport::add_rel(const std::string& case_label,
                               const std::string& quantity, double computed,
                               double reference, double tol) {
  ReportRow r{experiment_, case_label, quantity, computed, reference, {}, {}};
  r.rel_err = std::abs(computed - reference) / std::abs(reference);
  r.passed = *r.rel_err <= tol;
  rows_.push_back(std::move(r));
}

void ExperimentReport::add_le(const std::string& case_label,
                              const std::string& quantity, double computed,
                              double bound) {
  ReportRow r{experiment_, case_label, quantity, computed, bound, {}, {}};
  r.passed = computed <= bound;
  rows_.push_back(std::move(r));
}

void ExperimentReport::add_ge(const std::string& case_label,
                              const std::string& quantity, double computed,
                              double bound) {
  ReportRow r{experiment_, case_label, quantity, computed, bound, {}, {}};
  r.passed = computed >= bound;
  rows_.push_back(std::move(r));
}

void ExperimentReport::add_flag(const std::string& case_label,
                                const std::string& quantity, bool ok) {
  ReportRow r{experiment_, case_label, quantity, ok ? 1.0 : 0.0, 1.0, {}, ok};
  rows_.push_back(std::move(r));
}

void ExperimentReport::add_info(const std::string& case_label,
                                const std::string& quantity, double computed) {
  rows_.push_back({experiment_, case_label, quantity, computed, {}, {}, {}});
}

bool ExperimentReport::all_passed() const { return failures() == 0; }

int ExperimentReport::failures() const {
  int n = 0;
  for (const auto& r : rows_)
    if (r.passed.has_value() && !*r.passed) ++n;
  return n;
}

std::string ExperimentReport::to_csv() const {
  std::string out = "experiment,case,quantity,computed,reference,rel_err,pass\n";
  for (const auto& r : rows_) {
    out += r.experiment + "," + r.case_label + "," + r.quantity + ",";
    out += fmt(r.computed) + ",";
    out += (r.reference ? fmt(*r.reference) : std::string()) + ",";
    out += (r.rel_err ? fmt(*r.rel_err) : std::string()) + ",";
    out += r.passed ? (*r.passed ? "1" : "0") : "";
    out += "\n";
  }
  return out;
}

std::string ExperimentReport::to_json(
    const std::map<std::string, std::string>& config_echo) const {
  nlohmann::json j;
  j["experiment"] = experiment_;
  j["config"] = config_echo;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json row;
    row["experiment"] = r.experiment;
    row["case"] = r.case_label;
    row["quantity"] = r.quantity;
    row["computed"] = r.computed;
    if (r.reference) row["reference"] = *r.reference;
    if (r.rel_err) row["rel_err"] = *r.rel_err;
    if (r.passed) row["pass"] = *r.passed;
    j["rows"].push_back(row);
  }
  j["failures"] = failures();
  return j.dump(2) + "\n";
}

void ExperimentReport::write_files(
    const std::string& out_dir,
    const std::map<std::string, std::string>& config_echo) const {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream f(out_dir + "/report.csv", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_dir + "/report.csv");
    f << to_csv();
  }
  {
    std::ofstream f(out_dir + "/report.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_dir + "/report.json");
    f << to_json(config_echo);
  }
}

double ExperimentReport::tol_or(const std::map<std::string, double>& overrides,
                                const std::string& quantity, double fallback) {
  auto it = overrides.find(quantity);
  return it == overrides.end() ? fallback : it->second;
}

}  // namespace metriclab
