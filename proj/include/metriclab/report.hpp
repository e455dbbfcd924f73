#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace metriclab {

/// One report line: a computed quantity, optionally checked against a
/// reference. pass is set iff a reference and tolerance (or bound) exist.
struct ReportRow {
  std::string experiment;
  std::string case_label;
  std::string quantity;
  double computed = 0.0;
  std::optional<double> reference;
  std::optional<double> rel_err;
  std::optional<bool> passed;
};

class ExperimentReport {
 public:
  explicit ExperimentReport(std::string experiment)
      : experiment_(std::move(experiment)) {}

  const std::string& experiment() const { return experiment_; }
  const std::vector<ReportRow>& rows() const { return rows_; }

  /// |computed - reference| / |reference| <= tol  (reference != 0).
  void add_rel(const std::string& case_label, const std::string& quantity,
               double computed, double reference, double tol);
  /// computed <= bound.
  void add_le(const std::string& case_label, const std::string& quantity,
              double computed, double bound);
  /// computed >= bound.
  void add_ge(const std::string& case_label, const std::string& quantity,
              double computed, double bound);
  /// Boolean check (computed = 1 on success, reference = 1).
  void add_flag(const std::string& case_label, const std::string& quantity,
                bool ok);
  /// Informational value, no pass judgement.
  void add_info(const std::string& case_label, const std::string& quantity,
                double computed);

  bool all_passed() const;
  int failures() const;

  /// CSV with header experiment,case,quantity,computed,reference,rel_err,pass
  /// (UTF-8, LF line endings, %.12g numbers): byte-identical for identical
  /// inputs.
  std::string to_csv() const;
  std::string to_json(const std::map<std::string, std::string>& config_echo)
      const;
  void write_files(const std::string& out_dir,
                   const std::map<std::string, std::string>& config_echo)
      const;

  /// Tolerance lookup used by experiments: override by quantity name, else
  /// the given default.
  static double tol_or(const std::map<std::string, double>& overrides,
                       const std::string& quantity, double fallback);

 private:
  std::string experiment_;
  std::vector<ReportRow> rows_;
};

}  // namespace metriclab
