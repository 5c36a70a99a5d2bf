#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpolar/model.hpp"
#include "hyperpolar/polar.hpp"
#include "hyperpolar/series.hpp"

namespace hyperpolar {

// Full-run configuration: decomposition knobs plus reporting policy.
struct AnalysisConfig {
  DecomposeConfig decompose;
  double edge_exclude = 0.05;  // fraction excluded per side for interior metrics
  bool extended_columns = false;
  bool timings_in_report = false;  // timings are volatile; reports stay
                                   // byte-reproducible unless asked for
  std::string emit_plot_dir;       // empty disables plot data
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

// max over all samples, plus median and max over the interior window.
struct MetricSummary {
  double max_abs = 0.0;
  double interior_median = 0.0;
  double interior_max = 0.0;
};

struct RunReport {
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<StageTiming> timings;
  std::optional<MetricSummary> df_br;  // |f_Br - ideal|, truth runs only
  std::optional<MetricSummary> df_bi;
  std::optional<double> envelope_interior_max_rel_error;
  std::optional<double> phase_interior_max_abs_error;
  double fa_gate_ratio = 0.0;
  bool fa_emitted = false;
  std::size_t samples = 0;
  double edge_exclude = 0.0;
  bool include_timings = false;  // mirrors AnalysisConfig::timings_in_report
  std::vector<std::pair<std::string, std::string>> checksums;
  std::vector<std::string> warnings;
};

struct PipelineResult {
  PolarDecomposition polar;
  InstFrequencySeries frequency;
  RunReport report;
};

// hyperanalytic construction followed by the polar decomposition; when truth
// is supplied the report carries the error metrics.
PipelineResult run_pipeline(const ComplexSeries& z, const AnalysisConfig& config,
                            const GroundTruth* truth = nullptr);

// Generate a model, then analyze its complex signal against its own truth.
PipelineResult run_pipeline(const ModelSpec& spec, const AnalysisConfig& config);

// key=value serialization, one entry per line; the JSON variant carries the
// same content for machine consumption.
std::string render_report(const RunReport& report);
std::string render_report_json(const RunReport& report);
void write_report(const std::string& path, const RunReport& report);
void write_report_json(const std::string& path, const RunReport& report);

// Interior window [first, last) for a series of n samples under an
// edge-exclusion fraction per side.
std::pair<std::size_t, std::size_t> interior_window(std::size_t n,
                                                    double edge_exclude);

MetricSummary summarize_abs_error(const std::vector<double>& abs_error,
                                  double edge_exclude);

}  // namespace hyperpolar
