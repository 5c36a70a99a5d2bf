#include "hyperpolar/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hyperpolar/csv.hpp"
#include "hyperpolar/errors.hpp"
#include "hyperpolar/transform.hpp"

#include "json.hpp"

namespace hyperpolar {

std::pair<std::size_t, std::size_t> interior_window(std::size_t n,
                                                    double edge_exclude) {
  const auto margin = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * std::clamp(edge_exclude, 0.0, 0.49)));
  return {margin, n - margin};
}

MetricSummary summarize_abs_error(const std::vector<double>& abs_error,
                                  double edge_exclude) {
  MetricSummary out;
  const auto [lo, hi] = interior_window(abs_error.size(), edge_exclude);
  std::vector<double> interior(abs_error.begin() + static_cast<std::ptrdiff_t>(lo),
                               abs_error.begin() + static_cast<std::ptrdiff_t>(hi));
  for (double e : abs_error) out.max_abs = std::max(out.max_abs, e);
  for (double e : interior) out.interior_max = std::max(out.interior_max, e);
  if (!interior.empty()) {
    const std::size_t mid = interior.size() / 2;
    std::nth_element(interior.begin(), interior.begin() + static_cast<std::ptrdiff_t>(mid),
                     interior.end());
    out.interior_median = interior[mid];
  }
  return out;
}

namespace {

void echo_config(RunReport& report, const AnalysisConfig& config) {
  auto add = [&](const std::string& key, const std::string& value) {
    report.config_echo.emplace_back(key, value);
  };
  add("phase_init_lo", format_g17(config.decompose.phase_init_lo));
  add("phase_init_hi", format_g17(config.decompose.phase_init_hi));
  add("eps_mag_rel", format_g17(config.decompose.eps_mag_rel));
  add("eta", format_g17(config.decompose.eta));
  add("interpolate_degenerate_axis",
      config.decompose.interpolate_degenerate_axis ? "true" : "false");
  add("envelope_frequency", config.decompose.envelope_frequency ? "true" : "false");
  add("fa_gate_max_ratio", format_g17(config.decompose.fa_gate_max_ratio));
  add("edge_exclude", format_g17(config.edge_exclude));
  add("extended_columns", config.extended_columns ? "true" : "false");
}

void add_truth_metrics(RunReport& report, const PipelineResult& result,
                       const GroundTruth& truth, double edge_exclude) {
  const std::size_t n = result.polar.envelope.size();
  if (truth.envelope.size() != n)
    throw input_error("run_pipeline", "truth length does not match signal length");

  std::vector<double> env_rel(n), dfbr(n), dfbi(n), db(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ideal_mag = std::abs(truth.envelope.values[i]);
    const double diff = std::abs(result.polar.envelope.values[i] -
                                 truth.envelope.values[i]);
    env_rel[i] = (ideal_mag > 0.0) ? diff / ideal_mag : diff;
    dfbr[i] = std::abs(result.frequency.f_b[i].real() -
                       truth.frequency.values[i].real());
    dfbi[i] = std::abs(result.frequency.f_b[i].imag() -
                       truth.frequency.values[i].imag());
    db[i] = std::abs(result.polar.phase.values[i] - truth.phase.values[i]);
  }
  report.df_br = summarize_abs_error(dfbr, edge_exclude);
  report.df_bi = summarize_abs_error(dfbi, edge_exclude);
  report.envelope_interior_max_rel_error =
      summarize_abs_error(env_rel, edge_exclude).interior_max;
  report.phase_interior_max_abs_error =
      summarize_abs_error(db, edge_exclude).interior_max;
}

}  // namespace

PipelineResult run_pipeline(const ComplexSeries& z, const AnalysisConfig& config,
                            const GroundTruth* truth) {
  using clock = std::chrono::steady_clock;
  PipelineResult result;
  echo_config(result.report, config);
  result.report.edge_exclude = config.edge_exclude;
  result.report.samples = z.size();

  result.report.include_timings = config.timings_in_report;

  auto t0 = clock::now();
  const QuaternionSeries s = hyperanalytic(z);
  auto t1 = clock::now();
  result.report.timings.push_back(
      {"hyperanalytic", std::chrono::duration<double>(t1 - t0).count()});

  DecomposeResult dec = decompose(s, config.decompose);
  auto t2 = clock::now();
  result.report.timings.push_back(
      {"decompose", std::chrono::duration<double>(t2 - t1).count()});

  result.polar = std::move(dec.polar);
  result.frequency = std::move(dec.frequency);
  result.report.fa_gate_ratio = result.frequency.fa_gate_ratio;
  result.report.fa_emitted = result.frequency.f_a.has_value();

  if (truth != nullptr)
    add_truth_metrics(result.report, result, *truth, config.edge_exclude);
  return result;
}

PipelineResult run_pipeline(const ModelSpec& spec, const AnalysisConfig& config) {
  GeneratedModel model = generate(spec);
  PipelineResult result = run_pipeline(model.z, config, &model.truth);
  for (const std::string& w : model.warnings) result.report.warnings.push_back(w);
  return result;
}

namespace {

void render_metric(std::ostream& os, const std::string& name,
                   const MetricSummary& m) {
  os << name << ".max=" << format_g17(m.max_abs) << "\n";
  os << name << ".interior_median=" << format_g17(m.interior_median) << "\n";
  os << name << ".interior_max=" << format_g17(m.interior_max) << "\n";
}

}  // namespace

std::string render_report(const RunReport& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.config_echo)
    os << "config." << key << "=" << value << "\n";
  os << "samples=" << report.samples << "\n";
  os << "fa_gate_ratio=" << format_g17(report.fa_gate_ratio) << "\n";
  os << "fa_emitted=" << (report.fa_emitted ? "true" : "false") << "\n";
  if (report.df_br) render_metric(os, "Df_Br", *report.df_br);
  if (report.df_bi) render_metric(os, "Df_Bi", *report.df_bi);
  if (report.envelope_interior_max_rel_error)
    os << "envelope.interior_max_rel_error="
       << format_g17(*report.envelope_interior_max_rel_error) << "\n";
  if (report.phase_interior_max_abs_error)
    os << "phase.interior_max_abs_error="
       << format_g17(*report.phase_interior_max_abs_error) << "\n";
  for (const auto& [label, sum] : report.checksums)
    os << "checksum." << label << "=" << sum << "\n";
  if (report.include_timings) {
    for (const StageTiming& t : report.timings)
      os << "timing." << t.stage << "=" << format_g17(t.seconds) << "\n";
  }
  for (const std::string& w : report.warnings) os << "warning=" << w << "\n";
  return os.str();
}

std::string render_report_json(const RunReport& report) {
  nlohmann::json j;
  for (const auto& [key, value] : report.config_echo) j["config"][key] = value;
  j["samples"] = report.samples;
  j["fa_gate_ratio"] = report.fa_gate_ratio;
  j["fa_emitted"] = report.fa_emitted;
  auto metric = [](const MetricSummary& m) {
    return nlohmann::json{{"max", m.max_abs},
                          {"interior_median", m.interior_median},
                          {"interior_max", m.interior_max}};
  };
  if (report.df_br) j["Df_Br"] = metric(*report.df_br);
  if (report.df_bi) j["Df_Bi"] = metric(*report.df_bi);
  if (report.envelope_interior_max_rel_error)
    j["envelope_interior_max_rel_error"] = *report.envelope_interior_max_rel_error;
  if (report.phase_interior_max_abs_error)
    j["phase_interior_max_abs_error"] = *report.phase_interior_max_abs_error;
  for (const auto& [label, sum] : report.checksums) j["checksums"][label] = sum;
  if (report.include_timings) {
    for (const StageTiming& t : report.timings) j["timings"][t.stage] = t.seconds;
  }
  for (const std::string& w : report.warnings) j["warnings"].push_back(w);
  return j.dump(2) + "\n";
}

void write_report(const std::string& path, const RunReport& report) {
  std::ofstream out(path);
  if (!out) throw input_error("write_report", "cannot open '" + path + "'");
  out << render_report(report);
}

void write_report_json(const std::string& path, const RunReport& report) {
  std::ofstream out(path);
  if (!out) throw input_error("write_report", "cannot open '" + path + "'");
  out << render_report_json(report);
}

}  // namespace hyperpolar
