// hyperpolar: construct the hyperanalytic signal of a sampled complex signal
// and compute its unique polar form (complex envelope, complex phase,
// instantaneous complex frequency).
//
// Subcommands:
//   generate  synthesize a model signal (and optionally its ground truth)
//   analyze   decompose a CSV signal, write polar CSV + report
//   verify    generate + analyze + compare against ground truth thresholds
//
// Exit codes: 0 success, 2 input error, 3 numerical/stage error,
// 4 verification threshold failure.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperpolar/csv.hpp"
#include "hyperpolar/errors.hpp"
#include "hyperpolar/model.hpp"
#include "hyperpolar/pipeline.hpp"

namespace {

using hyperpolar::AnalysisConfig;
using hyperpolar::ModelSpec;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitThreshold = 4;

// Verification thresholds for the built-in model run, fixed here so a verify
// pass means the same thing everywhere.
constexpr double kMaxEnvelopeInteriorRelError = 0.01;   // 1 percent
constexpr double kMaxDfBrInteriorMedian = 0.05;         // Hz
constexpr double kMaxDfBiInteriorMax = 0.5;             // Hz

struct ModelOptions {
  std::string model = "paper";
  double fs = 10000.0;
  double duration = 0.4;
  std::vector<double> log_mag;
  std::vector<double> env_phase;
  std::vector<double> phase_re;
  std::vector<double> phase_im;
};

struct AnalyzeOptions {
  AnalysisConfig config;
  std::string report_path;
  std::string report_json_path;
  std::string out_path;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  cmd->add_option("--model", opts.model, "Model kind: paper | custom")
      ->check(CLI::IsMember({"paper", "custom"}))
      ->capture_default_str();
  cmd->add_option("--fs", opts.fs, "Sampling rate in Hz")->capture_default_str();
  cmd->add_option("--duration", opts.duration, "Signal duration in seconds")
      ->capture_default_str();
  const std::string fn_help = " (custom model): offset,slope,amp,freq,phase";
  cmd->add_option("--log-mag", opts.log_mag, "ln||A||" + fn_help)->expected(5);
  cmd->add_option("--env-phase", opts.env_phase, "phi_A" + fn_help)->expected(5);
  cmd->add_option("--phase-re", opts.phase_re, "c(t)" + fn_help)->expected(5);
  cmd->add_option("--phase-im", opts.phase_im, "d(t)" + fn_help)->expected(5);
}

void add_analysis_options(CLI::App* cmd, AnalyzeOptions& opts) {
  auto& cfg = opts.config;
  cmd->add_option("--phase-init-low", cfg.decompose.phase_init_lo,
                  "Lower bound of the initial envelope phase range (rad)")
      ->capture_default_str();
  cmd->add_option("--phase-init-high", cfg.decompose.phase_init_hi,
                  "Upper bound of the initial envelope phase range (rad)")
      ->capture_default_str();
  cmd->add_option("--edge-exclude", cfg.edge_exclude,
                  "Fraction of samples excluded per side for interior metrics")
      ->capture_default_str();
  cmd->add_option("--eta", cfg.decompose.eta,
                  "Class-II floor guard: minima above eta * local peak never flip")
      ->capture_default_str();
  cmd->add_option("--eps-mag", cfg.decompose.eps_mag_rel,
                  "Degenerate-magnitude threshold relative to max ||s||")
      ->capture_default_str();
  cmd->add_flag("--mask-degenerate", cfg.decompose.interpolate_degenerate_axis,
                "Interpolate the axis through degenerate samples instead of failing");
  cmd->add_flag("--extended-columns", opts.config.extended_columns,
                "Also write phi_A, f_A, alpha, beta, gamma columns");
  cmd->add_flag("--timings", opts.config.timings_in_report,
                "Include stage timings in the report file (not byte-reproducible)");
  cmd->add_option("--emit-plot-data", opts.config.emit_plot_dir,
                  "Directory for per-panel plot CSVs");
  cmd->add_option("--report", opts.report_path, "Report file (key=value lines)");
  cmd->add_option("--report-json", opts.report_json_path, "Report as JSON");
}

ModelSpec build_model_spec(const ModelOptions& opts) {
  ModelSpec spec;
  spec.fs = opts.fs;
  spec.duration = opts.duration;
  if (opts.model == "paper") {
    spec.kind = ModelSpec::Kind::Paper;
    return spec;
  }
  spec.kind = ModelSpec::Kind::Custom;
  auto to_fn = [](const std::vector<double>& p) {
    hyperpolar::ModelFunction f;
    if (p.size() == 5) {
      f.offset = p[0];
      f.slope = p[1];
      f.amp = p[2];
      f.freq = p[3];
      f.phase = p[4];
    }
    return f;
  };
  spec.log_magnitude = to_fn(opts.log_mag);
  spec.envelope_phase = to_fn(opts.env_phase);
  spec.phase_re = to_fn(opts.phase_re);
  spec.phase_im = to_fn(opts.phase_im);
  return spec;
}

void write_truth_csv(const std::string& path, const hyperpolar::GroundTruth& truth) {
  std::ofstream out(path);
  if (!out)
    throw hyperpolar::input_error("write_csv", "cannot open '" + path + "'");
  out << "t,a,b,c,d,f_Br,f_Bi,s_r,s_i,s_j,s_k\n";
  using hyperpolar::format_g17;
  for (std::size_t i = 0; i < truth.s.size(); ++i) {
    const auto& q = truth.s.values[i];
    out << format_g17(truth.s.grid.time(i)) << ','
        << format_g17(truth.envelope.values[i].real()) << ','
        << format_g17(truth.envelope.values[i].imag()) << ','
        << format_g17(truth.phase.values[i].real()) << ','
        << format_g17(truth.phase.values[i].imag()) << ','
        << format_g17(truth.frequency.values[i].real()) << ','
        << format_g17(truth.frequency.values[i].imag()) << ','
        << format_g17(q.r) << ',' << format_g17(q.i) << ',' << format_g17(q.j)
        << ',' << format_g17(q.k) << "\n";
  }
}

void emit_outputs(const std::string& out_path, AnalyzeOptions& opts,
                  hyperpolar::PipelineResult& result, const hyperpolar::ComplexSeries& z,
                  const hyperpolar::GroundTruth* truth) {
  if (!out_path.empty()) {
    hyperpolar::write_polar_csv(out_path, result.polar, result.frequency,
                                opts.config.extended_columns);
    result.report.checksums.emplace_back("polar_csv",
                                         hyperpolar::file_checksum(out_path));
  }
  if (!opts.config.emit_plot_dir.empty()) {
    hyperpolar::PlotTruth plot_truth;
    if (truth != nullptr) {
      plot_truth.envelope = &truth->envelope;
      plot_truth.phase = &truth->phase;
      plot_truth.frequency = &truth->frequency;
    }
    hyperpolar::write_plot_data(opts.config.emit_plot_dir, z, result.polar,
                                result.frequency, plot_truth);
  }
  if (!opts.report_path.empty())
    hyperpolar::write_report(opts.report_path, result.report);
  if (!opts.report_json_path.empty())
    hyperpolar::write_report_json(opts.report_json_path, result.report);
}

void print_timings(const hyperpolar::RunReport& report) {
  for (const auto& t : report.timings)
    std::cout << "stage " << t.stage << ": " << t.seconds * 1e3 << " ms\n";
}

int check_thresholds(const hyperpolar::RunReport& report) {
  struct Check {
    const char* name;
    double value;
    double limit;
  };
  const std::vector<Check> checks = {
      {"envelope.interior_max_rel_error",
       report.envelope_interior_max_rel_error.value_or(1e9),
       kMaxEnvelopeInteriorRelError},
      {"Df_Br.interior_median", report.df_br ? report.df_br->interior_median : 1e9,
       kMaxDfBrInteriorMedian},
      {"Df_Bi.interior_max", report.df_bi ? report.df_bi->interior_max : 1e9,
       kMaxDfBiInteriorMax},
  };
  bool ok = true;
  for (const Check& c : checks) {
    const bool pass = c.value < c.limit;
    ok = ok && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << " = "
              << hyperpolar::format_g17(c.value) << " (limit " << c.limit << ")\n";
  }
  return ok ? kExitOk : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar decomposition of hyperanalytic signals"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional key=value config file");

  // generate
  ModelOptions gen_model;
  std::string gen_out, gen_truth;
  CLI::App* gen = app.add_subcommand("generate", "Synthesize a model signal");
  add_model_options(gen, gen_model);
  gen->add_option("--out", gen_out, "Output CSV for the complex signal")->required();
  gen->add_option("--truth", gen_truth, "Optional CSV for the ground truth");

  // analyze
  AnalyzeOptions ana;
  std::string ana_in;
  CLI::App* analyze = app.add_subcommand("analyze", "Decompose a signal from CSV");
  analyze->add_option("--in", ana_in, "Input CSV (t,z_r,z_i)")->required();
  analyze->add_option("--out", ana.out_path, "Output polar CSV");
  add_analysis_options(analyze, ana);

  // verify
  ModelOptions ver_model;
  AnalyzeOptions ver;
  CLI::App* verify =
      app.add_subcommand("verify", "Generate a model, analyze it, check thresholds");
  add_model_options(verify, ver_model);
  verify->add_option("--out", ver.out_path, "Optional output polar CSV");
  add_analysis_options(verify, ver);

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      const ModelSpec spec = build_model_spec(gen_model);
      hyperpolar::GeneratedModel model = hyperpolar::generate(spec);
      hyperpolar::write_input_csv(gen_out, model.z);
      if (!gen_truth.empty()) write_truth_csv(gen_truth, model.truth);
      for (const auto& w : model.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << "wrote " << model.z.size() << " samples to " << gen_out << "\n";
      return kExitOk;
    }

    if (analyze->parsed()) {
      const hyperpolar::ComplexSeries z = hyperpolar::read_input_csv(ana_in);
      hyperpolar::PipelineResult result = hyperpolar::run_pipeline(z, ana.config);
      emit_outputs(ana.out_path, ana, result, z, nullptr);
      print_timings(result.report);
      std::cout << "analyzed " << z.size() << " samples\n";
      return kExitOk;
    }

    // verify
    const ModelSpec spec = build_model_spec(ver_model);
    hyperpolar::GeneratedModel model = hyperpolar::generate(spec);
    hyperpolar::PipelineResult result =
        hyperpolar::run_pipeline(model.z, ver.config, &model.truth);
    for (const auto& w : model.warnings) result.report.warnings.push_back(w);
    emit_outputs(ver.out_path, ver, result, model.z, &model.truth);
    print_timings(result.report);
    return check_thresholds(result.report);

  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);
    app.exit(e);
    return kExitInput;
  } catch (const hyperpolar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == hyperpolar::ErrorKind::InvalidInput ? kExitInput
                                                           : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
