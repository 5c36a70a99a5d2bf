#include "hyperpolar/model.hpp"

#include <cmath>

#include "hyperpolar/errors.hpp"

namespace hyperpolar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ModelSample {
  Complex envelope;
  Complex phase;
  Complex frequency;
};

ModelSample eval_paper(double t) {
  const double s2p = std::sin(kTwoPi * t);
  const double mag = std::exp(-t);
  const double phi = 7.0 * s2p;
  ModelSample out;
  out.envelope = {mag * std::cos(phi), mag * std::sin(phi)};
  out.phase = {40.0 * std::numbers::pi * t,
               20.0 * std::numbers::pi * t + 4.0 * std::cos(kTwoPi * t)};
  out.frequency = {20.0, 10.0 - 4.0 * s2p};
  return out;
}

ModelSample eval_custom(const ModelSpec& spec, double t) {
  const double mag = std::exp(spec.log_magnitude(t));
  const double phi = spec.envelope_phase(t);
  ModelSample out;
  out.envelope = {mag * std::cos(phi), mag * std::sin(phi)};
  out.phase = {spec.phase_re(t), spec.phase_im(t)};
  out.frequency = {spec.phase_re.derivative(t) / kTwoPi,
                   spec.phase_im.derivative(t) / kTwoPi};
  return out;
}

}  // namespace

GeneratedModel generate(const ModelSpec& spec) {
  if (spec.duration <= 0.0)
    throw input_error("generate", "duration must be positive");
  if (spec.fs <= 0.0) throw input_error("generate", "fs must be positive");

  const std::size_t n =
      static_cast<std::size_t>(std::floor(spec.duration * spec.fs)) + 1;
  if (n < 4) throw input_error("generate", "model grid too short, need N >= 4");
  const SampleGrid grid{0.0, 1.0 / spec.fs};

  GeneratedModel out;
  out.z.grid = grid;
  out.z.values.resize(n);
  out.truth.s = {grid, std::vector<Quaternion>(n)};
  out.truth.envelope = {grid, std::vector<Complex>(n)};
  out.truth.phase = {grid, std::vector<Complex>(n)};
  out.truth.frequency = {grid, std::vector<Complex>(n)};

  double max_freq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.time(i);
    const ModelSample m =
        (spec.kind == ModelSpec::Kind::Paper) ? eval_paper(t) : eval_custom(spec, t);
    out.truth.envelope.values[i] = m.envelope;
    out.truth.phase.values[i] = m.phase;
    out.truth.frequency.values[i] = m.frequency;

    const Quaternion a{m.envelope.real(), m.envelope.imag(), 0.0, 0.0};
    const Quaternion bj{0.0, 0.0, m.phase.real(), m.phase.imag()};
    const Quaternion s = a * exp(bj);
    out.truth.s.values[i] = s;
    out.z.values[i] = {s.r, s.i};
    max_freq = std::max({max_freq, std::abs(m.frequency.real()),
                         std::abs(m.frequency.imag())});
  }

  // Canonical constraints of the unique polar form; a custom model breaking
  // them has no meaningful ground truth to compare against.
  const Complex b0 = out.truth.phase.values[0];
  if (std::abs(b0) >= kTwoPi)
    throw input_error("generate", "||B(0)|| must lie in [0, 2pi)");
  for (std::size_t i = 0; i < n; ++i) {
    const Complex b = out.truth.phase.values[i];
    if (b.real() < 0.0 || b.imag() < 0.0)
      throw input_error("generate", "phase components must stay nonnegative", i);
    if (i > 0) {
      const Complex prev = out.truth.phase.values[i - 1];
      if (b.real() < prev.real() - 1e-12 || b.imag() < prev.imag() - 1e-12)
        throw input_error("generate", "phase components must be non-decreasing", i);
    }
  }

  if (spec.fs < 10.0 * max_freq) {
    out.warnings.push_back(
        "sampling rate below 10x the maximum instantaneous frequency (fs = " +
        std::to_string(spec.fs) + ", max |f_B| = " + std::to_string(max_freq) + ")");
  }
  return out;
}

}  // namespace hyperpolar
