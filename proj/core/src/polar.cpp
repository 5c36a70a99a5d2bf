#include "hyperpolar/polar.hpp"

#include <algorithm>
#include <cmath>

#include "hyperpolar/errors.hpp"
#include "hyperpolar/transform.hpp"

namespace hyperpolar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_magnitude(const QuaternionSeries& s) {
  double m = 0.0;
  for (const Quaternion& q : s.values) m = std::max(m, norm(q));
  return m;
}

}  // namespace

AxisDecomposition axis_normalize(const QuaternionSeries& s,
                                 const DecomposeConfig& config) {
  const std::size_t n = s.size();
  if (n == 0) throw input_error("axis_normalize", "empty series");
  const double eps = config.eps_mag_rel * max_magnitude(s);

  AxisDecomposition out;
  out.magnitude = {s.grid, std::vector<double>(n)};
  out.axis = {s.grid, std::vector<Complex>(n)};
  std::vector<std::size_t> degenerate;
  for (std::size_t i = 0; i < n; ++i) {
    const Quaternion& q = s.values[i];
    out.magnitude.values[i] = norm(q);
    const double complex_norm = std::hypot(q.r, q.i);
    if (complex_norm <= eps) {
      if (!config.interpolate_degenerate_axis)
        throw numerical_error("axis_normalize",
                              "degenerate axis: ||q_r + i q_i|| <= eps_mag", i);
      degenerate.push_back(i);
      continue;
    }
    out.axis.values[i] = Complex{q.r, q.i} / complex_norm;
  }

  if (degenerate.size() == n)
    throw numerical_error("axis_normalize", "all samples have degenerate axis");

  // Opt-in masking: linearly interpolate the axis through degenerate runs,
  // renormalizing the interpolant; runs touching the ends copy the nearest
  // valid axis.
  for (std::size_t d = 0; d < degenerate.size();) {
    std::size_t run_end = d;
    while (run_end + 1 < degenerate.size() &&
           degenerate[run_end + 1] == degenerate[run_end] + 1)
      ++run_end;
    const std::size_t lo = degenerate[d];
    const std::size_t hi = degenerate[run_end];
    const bool has_left = lo > 0;
    const bool has_right = hi + 1 < n;
    for (std::size_t i = lo; i <= hi; ++i) {
      Complex v;
      if (has_left && has_right) {
        const double w = static_cast<double>(i - (lo - 1)) /
                         static_cast<double>(hi + 2 - lo);
        v = (1.0 - w) * out.axis.values[lo - 1] + w * out.axis.values[hi + 1];
        if (std::abs(v) < 1e-12) v = out.axis.values[lo - 1];
      } else if (has_left) {
        v = out.axis.values[lo - 1];
      } else {
        v = out.axis.values[hi + 1];
      }
      out.axis.values[i] = v / std::abs(v);
    }
    d = run_end + 1;
  }
  return out;
}

namespace {

EnvelopeRecovery recover_from_axis(const AxisDecomposition& axis_dec,
                                   const DecomposeConfig& config) {
  const std::size_t n = axis_dec.axis.size();
  std::vector<double> mod_re(n), mod_im(n);
  for (std::size_t i = 0; i < n; ++i) {
    mod_re[i] = std::abs(axis_dec.axis.values[i].real());
    mod_im[i] = std::abs(axis_dec.axis.values[i].imag());
  }
  const InitialSigns init = initial_signs(config.phase_init_lo, config.phase_init_hi);
  EnvelopeParams params;
  params.eta = config.eta;

  EnvelopeRecovery out;
  out.channel_re = recover_channel(mod_re, axis_dec.axis.grid, init.sign_re, params);
  out.channel_im = recover_channel(mod_im, axis_dec.axis.grid, init.sign_im, params);
  out.envelope = {axis_dec.axis.grid, std::vector<Complex>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.envelope.values[i] = axis_dec.magnitude.values[i] *
                             Complex{out.channel_re.signed_values[i],
                                     out.channel_im.signed_values[i]};
  }
  return out;
}

}  // namespace

EnvelopeRecovery recover_envelope_detailed(const QuaternionSeries& s,
                                           const DecomposeConfig& config) {
  return recover_from_axis(axis_normalize(s, config), config);
}

ComplexSeries recover_envelope(const QuaternionSeries& s,
                               const DecomposeConfig& config) {
  return recover_envelope_detailed(s, config).envelope;
}

EnvelopeOracle oracle_sign_assignment(const QuaternionSeries& s,
                                      const DecomposeConfig& config) {
  const AxisDecomposition axis_dec = axis_normalize(s, config);
  const std::size_t n = axis_dec.axis.size();
  std::vector<double> mod_re(n), mod_im(n);
  for (std::size_t i = 0; i < n; ++i) {
    mod_re[i] = std::abs(axis_dec.axis.values[i].real());
    mod_im[i] = std::abs(axis_dec.axis.values[i].imag());
  }
  const InitialSigns init = initial_signs(config.phase_init_lo, config.phase_init_hi);

  EnvelopeOracle out;
  out.channel_re = oracle_channel(mod_re, axis_dec.axis.grid, init.sign_re);
  out.channel_im = oracle_channel(mod_im, axis_dec.axis.grid, init.sign_im);
  out.envelope = {axis_dec.axis.grid, std::vector<Complex>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.envelope.values[i] = axis_dec.magnitude.values[i] *
                             Complex{out.channel_re.signed_values[i],
                                     out.channel_im.signed_values[i]};
  }
  return out;
}

CarrierSeries extract_carrier(const QuaternionSeries& s,
                              const ComplexSeries& envelope,
                              const DecomposeConfig& config) {
  const std::size_t n = s.size();
  if (envelope.size() != n)
    throw input_error("extract_carrier", "envelope/series length mismatch");
  const double eps = config.eps_mag_rel * max_magnitude(s);

  CarrierSeries out;
  out.grid = s.grid;
  out.alpha.resize(n);
  out.beta.resize(n);
  out.gamma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = norm(s.values[i]);
    if (mag <= eps)
      throw numerical_error("extract_carrier", "sample magnitude below threshold", i);
    const double env_mag = std::abs(envelope.values[i]);
    if (std::abs(env_mag - mag) > 1e-9 * mag)
      throw numerical_error("extract_carrier",
                            "envelope magnitude does not match ||s||", i);
    const Quaternion conj_a{envelope.values[i].real(), -envelope.values[i].imag(),
                            0.0, 0.0};
    const Quaternion c = (conj_a * s.values[i]) / (mag * mag);
    if (std::abs(c.i) > 1e-9)
      throw numerical_error("extract_carrier",
                            "inconsistent envelope: carrier has i component", i);
    out.alpha[i] = c.r;
    out.beta[i] = c.j;
    out.gamma[i] = c.k;
  }
  return out;
}

PhaseRecovery recover_phase(const CarrierSeries& carrier,
                            const DecomposeConfig&) {
  const std::size_t n = carrier.size();
  if (n == 0) throw input_error("recover_phase", "empty carrier");

  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = carrier.alpha[i];
    if (std::abs(a) > 1.0 + 1e-9)
      throw numerical_error("recover_phase", "carrier not normalized, |alpha| > 1", i);
    theta[i] = std::acos(std::clamp(a, -1.0, 1.0));
  }

  // Reflection threshold: theta must approach within delta of a branch
  // boundary (0 or pi) and reverse direction to count as a reflection.
  double max_step = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    max_step = std::max(max_step, std::abs(theta[i] - theta[i - 1]));
  const double delta = 10.0 * max_step;

  // Initial branch: Theta[0] in [0, 2pi). The canonical pair keeps c, d >= 0,
  // so the jk axis A(c + id) stays in the closed first quadrant and
  // beta + gamma = sin(Theta) (c_hat + d_hat) carries the sign of sin(Theta).
  std::vector<double> big_theta(n);
  int dir = (carrier.beta[0] + carrier.gamma[0] >= 0.0) ? +1 : -1;
  double base = (dir > 0) ? 0.0 : kTwoPi;
  big_theta[0] = base + dir * theta[0];

  for (std::size_t i = 1; i < n; ++i) {
    const double step = theta[i] - theta[i - 1];
    if (dir > 0 && step < 0.0) {
      const double dist = std::min(kPi - theta[i - 1], kPi - theta[i]);
      if (dist <= delta) {
        base += kTwoPi;
        dir = -1;
      }
    } else if (dir < 0 && step > 0.0) {
      const double dist = std::min(theta[i - 1], theta[i]);
      if (dist <= delta) dir = +1;
    }
    big_theta[i] = base + dir * theta[i];
  }

  PhaseRecovery out;
  out.phase = {carrier.grid, std::vector<Complex>(n)};
  out.wrapped = {carrier.grid, std::vector<Complex>(n)};
  Complex prev_axis{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double m = std::hypot(carrier.beta[i], carrier.gamma[i]);
    Complex axis = prev_axis;  // sin(Theta) ~ 0: axis indeterminate, reuse last
    if (m > 1e-13) {
      axis = Complex{carrier.beta[i], carrier.gamma[i]} / m;
      prev_axis = axis;
    }
    out.wrapped.values[i] = theta[i] * axis;
    const double sigma = (std::sin(big_theta[i]) >= 0.0) ? 1.0 : -1.0;
    double c = big_theta[i] * sigma * axis.real();
    double d = big_theta[i] * sigma * axis.imag();
    // sub-rounding negatives are sign noise of exact zeros
    const double zero_band = 1e-9 * (1.0 + big_theta[i]);
    if (c < 0.0 && c > -zero_band) c = 0.0;
    if (d < 0.0 && d > -zero_band) d = 0.0;
    out.phase.values[i] = {c, d};
  }
  return out;
}

std::vector<double> scaled_derivative(const std::vector<double>& values, double dt) {
  const std::size_t n = values.size();
  if (n < 3)
    throw input_error("instantaneous_frequency",
                      "series too short for derivatives, need N >= 3");
  std::vector<double> out(n);
  const double inv = 1.0 / (kTwoPi * dt);
  out[0] = (values[1] - values[0]) * inv;
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = (values[i + 1] - values[i - 1]) * 0.5 * inv;
  out[n - 1] = (values[n - 1] - values[n - 2]) * inv;
  return out;
}

InstFrequencySeries instantaneous_frequency(const ComplexSeries& phase,
                                            const std::vector<double>* phi_a,
                                            double fa_gate_ratio, bool want_fa) {
  const std::size_t n = phase.size();
  std::vector<double> c(n), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = phase.values[i].real();
    d[i] = phase.values[i].imag();
  }
  const std::vector<double> fc = scaled_derivative(c, phase.grid.dt);
  const std::vector<double> fd = scaled_derivative(d, phase.grid.dt);

  InstFrequencySeries out;
  out.grid = phase.grid;
  out.f_b.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.f_b[i] = {fc[i], fd[i]};
  out.fa_gate_ratio = fa_gate_ratio;
  if (want_fa && phi_a != nullptr)
    out.f_a = scaled_derivative(*phi_a, phase.grid.dt);
  return out;
}

namespace {

// phi_A: continuous argument of the recovered envelope, standard 2pi unwrap.
std::vector<double> envelope_phase(const ComplexSeries& envelope) {
  const std::size_t n = envelope.size();
  std::vector<double> phi(n);
  double offset = 0.0;
  double prev = std::atan2(envelope.values[0].imag(), envelope.values[0].real());
  phi[0] = prev;
  for (std::size_t i = 1; i < n; ++i) {
    const double raw = std::atan2(envelope.values[i].imag(), envelope.values[i].real());
    double step = raw - prev;
    if (step > kPi) offset -= kTwoPi;
    else if (step < -kPi) offset += kTwoPi;
    phi[i] = raw + offset;
    prev = raw;
  }
  return phi;
}

}  // namespace

DecomposeResult decompose(const QuaternionSeries& s, const DecomposeConfig& config) {
  if (s.size() < 4)
    throw input_error("decompose", "series too short, need N >= 4, got N = " +
                                       std::to_string(s.size()));

  const AxisDecomposition axis_dec = axis_normalize(s, config);
  EnvelopeRecovery env = recover_from_axis(axis_dec, config);
  const CarrierSeries carrier = extract_carrier(s, env.envelope, config);
  PhaseRecovery phase = recover_phase(carrier, config);
  const std::vector<double> phi_a = envelope_phase(env.envelope);

  // f_A is defined only when the envelope is itself an analytic signal.
  const double gate_ratio = negative_frequency_energy_ratio(env.envelope);
  const bool want_fa =
      config.envelope_frequency && gate_ratio < config.fa_gate_max_ratio;
  InstFrequencySeries freq =
      instantaneous_frequency(phase.phase, &phi_a, gate_ratio, want_fa);

  DecomposeResult out;
  out.polar.grid = s.grid;
  out.polar.envelope = std::move(env.envelope);
  out.polar.phase = std::move(phase.phase);
  out.polar.phase_wrapped = std::move(phase.wrapped);
  out.polar.carrier = carrier;
  out.polar.axis = axis_dec.axis;
  out.polar.magnitude = axis_dec.magnitude;
  out.polar.envelope_phase = {s.grid, phi_a};
  out.frequency = std::move(freq);
  return out;
}

}  // namespace hyperpolar
