#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "hyperpolar/envelope.hpp"
#include "hyperpolar/series.hpp"

namespace hyperpolar {

// Configuration shared by the polar-recovery stages. All defaults are the
// canonical choices; phase_init_* may be any quarter-plane interval and only
// fixes the two initial envelope channel signs.
struct DecomposeConfig {
  double phase_init_lo = 0.0;
  double phase_init_hi = std::numbers::pi / 2.0;
  double eps_mag_rel = 1e-12;  // degenerate-magnitude threshold, relative to max ||s||
  double eta = 0.5;            // class-II floor guard (see EnvelopeParams)
  bool interpolate_degenerate_axis = false;
  bool envelope_frequency = true;     // compute f_A when the gate passes
  double fa_gate_max_ratio = 1e-6;    // analytic-signal gate on the envelope
};

// Per-sample magnitude ||s[n]|| and normalized complex axis of q_r + i q_i.
struct AxisDecomposition {
  RealSeries magnitude;
  ComplexSeries axis;
};

AxisDecomposition axis_normalize(const QuaternionSeries& s,
                                 const DecomposeConfig& config = {});

// Complex envelope A = a + ib recovered by half-period sign retrieval on the
// two axis modulus channels, rescaled by ||s||.
ComplexSeries recover_envelope(const QuaternionSeries& s,
                               const DecomposeConfig& config = {});

// recover_envelope plus the per-channel diagnostics (classified minima and
// half-period sign patterns), for callers that need them.
struct EnvelopeRecovery {
  ComplexSeries envelope;
  ChannelRecovery channel_re;
  ChannelRecovery channel_im;
};

EnvelopeRecovery recover_envelope_detailed(const QuaternionSeries& s,
                                           const DecomposeConfig& config = {});

// Brute-force reference for recover_envelope (different decision mechanism:
// discontinuity-cost minimization over sign assignments). Test oracle only.
struct EnvelopeOracle {
  ComplexSeries envelope;
  ChannelOracleResult channel_re;
  ChannelOracleResult channel_im;
};

EnvelopeOracle oracle_sign_assignment(const QuaternionSeries& s,
                                      const DecomposeConfig& config = {});

// Unit carrier e^{Bj} = alpha + j beta + k gamma.
struct CarrierSeries {
  SampleGrid grid;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma;

  std::size_t size() const { return alpha.size(); }
};

// carrier[n] = conj(A[n]) s[n] / ||s[n]||^2. The i component must vanish for
// a consistent envelope; exceeding tolerance raises an error.
CarrierSeries extract_carrier(const QuaternionSeries& s, const ComplexSeries& envelope,
                              const DecomposeConfig& config = {});

// Complex phase B = c + id from the carrier: unwrap arccos(alpha) into a
// non-decreasing total phase, then rescale the sign-corrected jk axis.
// wrapped is the same construction without unwrapping (phase folds at the
// arccos branch boundaries).
struct PhaseRecovery {
  ComplexSeries phase;    // c + id, unwrapped
  ComplexSeries wrapped;  // direct arccos evaluation, kept for diagnostics
};

PhaseRecovery recover_phase(const CarrierSeries& carrier,
                            const DecomposeConfig& config = {});

// Instantaneous complex frequency (1/2pi) dB/dt by central differences
// (one-sided at the ends). f_a is present only when requested and the
// envelope passes the analytic-signal gate; fa_gate_ratio always records the
// measured negative-frequency energy ratio of the envelope.
struct InstFrequencySeries {
  SampleGrid grid;
  std::vector<Complex> f_b;
  std::optional<std::vector<double>> f_a;
  double fa_gate_ratio = 0.0;

  std::size_t size() const { return f_b.size(); }
};

// Derivative helper shared by f_B and f_A (units: input per second / 2pi).
std::vector<double> scaled_derivative(const std::vector<double>& values, double dt);

InstFrequencySeries instantaneous_frequency(const ComplexSeries& phase,
                                            const std::vector<double>* phi_a = nullptr,
                                            double fa_gate_ratio = 1.0,
                                            bool want_fa = false);

// Full polar decomposition s = A e^{Bj} with diagnostics.
struct PolarDecomposition {
  SampleGrid grid;
  ComplexSeries envelope;        // A = a + ib
  ComplexSeries phase;           // B = c + id (unwrapped)
  ComplexSeries phase_wrapped;   // B without unwrapping
  CarrierSeries carrier;         // alpha, beta, gamma
  ComplexSeries axis;            // normalized complex part of s
  RealSeries magnitude;          // ||s||
  RealSeries envelope_phase;     // phi_A, unwrapped, phi_A[0] in the init range
};

struct DecomposeResult {
  PolarDecomposition polar;
  InstFrequencySeries frequency;
};

DecomposeResult decompose(const QuaternionSeries& s,
                          const DecomposeConfig& config = {});

}  // namespace hyperpolar
