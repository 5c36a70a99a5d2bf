#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperpolar/series.hpp"

namespace hyperpolar {

// Channel-level machinery for half-period sign recovery. A "channel" here is
// one modulus component of the normalized complex axis (|axis_re| or
// |axis_im|); the sign of the underlying signed envelope can only change at
// local minima of the channel, and each minimum is classified as a true zero
// crossing (class I) or a positive floor (class II).

enum class MinimumClass {
  ZeroCrossing,   // class I: the signed channel flips across this minimum
  PositiveFloor,  // class II: the dip does not reach zero, no flip
};

// Classification of one detected local minimum. sampling_case 1 means the
// minimum sample is the last point of the former half-period (a flip starts
// at the next sample); case 2 means it is the first point of the following
// one (a flip starts at the minimum itself).
struct HalfPeriodCase {
  MinimumClass klass = MinimumClass::PositiveFloor;
  int former_sign = +1;  // sign of the preceding half-period: +1 (P) / -1 (N)
  int sampling_case = 1;
  std::size_t minimum_index = 0;
};

struct EnvelopeParams {
  // A minimum whose value exceeds eta times the surrounding half-period peak
  // is forced to class II; linear extrapolation through two samples of a
  // smooth positive dip can otherwise predict a spurious crossing.
  double eta = 0.5;
};

// Linear zero-crossing prediction through two samples (the two-point
// extrapolation used to classify minima). Returns nullopt when the line is
// horizontal; a prediction outside [t_n, t_n1] is informative, not an error.
std::optional<double> predict_zero_crossing(double t_n, double t_n1, double v_n,
                                            double v_n1);

// Interior local minima of a sampled channel: v[n-1] > v[n] <= v[n+1].
// Plateaus of equal values collapse to their leftmost index.
std::vector<std::size_t> local_minima(const std::vector<double>& values);

// Classify the local minimum at index n of a modulus channel. Throws for
// minima at the series boundary (no two-sided stencil there).
HalfPeriodCase classify_minimum(const std::vector<double>& modulus,
                                const SampleGrid& grid, std::size_t n,
                                int former_sign,
                                const EnvelopeParams& params = {});

// Result of walking one channel: the sign-restored values, the classified
// minima, and the sign of each half-period segment (minima.size() + 1).
struct ChannelRecovery {
  std::vector<double> signed_values;
  std::vector<HalfPeriodCase> minima;
  std::vector<int> segment_signs;
};

ChannelRecovery recover_channel(const std::vector<double>& modulus,
                                const SampleGrid& grid, int initial_sign,
                                const EnvelopeParams& params = {});

// Independent reference for recover_channel: enumerate sign assignments per
// half-period (exhaustive up to max_exhaustive_minima flips, greedy beyond)
// and keep the one minimizing the squared slope discontinuities across
// half-period boundaries. Decision logic shares nothing with the
// zero-crossing classifier.
struct ChannelOracleResult {
  std::vector<double> signed_values;
  std::vector<int> segment_signs;
  bool exhaustive = true;  // false when the greedy fallback was used
};

ChannelOracleResult oracle_channel(const std::vector<double>& modulus,
                                   const SampleGrid& grid, int initial_sign,
                                   std::size_t max_exhaustive_minima = 20);

// Channel start signs implied by a quarter-plane interval for the initial
// envelope phase; the default [0, pi/2] starts both channels nonnegative.
struct InitialSigns {
  int sign_re = +1;
  int sign_im = +1;
};

InitialSigns initial_signs(double phase_lo, double phase_hi);

}  // namespace hyperpolar
