#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hyperpolar/series.hpp"

namespace hyperpolar {

// Scalar building block for synthetic models:
//   f(t) = offset + slope * t + amp * sin(2 pi freq t + phase).
struct ModelFunction {
  double offset = 0.0;
  double slope = 0.0;
  double amp = 0.0;
  double freq = 0.0;
  double phase = 0.0;

  double operator()(double t) const {
    return offset + slope * t +
           amp * std::sin(2.0 * std::numbers::pi * freq * t + phase);
  }
  double derivative(double t) const {
    return slope + amp * 2.0 * std::numbers::pi * freq *
                       std::cos(2.0 * std::numbers::pi * freq * t + phase);
  }
};

// Synthetic AM-FM model s(t) = A(t) e^{B(t) j} with
//   A = exp(log_magnitude) e^{i envelope_phase},  B = phase_re + i phase_im.
// The built-in paper model fixes A = e^{-t} e^{7 sin(2 pi t) i} and
// B = 40 pi t + i (20 pi t + 4 cos(2 pi t)) over t in [0, 0.4].
struct ModelSpec {
  enum class Kind { Paper, Custom };
  Kind kind = Kind::Paper;
  double duration = 0.4;  // seconds
  double fs = 10000.0;    // Hz

  // Custom-model components (ignored for Kind::Paper).
  ModelFunction log_magnitude;
  ModelFunction envelope_phase;
  ModelFunction phase_re;
  ModelFunction phase_im;
};

struct GroundTruth {
  QuaternionSeries s;
  ComplexSeries envelope;   // A
  ComplexSeries phase;      // B
  ComplexSeries frequency;  // f_B, from the analytic derivative
};

struct GeneratedModel {
  ComplexSeries z;  // scalar + i part of s
  GroundTruth truth;
  std::vector<std::string> warnings;
};

// Evaluate the model on its grid and return the complex signal plus ground
// truth. Custom models must satisfy the canonical constraints (c, d >= 0,
// non-decreasing, ||B(0)|| < 2 pi); sub-Nyquist-margin sampling only warns.
GeneratedModel generate(const ModelSpec& spec);

}  // namespace hyperpolar
