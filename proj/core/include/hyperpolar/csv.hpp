#pragma once

#include <string>

#include "hyperpolar/polar.hpp"
#include "hyperpolar/series.hpp"

namespace hyperpolar {

// Shortest representation that still round-trips a double (17 significant
// digits), used for every number the library serializes.
std::string format_g17(double value);

// Input format: header `t,z_r,z_i`, decimal rows, uniform t spacing within
// 1e-9 relative. Errors name the offending line.
ComplexSeries read_input_csv(const std::string& path);
void write_input_csv(const std::string& path, const ComplexSeries& z);

// Output format: header `t,a,b,c,d,f_Br,f_Bi`; with extended_columns the
// header gains `,phi_A,f_A,alpha,beta,gamma` (f_A written as nan when the
// analytic-envelope gate rejected it).
void write_polar_csv(const std::string& path, const PolarDecomposition& polar,
                     const InstFrequencySeries& frequency, bool extended_columns);

// Per-panel plot data (recovered vs. raw vs. ideal); ideal columns appear
// only when truth is supplied.
struct PlotTruth {
  const ComplexSeries* envelope = nullptr;   // ideal A
  const ComplexSeries* phase = nullptr;      // ideal B
  const ComplexSeries* frequency = nullptr;  // ideal f_B
};

void write_plot_data(const std::string& directory, const ComplexSeries& z,
                     const PolarDecomposition& polar,
                     const InstFrequencySeries& frequency,
                     const PlotTruth& truth = {});

// FNV-1a 64-bit checksum of a file's bytes, as a fixed-width hex string.
std::string file_checksum(const std::string& path);

}  // namespace hyperpolar
