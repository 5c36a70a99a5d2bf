#pragma once

#include "hyperpolar/series.hpp"

namespace hyperpolar {

// Right quaternionic Fourier transform of a complex signal with respect to
// the j-axis: F_j[z_r] + i F_j[z_i], where F_j is the DFT with j playing the
// imaginary unit. Forward kernel e^{-j w t}, unnormalized; the inverse
// carries the 1/N factor. Any N >= 4 is supported. The quaternion-series
// overload transforms each Cayley-Dickson channel pair the same way.
QSpectrum qft_j(const ComplexSeries& z);
QSpectrum qft_j(const QuaternionSeries& s);
QuaternionSeries qft_j_inv(const QSpectrum& spectrum);

// Quaternionic Hilbert transform w.r.t. the j-axis, computed in the
// frequency domain with the multiplier -j sgn(w). DC and (for even N) the
// Nyquist bin are zeroed. The output grid equals the input grid.
ComplexSeries qht_j(const ComplexSeries& z);

// Hyperanalytic signal s = z + qht_j(z) j. The scalar and i components of
// the result are bit-identical to the input.
QuaternionSeries hyperanalytic(const ComplexSeries& z);

// Relative energy of the strictly negative-frequency bins of qft_j(s).
// Near zero for a hyperanalytic series.
double negative_frequency_energy_ratio(const QuaternionSeries& s);

// Same ratio for a complex signal under the classical (i-axis) DFT. This is
// the analytic-signal gate used for f_A.
double negative_frequency_energy_ratio(const ComplexSeries& z);

}  // namespace hyperpolar
