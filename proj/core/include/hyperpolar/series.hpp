#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hyperpolar/quaternion.hpp"

namespace hyperpolar {

using Complex = std::complex<double>;

// Uniform time grid shared by all series types: t[n] = t0 + n * dt.
struct SampleGrid {
  double t0 = 0.0;
  double dt = 1.0;

  double time(std::size_t n) const { return t0 + static_cast<double>(n) * dt; }
  friend constexpr bool operator==(const SampleGrid&, const SampleGrid&) = default;
};

// Uniformly sampled complex signal z[n] = z_r[n] + i z_i[n].
struct ComplexSeries {
  SampleGrid grid;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
};

// Uniformly sampled quaternion signal; same grid contract as ComplexSeries.
struct QuaternionSeries {
  SampleGrid grid;
  std::vector<Quaternion> values;

  std::size_t size() const { return values.size(); }
};

// Right-QFT spectrum on the standard DFT bin layout. frequencies[m] is the
// signed angular frequency of bin m in radians/second (bin 0 is DC, bins
// above N/2 are negative).
struct QSpectrum {
  SampleGrid grid;  // grid of the originating series, kept for inversion
  std::vector<double> frequencies;
  std::vector<Quaternion> coefficients;

  std::size_t size() const { return coefficients.size(); }
};

// Real-valued series on the common grid (moduli, phases, frequencies).
struct RealSeries {
  SampleGrid grid;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// Cayley-Dickson halves of a quaternion series: s = z1 + z2 j.
inline ComplexSeries complex_part(const QuaternionSeries& s) {
  ComplexSeries out{s.grid, {}};
  out.values.reserve(s.size());
  for (const Quaternion& q : s.values) out.values.emplace_back(q.r, q.i);
  return out;
}

inline ComplexSeries jk_part(const QuaternionSeries& s) {
  ComplexSeries out{s.grid, {}};
  out.values.reserve(s.size());
  for (const Quaternion& q : s.values) out.values.emplace_back(q.j, q.k);
  return out;
}

}  // namespace hyperpolar
