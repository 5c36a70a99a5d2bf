#include "hyperpolar/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "hyperpolar/errors.hpp"

namespace hyperpolar {

namespace {

constexpr std::size_t kMinLength = 4;

// The FFTW planner is not thread-safe; plan execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Complex> fft(std::vector<Complex> data, int sign) {
  const int n = static_cast<int>(data.size());
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return data;
}

void require_length(std::size_t n, const char* stage) {
  if (n < kMinLength)
    throw input_error(stage, "series too short, need N >= 4, got N = " + std::to_string(n));
}

// Signed angular frequency of DFT bin m; bins above N/2 wrap negative.
std::vector<double> bin_frequencies(std::size_t n, double dt) {
  std::vector<double> freq(n);
  const double step = 2.0 * M_PI / (static_cast<double>(n) * dt);
  for (std::size_t m = 0; m < n; ++m) {
    const double idx = (2 * m > n) ? static_cast<double>(m) - static_cast<double>(n)
                                   : static_cast<double>(m);
    freq[m] = step * idx;
  }
  return freq;
}

// Channel pairing for the j-axis transform: (r, j) and (i, k). Within each
// pair the DFT's imaginary unit stands for the basis element j.
QSpectrum qft_channels(const SampleGrid& grid, std::vector<Complex> c1,
                       std::vector<Complex> c2) {
  const std::size_t n = c1.size();
  c1 = fft(std::move(c1), FFTW_FORWARD);
  c2 = fft(std::move(c2), FFTW_FORWARD);
  QSpectrum out;
  out.grid = grid;
  out.frequencies = bin_frequencies(n, grid.dt);
  out.coefficients.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    out.coefficients[m] = {c1[m].real(), c2[m].real(), c1[m].imag(), c2[m].imag()};
  }
  return out;
}

// Classical frequency-domain Hilbert transform of one real channel:
// multiplier -sgn(w) on the DFT, with DC and Nyquist zeroed.
std::vector<double> hilbert_channel(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<Complex> spec(n);
  for (std::size_t i = 0; i < n; ++i) spec[i] = {x[i], 0.0};
  spec = fft(std::move(spec), FFTW_FORWARD);

  const Complex neg_j{0.0, -1.0};
  const Complex pos_j{0.0, 1.0};
  spec[0] = 0.0;
  for (std::size_t m = 1; m < n; ++m) {
    if (2 * m == n) {
      spec[m] = 0.0;  // Nyquist bin, even N
    } else if (2 * m < n) {
      spec[m] *= neg_j;
    } else {
      spec[m] *= pos_j;
    }
  }
  spec = fft(std::move(spec), FFTW_BACKWARD);
  std::vector<double> out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = spec[i].real() * scale;
  return out;
}

}  // namespace

QSpectrum qft_j(const ComplexSeries& z) {
  require_length(z.size(), "qft_j");
  const std::size_t n = z.size();
  std::vector<Complex> c1(n), c2(n);
  for (std::size_t i = 0; i < n; ++i) {
    c1[i] = {z.values[i].real(), 0.0};
    c2[i] = {z.values[i].imag(), 0.0};
  }
  return qft_channels(z.grid, std::move(c1), std::move(c2));
}

QSpectrum qft_j(const QuaternionSeries& s) {
  require_length(s.size(), "qft_j");
  const std::size_t n = s.size();
  std::vector<Complex> c1(n), c2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Quaternion& q = s.values[i];
    c1[i] = {q.r, q.j};
    c2[i] = {q.i, q.k};
  }
  return qft_channels(s.grid, std::move(c1), std::move(c2));
}

QuaternionSeries qft_j_inv(const QSpectrum& spectrum) {
  require_length(spectrum.size(), "qft_j_inv");
  const std::size_t n = spectrum.size();
  std::vector<Complex> c1(n), c2(n);
  for (std::size_t m = 0; m < n; ++m) {
    const Quaternion& q = spectrum.coefficients[m];
    c1[m] = {q.r, q.j};
    c2[m] = {q.i, q.k};
  }
  c1 = fft(std::move(c1), FFTW_BACKWARD);
  c2 = fft(std::move(c2), FFTW_BACKWARD);
  QuaternionSeries out;
  out.grid = spectrum.grid;
  out.values.resize(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = {c1[i].real() * scale, c2[i].real() * scale,
                     c1[i].imag() * scale, c2[i].imag() * scale};
  }
  return out;
}

ComplexSeries qht_j(const ComplexSeries& z) {
  require_length(z.size(), "qht_j");
  const std::size_t n = z.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = z.values[i].real();
    im[i] = z.values[i].imag();
  }
  const std::vector<double> hre = hilbert_channel(re);
  const std::vector<double> him = hilbert_channel(im);
  ComplexSeries out{z.grid, std::vector<Complex>(n)};
  for (std::size_t i = 0; i < n; ++i) out.values[i] = {hre[i], him[i]};
  return out;
}

QuaternionSeries hyperanalytic(const ComplexSeries& z) {
  const ComplexSeries o = qht_j(z);
  QuaternionSeries out;
  out.grid = z.grid;
  out.values.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    out.values.push_back(cayley_join(z.values[i], o.values[i]));
  return out;
}

namespace {

// Shared negative-bin energy scan; Nyquist (even N) left out of both sides'
// strict-sign sets is counted only in the total.
template <typename NormSq>
double negative_energy_ratio(std::size_t n, NormSq&& norm_sq_at) {
  double total = 0.0;
  double negative = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double e = norm_sq_at(m);
    total += e;
    if (2 * m > n) negative += e;
  }
  if (total == 0.0) return 0.0;
  return negative / total;
}

}  // namespace

double negative_frequency_energy_ratio(const QuaternionSeries& s) {
  const QSpectrum spec = qft_j(s);
  return negative_energy_ratio(spec.size(), [&](std::size_t m) {
    return norm_sq(spec.coefficients[m]);
  });
}

double negative_frequency_energy_ratio(const ComplexSeries& z) {
  require_length(z.size(), "spectrum_gate");
  std::vector<Complex> spec = fft(z.values, FFTW_FORWARD);
  return negative_energy_ratio(spec.size(), [&](std::size_t m) {
    return std::norm(spec[m]);
  });
}

}  // namespace hyperpolar
