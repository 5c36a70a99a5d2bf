#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "hyperpolar/errors.hpp"

namespace hyperpolar {

// Element of the Hamilton algebra, q = r + i*i_ + j*j_ + k*k_ with
// ij = -ji = k, jk = -kj = i, ki = -ik = j. All arithmetic is plain double
// precision; operations are pure and safe to call concurrently.
struct Quaternion {
  double r = 0.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r_, double i_, double j_, double k_)
      : r(r_), i(i_), j(j_), k(k_) {}
  constexpr Quaternion(double real) : r(real) {}  // real embedding

  friend constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.r + q.r, p.i + q.i, p.j + q.j, p.k + q.k};
  }
  friend constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.r - q.r, p.i - q.i, p.j - q.j, p.k - q.k};
  }
  friend constexpr Quaternion operator-(const Quaternion& q) {
    return {-q.r, -q.i, -q.j, -q.k};
  }
  friend constexpr Quaternion operator*(double c, const Quaternion& q) {
    return {c * q.r, c * q.i, c * q.j, c * q.k};
  }
  friend constexpr Quaternion operator*(const Quaternion& q, double c) {
    return c * q;
  }
  friend constexpr Quaternion operator/(const Quaternion& q, double c) {
    return {q.r / c, q.i / c, q.j / c, q.k / c};
  }

  // Hamilton product (non-commutative).
  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.r * q.r - p.i * q.i - p.j * q.j - p.k * q.k,
            p.r * q.i + p.i * q.r + p.j * q.k - p.k * q.j,
            p.r * q.j - p.i * q.k + p.j * q.r + p.k * q.i,
            p.r * q.k + p.i * q.j - p.j * q.i + p.k * q.r};
  }

  friend constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.r == q.r && p.i == q.i && p.j == q.j && p.k == q.k;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.r << ", " << q.i << ", " << q.j << ", " << q.k << ")";
  }
};

constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.i, -q.j, -q.k}; }

inline double norm(const Quaternion& q) {
  return std::sqrt(q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k);
}

constexpr double norm_sq(const Quaternion& q) {
  return q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k;
}

constexpr double scalar_part(const Quaternion& q) { return q.r; }

constexpr Quaternion vector_part(const Quaternion& q) { return {0.0, q.i, q.j, q.k}; }

inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (n2 == 0.0)
    throw numerical_error("quaternion", "zero quaternion has no inverse");
  return conj(q) / n2;
}

// Cayley-Dickson split q = z1 + z2 j with z1 = r + i*i_, z2 = j_ + i*k_.
struct ComplexPair {
  std::complex<double> z1;
  std::complex<double> z2;
};

constexpr ComplexPair cayley_split(const Quaternion& q) {
  return {{q.r, q.i}, {q.j, q.k}};
}

constexpr Quaternion cayley_join(const ComplexPair& p) {
  return {p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag()};
}

constexpr Quaternion cayley_join(const std::complex<double>& z1,
                                 const std::complex<double>& z2) {
  return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

// e^q = e^S(q) (cos|V| + (V/|V|) sin|V|). The |V| -> 0 limit is the real
// exponential; a series branch for sin(x)/x avoids the 0/0.
inline Quaternion exp(const Quaternion& q) {
  const double vn = std::sqrt(q.i * q.i + q.j * q.j + q.k * q.k);
  const double es = std::exp(q.r);
  double sinc;  // sin(vn)/vn
  if (vn < 1e-8) {
    sinc = 1.0 - vn * vn / 6.0;
  } else {
    sinc = std::sin(vn) / vn;
  }
  const double scale = es * sinc;
  return {es * std::cos(vn), scale * q.i, scale * q.j, scale * q.k};
}

// ln q = ln|q| + (V/|V|) arccos(S/|q|). Pure positive reals map to ln(r);
// negative reals have no preferred axis and are rejected.
inline Quaternion log(const Quaternion& q) {
  const double n = norm(q);
  if (n == 0.0)
    throw numerical_error("quaternion", "log of zero quaternion");
  const double vn = std::sqrt(q.i * q.i + q.j * q.j + q.k * q.k);
  if (vn == 0.0) {
    if (q.r < 0.0)
      throw numerical_error("quaternion", "log axis undefined for negative real quaternion");
    return {std::log(q.r), 0.0, 0.0, 0.0};
  }
  double c = q.r / n;
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  const double angle = std::acos(c);
  const double scale = angle / vn;
  return {std::log(n), scale * q.i, scale * q.j, scale * q.k};
}

}  // namespace hyperpolar
