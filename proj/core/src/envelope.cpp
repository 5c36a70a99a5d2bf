#include "hyperpolar/envelope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "hyperpolar/errors.hpp"

namespace hyperpolar {

std::optional<double> predict_zero_crossing(double t_n, double t_n1, double v_n,
                                            double v_n1) {
  if (v_n == v_n1) return std::nullopt;
  return t_n1 - v_n1 * (t_n1 - t_n) / (v_n1 - v_n);
}

std::vector<std::size_t> local_minima(const std::vector<double>& values) {
  std::vector<std::size_t> out;
  const std::size_t n = values.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (values[i - 1] > values[i] && values[i] <= values[i + 1]) out.push_back(i);
  }
  return out;
}

namespace {

bool is_interior_minimum(const std::vector<double>& v, std::size_t i) {
  return i > 0 && i + 1 < v.size() && v[i - 1] > v[i] && v[i] <= v[i + 1];
}

// Peak of the modulus over the half-periods adjacent to the minimum at n,
// scanning out to the neighboring minima (or the series ends).
double local_peak(const std::vector<double>& v, std::size_t n) {
  double peak = v[n];
  for (std::size_t i = n; i-- > 0;) {
    peak = std::max(peak, v[i]);
    if (is_interior_minimum(v, i)) break;
  }
  for (std::size_t i = n + 1; i < v.size(); ++i) {
    peak = std::max(peak, v[i]);
    if (is_interior_minimum(v, i)) break;
  }
  return peak;
}

}  // namespace

HalfPeriodCase classify_minimum(const std::vector<double>& modulus,
                                const SampleGrid& grid, std::size_t n,
                                int former_sign, const EnvelopeParams& params) {
  if (n == 0 || n + 1 >= modulus.size())
    throw numerical_error("classify_minimum", "minimum at series boundary", n);

  const double t_prev = grid.time(n - 1);
  const double t_min = grid.time(n);
  const double t_next = grid.time(n + 1);

  // Two-point crossing predictions: the descending pair extrapolates forward
  // past the minimum sample, the ascending pair extrapolates backward before
  // it. A class-I crossing makes (at least) one of them land in its window;
  // whichever pair lies entirely on one side of the true crossing predicts
  // it exactly, so the nearer estimate decides the sampling case when both
  // windows fire.
  const auto descending =
      predict_zero_crossing(t_prev, t_min, modulus[n - 1], modulus[n]);
  const auto ascending =
      predict_zero_crossing(t_min, t_next, modulus[n], modulus[n + 1]);
  const bool desc_valid =
      descending.has_value() && *descending >= t_min && *descending <= t_next;
  const bool asc_valid =
      ascending.has_value() && *ascending >= t_prev && *ascending <= t_min;

  HalfPeriodCase result;
  result.minimum_index = n;
  result.former_sign = former_sign;

  if (!desc_valid && !asc_valid) {
    result.klass = MinimumClass::PositiveFloor;
    result.sampling_case = 1;
    return result;
  }
  if (modulus[n] > params.eta * local_peak(modulus, n)) {
    result.klass = MinimumClass::PositiveFloor;
    result.sampling_case = 1;
    return result;
  }

  result.klass = MinimumClass::ZeroCrossing;
  if (desc_valid && !asc_valid) {
    result.sampling_case = 1;
  } else if (asc_valid && !desc_valid) {
    result.sampling_case = 2;
  } else {
    const double d_dist = std::abs(*descending - t_min);
    const double a_dist = std::abs(*ascending - t_min);
    result.sampling_case = (d_dist <= a_dist) ? 1 : 2;
  }
  return result;
}

namespace {

// Shared by both recovery routes: fill signed values from segment signs and
// the sample index at which each new segment starts.
std::vector<double> apply_segments(const std::vector<double>& modulus,
                                   const std::vector<std::size_t>& starts,
                                   const std::vector<int>& signs) {
  std::vector<double> out(modulus.size());
  std::size_t seg = 0;
  for (std::size_t i = 0; i < modulus.size(); ++i) {
    while (seg + 1 < starts.size() && i >= starts[seg + 1]) ++seg;
    out[i] = static_cast<double>(signs[seg]) * modulus[i];
  }
  return out;
}

}  // namespace

ChannelRecovery recover_channel(const std::vector<double>& modulus,
                                const SampleGrid& grid, int initial_sign,
                                const EnvelopeParams& params) {
  ChannelRecovery out;
  const std::vector<std::size_t> minima = local_minima(modulus);
  std::vector<std::size_t> starts{0};
  int current = initial_sign;
  out.segment_signs.push_back(current);
  for (std::size_t n : minima) {
    const HalfPeriodCase hc = classify_minimum(modulus, grid, n, current, params);
    out.minima.push_back(hc);
    if (hc.klass == MinimumClass::ZeroCrossing) current = -current;
    out.segment_signs.push_back(current);
    starts.push_back(hc.sampling_case == 1 ? n + 1 : n);
  }
  out.signed_values = apply_segments(modulus, starts, out.segment_signs);
  return out;
}

namespace {

// Discontinuity cost of one half-period boundary for a given relative sign
// of the two adjacent segments. The signed channel of a correct recovery is
// smooth, so the cost is the sum of squared second differences in the window
// around the boundary; the boundary sample's side is chosen to whichever
// placement is cheaper. Returns {cost, placement_sign_of_minimum_sample}.
std::pair<double, int> boundary_cost(const std::vector<double>& modulus,
                                     std::size_t idx, int rho) {
  const std::size_t n = modulus.size();
  double best = std::numeric_limits<double>::infinity();
  int best_placement = +1;
  for (int placement : {+1, rho}) {
    auto signed_at = [&](std::size_t m) {
      const int s = (m < idx) ? +1 : (m == idx ? placement : rho);
      return static_cast<double>(s) * modulus[m];
    };
    double cost = 0.0;
    const std::size_t lo = (idx >= 1) ? idx - 1 : 1;
    const std::size_t hi = std::min(idx + 1, n >= 2 ? n - 2 : 0);
    for (std::size_t m = lo; m <= hi && m + 1 < n && m >= 1; ++m) {
      const double d2 = signed_at(m + 1) - 2.0 * signed_at(m) + signed_at(m - 1);
      cost += d2 * d2;
    }
    if (cost < best) {
      best = cost;
      best_placement = placement;
    }
    if (placement == rho) break;  // rho == +1 tries the same placement twice
  }
  return {best, best_placement};
}

}  // namespace

ChannelOracleResult oracle_channel(const std::vector<double>& modulus,
                                   const SampleGrid& grid, int initial_sign,
                                   std::size_t max_exhaustive_minima) {
  (void)grid;  // segmentation is index-based; kept for signature symmetry
  ChannelOracleResult out;
  const std::vector<std::size_t> minima = local_minima(modulus);
  const std::size_t k = minima.size();

  // Costs of keeping (rho = +1) vs flipping (rho = -1) at each boundary.
  std::vector<std::array<std::pair<double, int>, 2>> costs(k);
  for (std::size_t i = 0; i < k; ++i) {
    costs[i] = {boundary_cost(modulus, minima[i], +1),
                boundary_cost(modulus, minima[i], -1)};
  }

  std::vector<int> relative(k, +1);
  out.exhaustive = k <= max_exhaustive_minima;
  if (out.exhaustive) {
    double best_total = std::numeric_limits<double>::infinity();
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      double total = 0.0;
      for (std::size_t i = 0; i < k; ++i)
        total += costs[i][(mask >> i) & 1].first;
      if (total < best_total) {
        best_total = total;
        best_mask = mask;
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      relative[i] = ((best_mask >> i) & 1) ? -1 : +1;
  } else {
    for (std::size_t i = 0; i < k; ++i)
      relative[i] = (costs[i][1].first < costs[i][0].first) ? -1 : +1;
  }

  std::vector<std::size_t> starts{0};
  out.segment_signs.push_back(initial_sign);
  int current = initial_sign;
  for (std::size_t i = 0; i < k; ++i) {
    current *= relative[i];
    out.segment_signs.push_back(current);
    // Boundary sample joins the new segment when its cheaper placement
    // carries the new relative sign.
    const int placement = costs[i][relative[i] < 0 ? 1 : 0].second;
    starts.push_back(placement == relative[i] && relative[i] < 0 ? minima[i]
                                                                 : minima[i] + 1);
  }
  out.signed_values = apply_segments(modulus, starts, out.segment_signs);
  return out;
}

InitialSigns initial_signs(double phase_lo, double phase_hi) {
  const double mid = 0.5 * (phase_lo + phase_hi);
  InitialSigns s;
  s.sign_re = (std::cos(mid) >= 0.0) ? +1 : -1;
  s.sign_im = (std::sin(mid) >= 0.0) ? +1 : -1;
  return s;
}

}  // namespace hyperpolar
