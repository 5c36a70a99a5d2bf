#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hyperpolar/envelope.hpp"
#include "hyperpolar/errors.hpp"

using hyperpolar::EnvelopeParams;
using hyperpolar::HalfPeriodCase;
using hyperpolar::MinimumClass;
using hyperpolar::SampleGrid;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sample_abs(double (*f)(double), const SampleGrid& grid,
                               std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::abs(f(grid.time(i)));
  return v;
}

}  // namespace

TEST_CASE("zero-crossing prediction") {
  SUBCASE("linear extrapolation") {
    const auto t = hyperpolar::predict_zero_crossing(0.0, 1.0, 0.2, 0.1);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("horizontal line has no crossing") {
    CHECK_FALSE(hyperpolar::predict_zero_crossing(0.0, 1.0, 0.1, 0.1).has_value());
  }
  SUBCASE("symmetric crossing") {
    const auto t = hyperpolar::predict_zero_crossing(0.0, 1.0, -0.5, 0.5);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("prediction outside the sample interval is allowed") {
    const auto t = hyperpolar::predict_zero_crossing(0.0, 1.0, 5.0, 4.0);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(5.0));
  }
}

TEST_CASE("local minima detection") {
  SUBCASE("simple dip") {
    const std::vector<double> v{3, 1, 2, 0.5, 4};
    CHECK(hyperpolar::local_minima(v) == std::vector<std::size_t>{1, 3});
  }
  SUBCASE("plateau collapses to its leftmost index") {
    const std::vector<double> v{3, 1, 1, 1, 2};
    CHECK(hyperpolar::local_minima(v) == std::vector<std::size_t>{1});
  }
  SUBCASE("monotone series has none") {
    const std::vector<double> v{1, 2, 3, 4};
    CHECK(hyperpolar::local_minima(v).empty());
  }
  SUBCASE("endpoints are never minima") {
    const std::vector<double> v{0.0, 1.0, 2.0, 0.5};
    CHECK(hyperpolar::local_minima(v).empty());
  }
}

TEST_CASE("classify: true zero crossing of |cos|") {
  const SampleGrid grid{0.0, 0.01};
  const std::size_t n = 101;
  const auto mod = sample_abs([](double t) { return std::cos(kTwoPi * t); }, grid, n);
  const auto minima = hyperpolar::local_minima(mod);
  REQUIRE(minima.size() == 2);  // crossings near t = 0.25 and 0.75
  for (std::size_t idx : minima) {
    const HalfPeriodCase hc = hyperpolar::classify_minimum(mod, grid, idx, +1);
    CHECK(hc.klass == MinimumClass::ZeroCrossing);
  }
}

TEST_CASE("classify: positive floor of 0.5 + 0.4 cos") {
  const SampleGrid grid{0.0, 0.01};
  const std::size_t n = 101;
  const auto mod = sample_abs(
      [](double t) { return 0.5 + 0.4 * std::cos(kTwoPi * t); }, grid, n);
  const auto minima = hyperpolar::local_minima(mod);
  REQUIRE(minima.size() == 1);
  const HalfPeriodCase hc = hyperpolar::classify_minimum(mod, grid, minima[0], +1);
  CHECK(hc.klass == MinimumClass::PositiveFloor);
}

TEST_CASE("classify: exact grid-point zero is a crossing, sampling case 1") {
  const SampleGrid grid{0.0, 1.0};
  const std::vector<double> mod{0.3, 0.2, 0.1, 0.0, 0.1, 0.2, 0.3};
  const HalfPeriodCase hc = hyperpolar::classify_minimum(mod, grid, 3, +1);
  CHECK(hc.klass == MinimumClass::ZeroCrossing);
  CHECK(hc.sampling_case == 1);
}

TEST_CASE("classify: sampling case follows the crossing side") {
  const SampleGrid grid{0.0, 1.0};
  // crossing at t = 2.4, slope 1: minimum sample still on the falling branch
  const std::vector<double> case1{2.4, 1.4, 0.4, 0.6, 1.6};
  const HalfPeriodCase hc1 = hyperpolar::classify_minimum(case1, grid, 2, +1);
  CHECK(hc1.klass == MinimumClass::ZeroCrossing);
  CHECK(hc1.sampling_case == 1);
  // crossing at t = 1.6: minimum sample already on the rising branch
  const std::vector<double> case2{1.6, 0.6, 0.4, 1.4, 2.4};
  const HalfPeriodCase hc2 = hyperpolar::classify_minimum(case2, grid, 2, +1);
  CHECK(hc2.klass == MinimumClass::ZeroCrossing);
  CHECK(hc2.sampling_case == 2);
}

TEST_CASE("classify: boundary minima are rejected") {
  const SampleGrid grid{0.0, 1.0};
  const std::vector<double> mod{0.1, 0.2, 0.3, 0.4};
  CHECK_THROWS_AS((void)hyperpolar::classify_minimum(mod, grid, 0, +1),
                  hyperpolar::Error);
  CHECK_THROWS_AS((void)hyperpolar::classify_minimum(mod, grid, 3, +1),
                  hyperpolar::Error);
}

TEST_CASE("channel recovery restores |cos| to a continuous cosine") {
  const SampleGrid grid{0.0, 0.005};
  const std::size_t n = 401;  // two full periods
  const auto mod = sample_abs([](double t) { return std::cos(kTwoPi * t); }, grid, n);
  const auto rec = hyperpolar::recover_channel(mod, grid, +1);

  double max_err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    max_err = std::max(max_err,
                       std::abs(rec.signed_values[i] - std::cos(kTwoPi * grid.time(i))));
  CHECK(max_err < 1e-12);

  // alternating half-period signs
  REQUIRE(rec.segment_signs.size() == rec.minima.size() + 1);
  for (std::size_t i = 1; i < rec.segment_signs.size(); ++i)
    CHECK(rec.segment_signs[i] == -rec.segment_signs[i - 1]);
}

TEST_CASE("channel recovery keeps the sign across a class-II dip") {
  const SampleGrid grid{0.0, 0.005};
  const std::size_t n = 401;
  const auto mod = sample_abs(
      [](double t) { return 0.5 + 0.4 * std::cos(kTwoPi * t); }, grid, n);
  const auto rec = hyperpolar::recover_channel(mod, grid, +1);
  for (int s : rec.segment_signs) CHECK(s == +1);
  for (std::size_t i = 0; i < n; ++i) CHECK(rec.signed_values[i] == mod[i]);
}

TEST_CASE("no minima means constant sign") {
  const SampleGrid grid{0.0, 1.0};
  const std::vector<double> mod{1.0, 2.0, 3.0, 4.0, 5.0};
  const auto rec = hyperpolar::recover_channel(mod, grid, -1);
  CHECK(rec.minima.empty());
  CHECK(rec.segment_signs == std::vector<int>{-1});
  for (std::size_t i = 0; i < mod.size(); ++i)
    CHECK(rec.signed_values[i] == -mod[i]);
}

TEST_CASE("oracle matches the classifier on mixed channels") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> freq(0.7, 2.3);
  std::uniform_real_distribution<double> floor_amp(0.0, 1.0);
  const SampleGrid grid{0.0, 0.004};
  const std::size_t n = 501;

  for (int iter = 0; iter < 50; ++iter) {
    const double f = freq(rng);
    const double fl = floor_amp(rng);
    // alternate between crossing channels and floored channels
    std::vector<double> mod(n);
    const bool crossing = (iter % 2 == 0);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = grid.time(i);
      mod[i] = crossing ? std::abs(std::cos(kTwoPi * f * t))
                        : 0.2 + fl * (1.0 + std::cos(kTwoPi * f * t));
    }
    const auto rec = hyperpolar::recover_channel(mod, grid, +1);
    const auto oracle = hyperpolar::oracle_channel(mod, grid, +1);
    CHECK(oracle.exhaustive);
    REQUIRE(rec.segment_signs.size() == oracle.segment_signs.size());
    for (std::size_t i = 0; i < rec.segment_signs.size(); ++i)
      CHECK(rec.segment_signs[i] == oracle.segment_signs[i]);
  }
}

TEST_CASE("oracle falls back to greedy beyond the exhaustive limit") {
  const SampleGrid grid{0.0, 0.002};
  const std::size_t n = 2001;
  const auto mod =
      sample_abs([](double t) { return std::cos(kTwoPi * 6.0 * t); }, grid, n);
  const auto oracle = hyperpolar::oracle_channel(mod, grid, +1, 10);
  CHECK_FALSE(oracle.exhaustive);
  // greedy still alternates across true crossings
  for (std::size_t i = 1; i < oracle.segment_signs.size(); ++i)
    CHECK(oracle.segment_signs[i] == -oracle.segment_signs[i - 1]);
}

TEST_CASE("initial signs follow the quarter-plane of the phase range") {
  const auto q1 = hyperpolar::initial_signs(0.0, std::numbers::pi / 2.0);
  CHECK(q1.sign_re == +1);
  CHECK(q1.sign_im == +1);
  const auto q2 =
      hyperpolar::initial_signs(std::numbers::pi / 2.0, std::numbers::pi);
  CHECK(q2.sign_re == -1);
  CHECK(q2.sign_im == +1);
  const auto q3 =
      hyperpolar::initial_signs(-std::numbers::pi / 2.0, 0.0);
  CHECK(q3.sign_re == +1);
  CHECK(q3.sign_im == -1);
  const auto q4 =
      hyperpolar::initial_signs(std::numbers::pi, 3.0 * std::numbers::pi / 2.0);
  CHECK(q4.sign_re == -1);
  CHECK(q4.sign_im == -1);
}
