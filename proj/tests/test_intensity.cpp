#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "levycredit/intensity.hpp"
#include "levycredit/mc_stats.hpp"
#include "oracle.hpp"

using namespace levycredit;

namespace {

const VgParams kPaperVg{-0.02, 0.1, 0.15, 0.01};

std::vector<double> log_spaced_gaps(double beta, int count) {
  // 0 plus log-spaced points up to 10/beta.
  std::vector<double> gaps{0.0};
  const double lo = std::log(1e-4 / beta);
  const double hi = std::log(10.0 / beta);
  for (int i = 0; i < count - 1; ++i)
    gaps.push_back(std::exp(lo + (hi - lo) * i / double(count - 2)));
  return gaps;
}

}  // namespace

TEST_CASE("compound Poisson closed form vs quadrature route") {
  for (const double rho : {0.5, 1.0, 2.0}) {
    for (const double beta : {0.5, 1.0, 2.0}) {
      const PiEvaluator ev(LevyModel::drifted_compound_poisson(0.0, rho, beta));
      for (const double gap : log_spaced_gaps(beta, 16)) {
        const double closed = ev.big_pi(gap);
        const double quad = ev.big_pi_quadrature(gap);
        CHECK(std::abs(closed - quad) <= 1e-8 * closed);
        CHECK(closed ==
              doctest::Approx(testoracle::pi_cpe_reference(rho, beta, gap))
                  .epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("Pi values for the gamma family against independent references") {
  const PiEvaluator ev(LevyModel::drifted_gamma(1.0, 1.0, 1.0));
  CHECK(ev.big_pi(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(ev.big_pi(0.25) == doctest::Approx(0.3255191111604834).epsilon(1e-9));
  CHECK(ev.big_pi(1.0) == doctest::Approx(0.08645856473543077).epsilon(1e-9));
  CHECK(ev.big_pi(2.0) == doctest::Approx(0.020974663734058808).epsilon(1e-9));

  // exponential-integral route
  for (const double x : {0.1, 0.5, 1.0, 3.0})
    CHECK(ev.big_pi(x) ==
          doctest::Approx(testoracle::pi_gamma_reference(1.0, 1.0, x))
              .epsilon(1e-9));

  // brute-force Simpson at x = 0, where the density is singular
  const double brute = testoracle::simpson(
      [](double u) {
        return u == 0.0 ? 1.0 : -std::expm1(-u) * std::exp(-u) / u;
      },
      0.0, 60.0, 1 << 19);
  CHECK(ev.big_pi(0.0) == doctest::Approx(brute).epsilon(1e-10));
}

TEST_CASE("Pi for the variance gamma illustration parameters") {
  const PiEvaluator ev(LevyModel::variance_gamma(kPaperVg));
  CHECK(ev.big_pi(0.0) == doctest::Approx(0.32510505981001536).epsilon(1e-9));
  CHECK(ev.big_pi(0.0585) ==
        doctest::Approx(0.01635169293716887).epsilon(1e-9));
  CHECK(ev.big_pi(0.1) ==
        doctest::Approx(0.0033135746522315397).epsilon(1e-9));
  CHECK(ev.pi_upper_bound() ==
        doctest::Approx(0.32510505981001536).epsilon(1e-12));
}

TEST_CASE("intensity with and without the drift term") {
  const PiEvaluator vg(LevyModel::variance_gamma(kPaperVg));
  // c = -0.02 < 0: at gap 0 the intensity sits above Pi(0) by |c|
  CHECK(vg.intensity_at({0.0, true}) ==
        doctest::Approx(0.3451050598100154).epsilon(1e-9));
  CHECK(vg.intensity_at({0.0585, true}) ==
        doctest::Approx(0.01635169293716887).epsilon(1e-9));
  CHECK(vg.intensity_at({0.0, false}) == 0.0);

  // positive drift: no drift term even at gap 0
  const PiEvaluator dg(LevyModel::drifted_gamma(1.0, 1.0, 1.0));
  CHECK(dg.intensity_at({0.0, true}) == dg.big_pi(0.0));

  CHECK_THROWS_AS(vg.intensity_at({-0.1, true}), std::domain_error);
  CHECK_THROWS_AS(vg.big_pi(-1e-12), std::domain_error);
}

TEST_CASE("Pi is nonincreasing and bounded by Pi(0)") {
  const LevyModel models[] = {
      LevyModel::drifted_compound_poisson(-0.5, 1.0, 2.0),
      LevyModel::drifted_gamma(0.5, 1.0, 0.7),
      LevyModel::variance_gamma(kPaperVg)};
  RngStream rng(31, 0);
  for (const LevyModel& m : models) {
    const PiEvaluator ev(m);
    std::vector<double> gaps;
    for (int i = 0; i < 200; ++i) gaps.push_back(4.0 * rng.next_uniform());
    std::sort(gaps.begin(), gaps.end());
    double prev = ev.big_pi(0.0);
    CHECK(prev <= ev.pi_upper_bound() * (1 + 1e-9));
    // Pi(0) < int u pi(du), the mean jump rate
    CHECK(prev < m.neg_jumps().mean_jump_per_time());
    for (const double g : gaps) {
      const double value = ev.big_pi(g);
      CHECK(value > 0.0);
      CHECK(value <= prev * (1 + 1e-9));
      prev = value;
    }
  }
}

TEST_CASE("Pi is continuous in the gap") {
  const PiEvaluator ev(LevyModel::variance_gamma(kPaperVg));
  RngStream rng(37, 0);
  for (int i = 0; i < 20; ++i) {
    const double x = 0.5 * rng.next_uniform();
    const double d1 = std::abs(ev.big_pi(x + 1e-4) - ev.big_pi(x));
    const double d2 = std::abs(ev.big_pi(x + 1e-7) - ev.big_pi(x));
    CHECK(d2 <= d1);
    CHECK(d2 < 1e-4);
  }
}

TEST_CASE("quadrature failure carries the achieved error") {
  IntensitySettings settings;
  settings.quadrature.abs_tol = 1e-16;
  settings.quadrature.rel_tol = 1e-16;
  settings.quadrature.max_intervals = 1;
  const PiEvaluator ev(LevyModel::drifted_gamma(1.0, 1.0, 1.0), settings);
  try {
    (void)ev.big_pi(0.3);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_CASE("memoized evaluations are bitwise stable and thread tolerant") {
  const PiEvaluator ev(LevyModel::variance_gamma(kPaperVg));
  const double first = ev.big_pi(0.123456);
  CHECK(ev.big_pi(0.123456) == first);

  std::vector<double> results(64);
  parallel_for(64, 8, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      results[i] = ev.big_pi(0.05 * (i % 8));
  });
  for (std::size_t i = 8; i < 64; ++i)
    CHECK(results[i] == results[i % 8]);
}

TEST_CASE("pi_scale hook rescales the production route only") {
  IntensitySettings settings;
  settings.pi_scale = 1.5;
  const LevyModel m = LevyModel::drifted_compound_poisson(0.0, 1.0, 1.0);
  const PiEvaluator scaled(m, settings);
  const PiEvaluator plain(m);
  CHECK(scaled.big_pi(0.2) == doctest::Approx(1.5 * plain.big_pi(0.2)));
  CHECK(scaled.big_pi_quadrature(0.2) ==
        doctest::Approx(plain.big_pi_quadrature(0.2)));
}

TEST_CASE("intensity series over hand-built paths") {
  const LevyModel m = LevyModel::variance_gamma(kPaperVg);  // c < 0
  const PiEvaluator ev(m);

  Path flat;
  flat.scheme = PathScheme::Grid;
  flat.times = {0.0, 0.5, 1.0, 1.5};
  flat.values = {0.0, 0.0, 0.0, 0.0};
  flat.run_min = {0.0, 0.0, 0.0, 0.0};
  const IntensitySeries constant = ev.intensity_series(flat, std::nullopt);
  for (const double lambda : constant.lambdas)
    CHECK(lambda == doctest::Approx(0.02 + ev.big_pi(0.0)).epsilon(1e-12));

  Path rising;
  rising.scheme = PathScheme::Grid;
  rising.times = {0.0, 1.0, 2.0};
  rising.values = {0.0, 0.3, 0.6};
  rising.run_min = {0.0, 0.0, 0.0};
  const IntensitySeries series = ev.intensity_series(rising, std::nullopt);
  CHECK(series.lambdas[1] == doctest::Approx(ev.big_pi(0.3)).epsilon(1e-12));
  CHECK(series.lambdas[2] == doctest::Approx(ev.big_pi(0.6)).epsilon(1e-12));
  CHECK(series.gaps[2] == 0.6);

  // values at and after the default time are zero
  const IntensitySeries stopped = ev.intensity_series(rising, 1.0);
  CHECK(stopped.lambdas[0] > 0.0);
  CHECK(stopped.lambdas[1] == 0.0);
  CHECK(stopped.lambdas[2] == 0.0);

  Path corrupt = rising;
  corrupt.run_min = {0.0, 0.1, 0.0};
  CHECK_THROWS_AS(ev.intensity_series(corrupt, std::nullopt),
                  PathIntegrityError);
}
