#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "levycredit/levy_model.hpp"
#include "oracle.hpp"

using namespace levycredit;

namespace {
const VgParams kPaperVg{-0.02, 0.1, 0.15, 0.01};
}

TEST_CASE("vg_decompose on the illustration parameters") {
  const VgDecomposition d = vg_decompose(kPaperVg);
  // mu_pm = sqrt(0.0001 + 0.45)/2 +- 0.005, nu_pm = mu_pm^2 * 0.1
  CHECK(d.pos.mean_rate == doctest::Approx(0.34044746235439016).epsilon(1e-15));
  CHECK(d.neg.mean_rate == doctest::Approx(0.33044746235439015).epsilon(1e-15));
  CHECK(d.pos.variance_rate ==
        doctest::Approx(0.011590447462354391).epsilon(1e-14));
  CHECK(d.neg.variance_rate ==
        doctest::Approx(0.010919552537645611).epsilon(1e-14));
  CHECK(d.c == -0.02);
  CHECK(d.pos.kind == SubordinatorKind::Gamma);
  CHECK(d.neg.kind == SubordinatorKind::Gamma);
}

TEST_CASE("vg_decompose algebraic identities hold to machine precision") {
  for (const VgParams p : {kPaperVg, VgParams{0.1, 0.4, 0.3, -0.2},
                           VgParams{0.0, 2.0, 0.05, 0.07}}) {
    const VgDecomposition d = vg_decompose(p);
    const double product = d.pos.mean_rate * d.neg.mean_rate;
    CHECK(product ==
          doctest::Approx(p.sigma * p.sigma / (2.0 * p.nu)).epsilon(1e-13));
    CHECK(d.pos.mean_rate - d.neg.mean_rate ==
          doctest::Approx(p.theta).epsilon(1e-10));
  }
}

TEST_CASE("vg_decompose symmetric and asymptotic cases") {
  const VgDecomposition sym = vg_decompose({0.0, 1.0, 1.0, 0.0});
  CHECK(sym.pos.mean_rate == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(sym.pos.mean_rate == sym.neg.mean_rate);

  // theta large: mu_plus ~ theta + O(1/theta), mu_minus -> 0+
  const VgDecomposition skew = vg_decompose({0.0, 1.0, 1.0, 100.0});
  CHECK(skew.pos.mean_rate > 100.0);
  CHECK(skew.pos.mean_rate < 100.011);
  CHECK(skew.neg.mean_rate > 0.0);
  CHECK(skew.neg.mean_rate < 0.011);
}

TEST_CASE("vg_decompose rejects bad parameters") {
  CHECK_THROWS_AS(vg_decompose({0.0, -0.1, 0.15, 0.0}), ParameterError);
  CHECK_THROWS_AS(vg_decompose({0.0, 0.1, 0.0, 0.0}), ParameterError);
  CHECK_THROWS_AS(LevyModel::drifted_gamma(0.1, 1.0, -1.0), ParameterError);
  CHECK_THROWS_AS(LevyModel::drifted_compound_poisson(0.1, 1.0, 0.0),
                  ParameterError);
  CHECK_THROWS_AS(LevyModel::drifted_compound_poisson(0.1, -1.0, 1.0),
                  ParameterError);
}

TEST_CASE("negative-jump Levy densities") {
  const LevyModel dcp = LevyModel::drifted_compound_poisson(0.0, 2.0, 3.0);
  CHECK(dcp.neg_levy_density(1e-12) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(dcp.neg_levy_density(1.0) ==
        doctest::Approx(6.0 * std::exp(-3.0)).epsilon(1e-14));

  const LevyModel dg = LevyModel::drifted_gamma(1.0, 1.0, 1.0);
  CHECK(dg.neg_levy_density(1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

  const LevyModel vg = LevyModel::variance_gamma(kPaperVg);
  CHECK(vg.neg_levy_density(0.1) ==
        doctest::Approx(4.849960306144198).epsilon(1e-12));

  CHECK_THROWS_AS(dcp.neg_levy_density(0.0), std::domain_error);
  CHECK_THROWS_AS(dg.neg_levy_density(-1.0), std::domain_error);

  const LevyModel drift_only = LevyModel::drifted_compound_poisson(1.0, 0.0, 0.0);
  CHECK(drift_only.neg_levy_density(0.5) == 0.0);
}

TEST_CASE("Laplace exponent of the negative side, closed forms") {
  CHECK(LevyModel::drifted_compound_poisson(0.0, 1.0, 1.0)
            .laplace_exponent_neg() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(LevyModel::drifted_gamma(1.0, 1.0, 1.0).laplace_exponent_neg() ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(LevyModel::drifted_compound_poisson(1.0, 0.0, 0.0)
            .laplace_exponent_neg() == 0.0);
}

TEST_CASE("Laplace exponent agrees with brute-force quadrature") {
  // int_0^inf (1 - e^-u) density(u) du via composite Simpson.
  const LevyModel dg = LevyModel::drifted_gamma(1.0, 1.0, 1.0);
  const auto integrand_gamma = [&](double u) {
    return u == 0.0 ? 1.0 : -std::expm1(-u) * dg.neg_levy_density(u);
  };
  const double quad = testoracle::simpson(integrand_gamma, 0.0, 60.0, 1 << 18);
  CHECK(dg.laplace_exponent_neg() == doctest::Approx(quad).epsilon(1e-8));

  const LevyModel dcp = LevyModel::drifted_compound_poisson(0.0, 1.5, 0.8);
  const auto integrand_cpe = [&](double u) {
    return u == 0.0 ? 0.0 : -std::expm1(-u) * dcp.neg_levy_density(u);
  };
  const double quad2 = testoracle::simpson(integrand_cpe, 0.0, 80.0, 1 << 18);
  CHECK(dcp.laplace_exponent_neg() == doctest::Approx(quad2).epsilon(1e-8));
}

TEST_CASE("Levy measures have the stated finite first moment") {
  // int_0^inf x density(x) dx: rho/beta for CPE, mu for Gamma.
  const LevyModel dcp = LevyModel::drifted_compound_poisson(0.0, 2.0, 0.5);
  const double m1 = testoracle::simpson(
      [&](double x) { return x == 0.0 ? 0.0 : x * dcp.neg_levy_density(x); },
      0.0, 120.0, 1 << 18);
  CHECK(m1 == doctest::Approx(2.0 / 0.5).epsilon(1e-8));

  const LevyModel vg = LevyModel::variance_gamma(kPaperVg);
  // x * density(x) -> shape_per_time as x -> 0 for the gamma family
  const double at_zero = vg.neg_jumps().gamma_shape_per_time();
  const double m2 = testoracle::simpson(
      [&](double x) { return x == 0.0 ? at_zero : x * vg.neg_levy_density(x); },
      0.0, 10.0, 1 << 18);
  CHECK(m2 == doctest::Approx(vg.neg_jumps().mean_rate).epsilon(1e-8));
}

TEST_CASE("canonical form bookkeeping") {
  const LevyModel vg = LevyModel::variance_gamma(kPaperVg);
  CHECK(vg.family() == ModelFamily::VarianceGamma);
  CHECK(vg.drift() == -0.02);
  CHECK_FALSE(vg.spectrally_negative());
  REQUIRE(vg.vg_params().has_value());
  CHECK(vg.vg_params()->sigma == 0.15);

  const LevyModel dg = LevyModel::drifted_gamma(0.3, 1.0, 2.0);
  CHECK(dg.spectrally_negative());
  CHECK(dg.pos_jumps().is_zero());
  CHECK(dg.neg_jumps().gamma_shape_per_time() == doctest::Approx(0.5));
  CHECK(dg.neg_jumps().gamma_rate() == doctest::Approx(0.5));

  const LevyModel two_sided =
      LevyModel::drifted_compound_poisson(1.0, 1.0, 1.0, 2.0, 3.0);
  CHECK_FALSE(two_sided.spectrally_negative());
  CHECK(two_sided.pos_jumps().rate == 2.0);
  CHECK(two_sided.neg_jumps().mean_jump_per_time() == doctest::Approx(1.0));
  CHECK(two_sided.pos_jumps().mean_jump_per_time() ==
        doctest::Approx(2.0 / 3.0));
}
