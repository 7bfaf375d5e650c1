#pragma once

#include <optional>

#include "levycredit/errors.hpp"

namespace levycredit {

enum class SubordinatorKind { Zero, CompoundPoissonExp, Gamma };

// Pure-jump subordinator specification, parameterized per unit time.
//
//   CompoundPoissonExp: Poisson arrivals at `rate`, Exp(`beta`) jump sizes;
//                       Levy density rate * beta * exp(-beta x) on x > 0.
//   Gamma:              mean rate mu, variance rate nu; Levy density
//                       (mu^2/nu) * exp(-(mu/nu) x) / x on x > 0.
//   Zero:               no jumps (empty Levy measure).
struct SubordinatorSpec {
  SubordinatorKind kind = SubordinatorKind::Zero;
  double rate = 0.0;           // CompoundPoissonExp
  double beta = 0.0;           // CompoundPoissonExp
  double mean_rate = 0.0;      // Gamma (mu)
  double variance_rate = 0.0;  // Gamma (nu)

  static SubordinatorSpec zero() { return {}; }
  static SubordinatorSpec compound_poisson_exp(double rate, double beta);
  static SubordinatorSpec gamma(double mean_rate, double variance_rate);

  bool is_zero() const { return kind == SubordinatorKind::Zero; }

  // Gamma increment over dt is Gamma(shape = (mu^2/nu) dt, rate = mu/nu).
  double gamma_shape_per_time() const { return mean_rate * mean_rate / variance_rate; }
  double gamma_rate() const { return mean_rate / variance_rate; }

  // Levy density at x > 0; throws std::domain_error for x <= 0.
  double levy_density(double x) const;

  // First moment of the Levy measure, int_0^inf x pi(dx).
  double mean_jump_per_time() const;

  // Laplace exponent at 1: -ln E[exp(-S_1)] = int_0^inf (1 - e^-u) pi(du).
  double laplace_exponent_at_one() const;
};

// Variance gamma parameters: drift c plus a Brownian motion with drift
// theta and volatility sigma, time-changed by a gamma clock of variance
// rate nu.
struct VgParams {
  double c = 0.0;
  double nu = 0.0;
  double sigma = 0.0;
  double theta = 0.0;
};

struct VgDecomposition {
  double c = 0.0;
  SubordinatorSpec pos;  // Gamma(mu_plus, nu_plus)
  SubordinatorSpec neg;  // Gamma(mu_minus, nu_minus)
};

// Difference-of-gammas form of the variance gamma process:
//   mu_pm = sqrt(theta^2 + 2 sigma^2 / nu) / 2 +- theta / 2,
//   nu_pm = mu_pm^2 * nu.
// Exact identities: mu_plus * mu_minus = sigma^2 / (2 nu) and
// mu_plus - mu_minus = theta.
VgDecomposition vg_decompose(const VgParams& params);

enum class ModelFamily { DriftedCompoundPoisson, DriftedGamma, VarianceGamma };

// Finite-variation Levy model in the canonical form
//   X_t = c t - S_t + S'_t,
// with S, S' independent subordinators. The canonical triple is computed
// eagerly at construction; every downstream module consumes only
// (drift, neg_jumps, pos_jumps). Immutable after construction.
class LevyModel {
 public:
  // X_t = c t - sum_{i<=M_t} Y_i + sum_{i<=M'_t} Y'_i with Y ~ Exp(beta_neg)
  // at rate rho_neg and Y' ~ Exp(beta_pos) at rate rho_pos. A zero rate
  // turns the corresponding side off.
  static LevyModel drifted_compound_poisson(double c, double rho_neg,
                                            double beta_neg,
                                            double rho_pos = 0.0,
                                            double beta_pos = 0.0);

  // X_t = c t - G_t with G a gamma subordinator of mean rate mu and
  // variance rate nu.
  static LevyModel drifted_gamma(double c, double mean_rate,
                                 double variance_rate);

  static LevyModel variance_gamma(const VgParams& params);

  ModelFamily family() const { return family_; }
  double drift() const { return drift_; }
  const SubordinatorSpec& neg_jumps() const { return neg_; }
  const SubordinatorSpec& pos_jumps() const { return pos_; }
  bool spectrally_negative() const { return pos_.is_zero(); }
  const std::optional<VgParams>& vg_params() const { return vg_params_; }

  // Levy density of the negative-jump subordinator S at x > 0.
  double neg_levy_density(double x) const { return neg_.levy_density(x); }

  // Pi(0) = -ln E[exp(-S_1)], in closed form per family.
  double laplace_exponent_neg() const { return neg_.laplace_exponent_at_one(); }

 private:
  LevyModel(ModelFamily family, double drift, SubordinatorSpec neg,
            SubordinatorSpec pos)
      : family_(family), drift_(drift), neg_(neg), pos_(pos) {}

  ModelFamily family_;
  double drift_;
  SubordinatorSpec neg_;
  SubordinatorSpec pos_;
  std::optional<VgParams> vg_params_;
};

}  // namespace levycredit
