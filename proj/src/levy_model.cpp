#include "levycredit/levy_model.hpp"

#include <cmath>
#include <string>

namespace levycredit {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw ParameterError(std::string(name) + ": must be finite");
}

void require_positive(double v, const char* name) {
  require_finite(v, name);
  if (!(v > 0.0)) throw ParameterError(std::string(name) + ": must be > 0");
}

}  // namespace

SubordinatorSpec SubordinatorSpec::compound_poisson_exp(double rate,
                                                        double beta) {
  require_positive(rate, "compound_poisson_exp.rate");
  require_positive(beta, "compound_poisson_exp.beta");
  SubordinatorSpec s;
  s.kind = SubordinatorKind::CompoundPoissonExp;
  s.rate = rate;
  s.beta = beta;
  return s;
}

SubordinatorSpec SubordinatorSpec::gamma(double mean_rate,
                                         double variance_rate) {
  require_positive(mean_rate, "gamma.mean_rate");
  require_positive(variance_rate, "gamma.variance_rate");
  SubordinatorSpec s;
  s.kind = SubordinatorKind::Gamma;
  s.mean_rate = mean_rate;
  s.variance_rate = variance_rate;
  return s;
}

double SubordinatorSpec::levy_density(double x) const {
  if (!(x > 0.0))
    throw std::domain_error("levy_density: x must be > 0");
  switch (kind) {
    case SubordinatorKind::Zero:
      return 0.0;
    case SubordinatorKind::CompoundPoissonExp:
      return rate * beta * std::exp(-beta * x);
    case SubordinatorKind::Gamma:
      return gamma_shape_per_time() * std::exp(-gamma_rate() * x) / x;
  }
  return 0.0;
}

double SubordinatorSpec::mean_jump_per_time() const {
  switch (kind) {
    case SubordinatorKind::Zero:
      return 0.0;
    case SubordinatorKind::CompoundPoissonExp:
      return rate / beta;
    case SubordinatorKind::Gamma:
      return mean_rate;
  }
  return 0.0;
}

double SubordinatorSpec::laplace_exponent_at_one() const {
  switch (kind) {
    case SubordinatorKind::Zero:
      return 0.0;
    case SubordinatorKind::CompoundPoissonExp:
      // int (1 - e^-u) rate beta e^{-beta u} du = rate / (1 + beta)
      return rate / (1.0 + beta);
    case SubordinatorKind::Gamma:
      // -ln(1 + 1/gamma_rate)^{-shape} = (mu^2/nu) ln(1 + nu/mu)
      return gamma_shape_per_time() * std::log1p(variance_rate / mean_rate);
  }
  return 0.0;
}

VgDecomposition vg_decompose(const VgParams& params) {
  require_finite(params.c, "vg.c");
  require_finite(params.theta, "vg.theta");
  require_positive(params.nu, "vg.nu");
  require_positive(params.sigma, "vg.sigma");

  const double root = std::sqrt(params.theta * params.theta +
                                2.0 * params.sigma * params.sigma / params.nu);
  const double mu_plus = 0.5 * root + 0.5 * params.theta;
  const double mu_minus = 0.5 * root - 0.5 * params.theta;
  VgDecomposition d;
  d.c = params.c;
  d.pos = SubordinatorSpec::gamma(mu_plus, mu_plus * mu_plus * params.nu);
  d.neg = SubordinatorSpec::gamma(mu_minus, mu_minus * mu_minus * params.nu);
  return d;
}

LevyModel LevyModel::drifted_compound_poisson(double c, double rho_neg,
                                              double beta_neg, double rho_pos,
                                              double beta_pos) {
  require_finite(c, "dcp.c");
  require_finite(rho_neg, "dcp.rho");
  require_finite(rho_pos, "dcp.rho_pos");
  if (rho_neg < 0.0) throw ParameterError("dcp.rho: must be >= 0");
  if (rho_pos < 0.0) throw ParameterError("dcp.rho_pos: must be >= 0");

  SubordinatorSpec neg = rho_neg > 0.0
                             ? SubordinatorSpec::compound_poisson_exp(rho_neg, beta_neg)
                             : SubordinatorSpec::zero();
  SubordinatorSpec pos = rho_pos > 0.0
                             ? SubordinatorSpec::compound_poisson_exp(rho_pos, beta_pos)
                             : SubordinatorSpec::zero();
  return LevyModel(ModelFamily::DriftedCompoundPoisson, c, neg, pos);
}

LevyModel LevyModel::drifted_gamma(double c, double mean_rate,
                                   double variance_rate) {
  require_finite(c, "dgamma.c");
  return LevyModel(ModelFamily::DriftedGamma, c,
                   SubordinatorSpec::gamma(mean_rate, variance_rate),
                   SubordinatorSpec::zero());
}

LevyModel LevyModel::variance_gamma(const VgParams& params) {
  const VgDecomposition d = vg_decompose(params);
  LevyModel m(ModelFamily::VarianceGamma, d.c, d.neg, d.pos);
  m.vg_params_ = params;
  return m;
}

}  // namespace levycredit
