#include "levycredit/intensity.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace levycredit {

namespace {

// Key for the memo table: the gap rounded to 12 significant digits.
std::uint64_t memo_key(double gap) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.11e", gap);
  const double rounded = std::strtod(buffer, nullptr);
  std::uint64_t key;
  std::memcpy(&key, &rounded, sizeof key);
  return key;
}

// Upper integration limit U such that the integrand tail beyond U is below
// tail_budget, using the exponential bound on the Levy density.
double tail_cutoff(const SubordinatorSpec& sub, double gap,
                   double tail_budget) {
  if (sub.kind == SubordinatorKind::CompoundPoissonExp) {
    // tail(U) <= rate * exp(-beta (gap + U))
    const double u = std::log(sub.rate / tail_budget) / sub.beta - gap;
    return std::max(1.0, u);
  }
  // Gamma: tail(U) <= a exp(-b (gap + U)) / (b (gap + U)), a = mu^2/nu,
  // b = mu/nu.
  const double a = sub.gamma_shape_per_time();
  const double b = sub.gamma_rate();
  double u = std::max(1.0, 2.0 / b);
  while (a * std::exp(-b * (gap + u)) / (b * (gap + u)) > tail_budget &&
         u < 1e6)
    u *= 2.0;
  return u;
}

}  // namespace

PiEvaluator::PiEvaluator(const LevyModel& model, IntensitySettings settings)
    : model_(model),
      settings_(settings),
      pi_zero_(settings.pi_scale * model.laplace_exponent_neg()) {}

double PiEvaluator::big_pi(double gap) const {
  if (!(gap >= 0.0)) throw std::domain_error("big_pi: gap must be >= 0");
  const SubordinatorSpec& neg = model_.neg_jumps();
  switch (neg.kind) {
    case SubordinatorKind::Zero:
      return 0.0;
    case SubordinatorKind::CompoundPoissonExp:
      return settings_.pi_scale * neg.rate / (1.0 + neg.beta) *
             std::exp(-neg.beta * gap);
    case SubordinatorKind::Gamma:
      return settings_.pi_scale * memoized_quadrature_pi(gap);
  }
  return 0.0;
}

double PiEvaluator::big_pi_quadrature(double gap) const {
  if (!(gap >= 0.0))
    throw std::domain_error("big_pi_quadrature: gap must be >= 0");
  if (model_.neg_jumps().is_zero()) return 0.0;
  return quadrature_pi(gap);
}

double PiEvaluator::quadrature_pi(double gap) const {
  const SubordinatorSpec& neg = model_.neg_jumps();

  // Pi(gap) <= Pi(0) e^{-decay gap} (the density shifts by gap); shrink the
  // absolute tolerance with this bound so relative accuracy survives far
  // into the tail, where Pi itself is tiny.
  const double decay = neg.kind == SubordinatorKind::CompoundPoissonExp
                           ? neg.beta
                           : neg.gamma_rate();
  const double magnitude =
      model_.laplace_exponent_neg() * std::exp(-decay * gap);
  QuadratureSettings quad = settings_.quadrature;
  quad.abs_tol = std::max(
      1e-300, std::min(quad.abs_tol, quad.rel_tol * magnitude));
  const double cutoff = tail_cutoff(neg, gap, 0.1 * quad.abs_tol);

  if (neg.kind == SubordinatorKind::Gamma) {
    const double a = neg.gamma_shape_per_time();
    const double b = neg.gamma_rate();
    // -expm1(-u)/(gap+u) is stable down to u -> 0: at gap = 0 the
    // (1 - e^-u) factor cancels the u^-1 singularity of the density.
    const auto integrand = [a, b, gap](double u) {
      return -std::expm1(-u) * a * std::exp(-b * (gap + u)) / (gap + u);
    };
    return integrate_adaptive(integrand, 0.0, cutoff, quad).value;
  }

  const double rate = neg.rate;
  const double beta = neg.beta;
  const auto integrand = [rate, beta, gap](double u) {
    return -std::expm1(-u) * rate * beta * std::exp(-beta * (gap + u));
  };
  return integrate_adaptive(integrand, 0.0, cutoff, quad).value;
}

double PiEvaluator::memoized_quadrature_pi(double gap) const {
  const std::uint64_t key = memo_key(gap);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const double value = quadrature_pi(gap);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_.size() < settings_.memo_capacity) memo_.emplace(key, value);
  }
  return value;
}

double PiEvaluator::intensity_at(const GapState& state) const {
  if (!(state.gap >= 0.0))
    throw std::domain_error("intensity_at: gap must be >= 0");
  if (!state.predefault) return 0.0;
  double lambda = big_pi(state.gap);
  if (model_.drift() < 0.0 && state.gap <= settings_.gap_epsilon)
    lambda += -model_.drift();
  return lambda;
}

IntensitySeries PiEvaluator::intensity_series(
    const Path& path, std::optional<double> default_time) const {
  path.validate();
  IntensitySeries series;
  series.default_time = default_time;
  const std::size_t n = path.size();
  series.times.reserve(n);
  series.gaps.reserve(n);
  series.pi_values.reserve(n);
  series.lambdas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = path.times[i];
    const double gap = path.values[i] - path.run_min[i];
    const bool predefault = !default_time || t < *default_time;
    series.times.push_back(t);
    series.gaps.push_back(gap);
    series.pi_values.push_back(big_pi(gap));
    series.lambdas.push_back(intensity_at({gap, predefault}));
  }
  return series;
}

}  // namespace levycredit
