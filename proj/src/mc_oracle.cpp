#include "levycredit/mc_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "levycredit/errors.hpp"

namespace levycredit {

namespace {

SimScheme inner_scheme(const LevyModel& model, double h,
                       const OracleConfig& config) {
  if (model.family() == ModelFamily::DriftedCompoundPoisson)
    return SimScheme::event_driven();
  // dt = h / inner_steps for short likelihood windows; long horizons
  // (spread curves) fall back to the per-year resolution instead.
  return SimScheme::grid(std::max(static_cast<double>(config.inner_steps) / h,
                                  config.steps_per_year));
}

SimScheme horizon_scheme(const LevyModel& model, const OracleConfig& config) {
  if (model.family() == ModelFamily::DriftedCompoundPoisson)
    return SimScheme::event_driven();
  return SimScheme::grid(config.steps_per_year);
}

// Trapezoid of the intensity over [0, T and tau] along a grid path,
// treating every point up to the stopping time as pre-default (the
// integrand's left limit).
double grid_compensator_integral(const PiEvaluator& evaluator, const Path& path,
                                 double stop_time) {
  double integral = 0.0;
  double prev_t = path.times[0];
  double prev_lambda =
      evaluator.intensity_at({path.values[0] - path.run_min[0], true});
  for (std::size_t i = 1; i < path.size() && prev_t < stop_time; ++i) {
    const double t = std::min(path.times[i], stop_time);
    const double lambda =
        evaluator.intensity_at({path.values[i] - path.run_min[i], true});
    integral += 0.5 * (prev_lambda + lambda) * (t - prev_t);
    prev_t = t;
    prev_lambda = lambda;
  }
  return integral;
}

// Exact-gap compensator integral for event-driven paths. Within each
// linear segment the gap is either strictly positive (trapezoid with
// sub-steps of at most dt_max) or exactly zero (the intensity is constant
// there, integrated as a rectangle). Segments where the path descends into
// a new minimum are split at the exact crossing point.
double event_compensator_integral(const PiEvaluator& evaluator,
                                  const Path& path, double stop_time,
                                  double dt_max) {
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double t0 = path.times[i];
    if (t0 >= stop_time) break;
    const double t1 = std::min(path.times[i + 1], stop_time);
    if (t1 <= t0) continue;  // jump pair at one instant
    const double x0 = path.values[i];
    const double m0 = path.run_min[i];
    const double slope = (path.values[i + 1] - x0) / (path.times[i + 1] - t0);

    // Time at which the gap reaches zero (never, for ascending segments).
    double t_flat = t1;
    if (slope < 0.0) t_flat = x0 > m0 ? t0 + (m0 - x0) / slope : t0;
    t_flat = std::min(t_flat, t1);

    if (t_flat > t0) {
      // Positive-gap part: gap(s) = x0 + slope (s - t0) - m0.
      const std::size_t n_sub = static_cast<std::size_t>(
          std::max(1.0, std::ceil((t_flat - t0) / dt_max)));
      const double dt = (t_flat - t0) / static_cast<double>(n_sub);
      double prev_lambda = evaluator.intensity_at({x0 - m0, true});
      for (std::size_t k = 1; k <= n_sub; ++k) {
        const double s = k == n_sub ? t_flat : t0 + dt * static_cast<double>(k);
        const double gap = std::max(0.0, x0 + slope * (s - t0) - m0);
        const double lambda = evaluator.intensity_at({gap, true});
        integral += 0.5 * (prev_lambda + lambda) * dt;
        prev_lambda = lambda;
      }
    }
    if (t1 > t_flat)
      integral += evaluator.intensity_at({0.0, true}) * (t1 - t_flat);
  }
  return integral;
}

}  // namespace

void OracleConfig::validate() const {
  if (n_samples < 2)
    throw ParameterError("OracleConfig.n_samples: need at least 2 samples");
  if (inner_steps < 1)
    throw ParameterError("OracleConfig.inner_steps: must be >= 1");
  if (!(steps_per_year > 0.0))
    throw ParameterError("OracleConfig.steps_per_year: must be > 0");
  if (!(confidence_multiplier > 0.0))
    throw ParameterError("OracleConfig.confidence_multiplier: must be > 0");
  for (std::size_t i = 0; i < h_schedule.size(); ++i) {
    if (!(h_schedule[i] > 0.0))
      throw ParameterError("OracleConfig.h_schedule: entries must be > 0");
    if (i > 0 && !(h_schedule[i] < h_schedule[i - 1]))
      throw ParameterError(
          "OracleConfig.h_schedule: must be strictly decreasing");
  }
}

std::vector<double> min_shortfall_masses(const LevyModel& model, double gap,
                                         double h, const OracleConfig& config,
                                         const RunSeed& seed) {
  if (!(gap >= 0.0))
    throw std::domain_error("min_shortfall_masses: gap must be >= 0");
  if (!(h > 0.0)) throw ParameterError("min_shortfall_masses: h must be > 0");
  config.validate();

  const SimScheme scheme = inner_scheme(model, h, config);
  std::vector<double> masses(config.n_samples);
  parallel_for(config.n_samples, resolve_thread_count(config.n_threads),
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   RngStream rng = seed.path_stream(i);
                   const double running_min =
                       simulate_running_min(model, h, scheme, rng);
                   const double shortfall = -gap - running_min;
                   masses[i] =
                       shortfall > 0.0 ? -std::expm1(-shortfall) : 0.0;
                 }
               });
  return masses;
}

McEstimate estimate_lambda_h(const LevyModel& model, double gap, double h,
                             const OracleConfig& config, const RunSeed& seed) {
  const std::vector<double> masses =
      min_shortfall_masses(model, gap, h, config, seed);
  McEstimate estimate = summarize(masses, seed);
  estimate.mean /= h;
  estimate.std_error /= h;
  return estimate;
}

std::vector<McEstimate> estimate_lambda_h_schedule(const LevyModel& model,
                                                   double gap,
                                                   const OracleConfig& config,
                                                   const RunSeed& seed) {
  config.validate();
  std::vector<McEstimate> estimates;
  estimates.reserve(config.h_schedule.size());
  for (const double h : config.h_schedule)
    estimates.push_back(estimate_lambda_h(model, gap, h, config, seed));
  return estimates;
}

McEstimate martingale_residual(const LevyModel& model, double horizon,
                               const OracleConfig& config,
                               const RunSeed& seed) {
  if (!(horizon > 0.0))
    throw ParameterError("martingale_residual: horizon must be > 0");
  config.validate();

  const PiEvaluator evaluator(model);
  const SimScheme scheme = horizon_scheme(model, config);
  const double dt_max = 1.0 / config.steps_per_year;

  std::vector<double> residuals(config.n_samples);
  parallel_for(
      config.n_samples, resolve_thread_count(config.n_threads),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          RngStream path_rng = seed.path_stream(i);
          const Path path = simulate_path(model, horizon, scheme, path_rng);
          RngStream barrier_rng = seed.barrier_stream(i);
          const Barrier barrier = sample_barrier(barrier_rng);
          const auto tau = default_time(path, barrier);
          const double stop_time = tau ? std::min(*tau, horizon) : horizon;
          const double compensator =
              path.scheme == PathScheme::EventDriven
                  ? event_compensator_integral(evaluator, path, stop_time,
                                               dt_max)
                  : grid_compensator_integral(evaluator, path, stop_time);
          residuals[i] = (tau && *tau <= horizon ? 1.0 : 0.0) - compensator;
        }
      });
  return summarize(residuals, seed);
}

BallotReport ballot_check(const LevyModel& model, double t,
                          std::size_t n_bins, const OracleConfig& config,
                          const RunSeed& seed) {
  if (!model.spectrally_negative() || !(model.drift() > 0.0))
    throw ParameterError(
        "ballot_check: requires a spectrally negative model with c > 0");
  if (!(t > 0.0)) throw ParameterError("ballot_check: t must be > 0");
  if (n_bins < 1) throw ParameterError("ballot_check: need at least one bin");
  config.validate();

  const SimScheme scheme = horizon_scheme(model, config);
  const double ct = model.drift() * t;
  const std::size_t n = config.n_samples;

  std::vector<double> terminal(n);
  std::vector<char> survived(n);
  parallel_for(n, resolve_thread_count(config.n_threads),
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   RngStream rng = seed.path_stream(i);
                   const Path path = simulate_path(model, t, scheme, rng);
                   terminal[i] = path.values.back();
                   // First passage strictly below zero: with no upward
                   // jumps, any crossing shows up in a stored value.
                   bool stayed_nonnegative = true;
                   for (const double v : path.values)
                     if (v < 0.0) {
                       stayed_nonnegative = false;
                       break;
                     }
                   survived[i] = stayed_nonnegative ? 1 : 0;
                 }
               });

  BallotReport report;
  report.t = t;
  report.ct = ct;
  report.bins.resize(n_bins);
  std::vector<double> scratch(n);

  for (std::size_t b = 0; b < n_bins; ++b) {
    BallotBin& bin = report.bins[b];
    bin.lo = ct * static_cast<double>(b) / static_cast<double>(n_bins);
    bin.hi = ct * static_cast<double>(b + 1) / static_cast<double>(n_bins);
    const bool last = b + 1 == n_bins;

    const auto in_bin = [&](double x) {
      return x >= bin.lo && (last ? x <= bin.hi : x < bin.hi);
    };
    for (std::size_t i = 0; i < n; ++i)
      scratch[i] = (survived[i] && in_bin(terminal[i])) ? 1.0 : 0.0;
    bin.first_passage_side = summarize(scratch, seed);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = terminal[i];
      scratch[i] = (x >= 0.0 && x <= ct && in_bin(x)) ? x / ct : 0.0;
    }
    bin.marginal_side = summarize(scratch, seed);
  }

  for (std::size_t i = 0; i < n; ++i) scratch[i] = survived[i] ? 1.0 : 0.0;
  report.p_no_passage = summarize(scratch, seed);
  return report;
}

BoundCheckReport uniform_bound_check(const LevyModel& model,
                                     std::span<const double> gaps,
                                     std::span<const double> h_schedule,
                                     const OracleConfig& config,
                                     const RunSeed& seed) {
  BoundCheckReport report;
  report.limit =
      -std::min(model.drift(), 0.0) + model.laplace_exponent_neg();
  report.all_ok = true;
  OracleConfig run = config;
  for (const double gap : gaps) {
    for (const double h : h_schedule) {
      run.h_schedule = {h};
      BoundCheckRow row;
      row.gap = gap;
      row.h = h;
      row.estimate = estimate_lambda_h(model, gap, h, run, seed);
      row.ok = row.estimate.mean -
                   config.confidence_multiplier * row.estimate.std_error <=
               report.limit;
      report.all_ok = report.all_ok && row.ok;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace levycredit
