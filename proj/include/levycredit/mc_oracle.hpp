#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "levycredit/intensity.hpp"
#include "levycredit/levy_model.hpp"
#include "levycredit/mc_stats.hpp"
#include "levycredit/path_sim.hpp"

namespace levycredit {

struct OracleConfig {
  std::size_t n_samples = 100000;
  // Horizons for the finite-h likelihood, strictly decreasing. The h -> 0
  // limit is reported along this fixed schedule rather than extrapolated.
  std::vector<double> h_schedule = {1e-2, 1e-3, 1e-4};
  // Grid paths over [0, h] use at least this many steps (dt = h/steps).
  std::size_t inner_steps = 256;
  // Resolution for horizon-scale work: grid paths and the trapezoid rule
  // of the compensator integral.
  double steps_per_year = 2048.0;
  double confidence_multiplier = 3.0;
  unsigned n_threads = 0;  // 0 = hardware, capped by LEVY_DEFAULT_THREADS

  void validate() const;
};

// Per-sample default masses 1 - exp(-((-gap) - min X_h)^+), one fresh path
// of length h per sample (compound Poisson: exact event-driven; gamma/VG:
// grid with dt = h / inner_steps). Each mass lies in [0, 1); the finite-h
// likelihood estimator divides by h, so its samples lie in [0, 1/h].
std::vector<double> min_shortfall_masses(const LevyModel& model, double gap,
                                         double h, const OracleConfig& config,
                                         const RunSeed& seed);

// Finite-h likelihood lambda^h at the given gap: mean of the masses / h.
// Converges to the closed-form intensity as h -> 0.
McEstimate estimate_lambda_h(const LevyModel& model, double gap, double h,
                             const OracleConfig& config, const RunSeed& seed);

// The whole schedule with common random numbers: every h reuses the same
// stream indices, so the comparison across h is monotone in the noise.
std::vector<McEstimate> estimate_lambda_h_schedule(const LevyModel& model,
                                                   double gap,
                                                   const OracleConfig& config,
                                                   const RunSeed& seed);

// E[N_T] - E[int_0^{T and tau} lambda dt] over (path, barrier) pairs, with
// the two terms paired per sample. Zero in expectation when the intensity
// compensates the default indicator. The integral uses the trapezoid rule
// on the path grid; event-driven segments are refined to steps_per_year
// and split exactly where the gap hits zero, so the drift term of the
// intensity integrates exactly over at-minimum stretches.
McEstimate martingale_residual(const LevyModel& model, double horizon,
                               const OracleConfig& config,
                               const RunSeed& seed);

struct BallotBin {
  double lo = 0.0;
  double hi = 0.0;
  McEstimate first_passage_side;  // E[1{T1 > t} 1{X_t in bin}]
  McEstimate marginal_side;       // E[(X_t / ct) 1{0 <= X_t <= ct} 1{X_t in bin}]
};

struct BallotReport {
  double t = 0.0;
  double ct = 0.0;  // drift bound: X_t <= ct for spectrally negative paths
  std::vector<BallotBin> bins;
  McEstimate p_no_passage;  // P(T1 > t); the sum of the first-passage side
};

// Ballot-theorem identity P(T1 > t, X_t in dx) = (x / ct) P(X_t in dx) for
// spectrally negative models with positive drift, binned over [0, ct].
// T1 is the first passage strictly below zero.
BallotReport ballot_check(const LevyModel& model, double t,
                          std::size_t n_bins, const OracleConfig& config,
                          const RunSeed& seed);

struct BoundCheckRow {
  double gap = 0.0;
  double h = 0.0;
  McEstimate estimate;
  bool ok = false;
};

struct BoundCheckReport {
  double limit = 0.0;  // -(c and 0) + Pi(0)
  std::vector<BoundCheckRow> rows;
  bool all_ok = false;
};

// Checks the a.s. bound lambda^h <= -(c and 0) + Pi(0): each estimate mean
// minus confidence_multiplier * SE must not exceed the limit.
BoundCheckReport uniform_bound_check(const LevyModel& model,
                                     std::span<const double> gaps,
                                     std::span<const double> h_schedule,
                                     const OracleConfig& config,
                                     const RunSeed& seed);

}  // namespace levycredit
