#pragma once

#include <span>
#include <vector>

#include "levycredit/levy_model.hpp"
#include "levycredit/mc_oracle.hpp"
#include "levycredit/mc_stats.hpp"

namespace levycredit {

// Term structure h -> S(t, h) of the credit spread at a fixed state gap,
// with the h -> 0 anchor pinned to the closed-form intensity at that gap.
struct SpreadCurve {
  double gap = 0.0;
  double anchor = 0.0;  // S(t, 0) = lambda_t
  std::vector<double> horizons;
  std::vector<double> values;
  std::vector<double> std_errors;  // delta-method error bars
};

// P(tau > t + h | G_t) on {tau > t} with the time-t state summarized by the
// gap: the mean of exp(-((-gap) - min X_h)^+) over fresh paths of length h.
McEstimate conditional_survival(const LevyModel& model, double gap, double h,
                                const OracleConfig& config,
                                const RunSeed& seed);

// S(t, h) = -(1/h) ln(survival estimate) per horizon. The log of a Monte
// Carlo mean is biased O(1/n); keep n large enough that the delta-method
// error bars dominate. Throws McFailure if an estimated survival is not
// positive.
SpreadCurve spread_term_structure(const LevyModel& model, double gap,
                                  std::span<const double> horizons,
                                  const OracleConfig& config,
                                  const RunSeed& seed);

}  // namespace levycredit
