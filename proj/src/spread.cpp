#include "levycredit/spread.hpp"

#include <cmath>

#include "levycredit/errors.hpp"
#include "levycredit/intensity.hpp"

namespace levycredit {

McEstimate conditional_survival(const LevyModel& model, double gap, double h,
                                const OracleConfig& config,
                                const RunSeed& seed) {
  const std::vector<double> masses =
      min_shortfall_masses(model, gap, h, config, seed);
  McEstimate estimate = summarize(masses, seed);
  estimate.mean = 1.0 - estimate.mean;  // survival = 1 - default mass
  return estimate;
}

SpreadCurve spread_term_structure(const LevyModel& model, double gap,
                                  std::span<const double> horizons,
                                  const OracleConfig& config,
                                  const RunSeed& seed) {
  if (horizons.empty())
    throw ParameterError("spread_term_structure: need at least one horizon");
  for (std::size_t i = 0; i < horizons.size(); ++i) {
    if (!(horizons[i] > 0.0))
      throw ParameterError("spread_term_structure: horizons must be > 0");
    if (i > 0 && !(horizons[i] > horizons[i - 1]))
      throw ParameterError("spread_term_structure: horizons must increase");
  }

  const PiEvaluator evaluator(model);
  SpreadCurve curve;
  curve.gap = gap;
  curve.anchor = evaluator.intensity_at({gap, true});
  curve.horizons.assign(horizons.begin(), horizons.end());
  curve.values.reserve(horizons.size());
  curve.std_errors.reserve(horizons.size());

  for (const double h : horizons) {
    const McEstimate survival =
        conditional_survival(model, gap, h, config, seed);
    if (!(survival.mean > 0.0))
      throw McFailure(
          "spread_term_structure: survival estimate is not positive; "
          "increase n_samples or shorten the horizon");
    curve.values.push_back(-std::log(survival.mean) / h);
    curve.std_errors.push_back(survival.std_error / (h * survival.mean));
  }
  return curve;
}

}  // namespace levycredit
