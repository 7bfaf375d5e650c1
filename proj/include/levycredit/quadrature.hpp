#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>
#include <vector>

#include "levycredit/errors.hpp"

namespace levycredit {

struct QuadratureSettings {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals_used = 0;
};

namespace detail {

// 15-point Kronrod nodes/weights and the embedded 7-point Gauss weights
// (QUADPACK QK15). Nodes are interior, so integrands may be singular at
// the interval endpoints as long as the integral converges.
inline constexpr double kGk15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGk15WeightsK[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGk15WeightsG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class F>
inline void gauss_kronrod_15(const F& f, double a, double b, double& value,
                             double& error) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[2 * i] = f(center - half * kGk15Nodes[i]);
    fv[2 * i + 1] = f(center + half * kGk15Nodes[i]);
  }
  fv[14] = f(center);
  double kronrod = kGk15WeightsK[7] * fv[14];
  double gauss = kGk15WeightsG[3] * fv[14];
  for (int i = 0; i < 7; ++i) {
    kronrod += kGk15WeightsK[i] * (fv[2 * i] + fv[2 * i + 1]);
    if (i % 2 == 1)
      gauss += kGk15WeightsG[i / 2] * (fv[2 * i] + fv[2 * i + 1]);
  }
  value = kronrod * half;
  error = std::abs((kronrod - gauss) * half);
}

struct IntervalEstimate {
  double a, b, value, error;
  bool operator<(const IntervalEstimate& o) const { return error < o.error; }
};

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. Splits the interval
// with the largest local error until the summed error estimate meets
// max(abs_tol, rel_tol * |integral|); throws QuadratureError (carrying the
// achieved error) if the interval budget is exhausted first.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b,
                                    const QuadratureSettings& settings = {}) {
  if (!(a <= b)) throw ParameterError("integrate_adaptive: need a <= b");
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<detail::IntervalEstimate> work;
  detail::IntervalEstimate first{a, b, 0.0, 0.0};
  detail::gauss_kronrod_15(f, a, b, first.value, first.error);
  work.push(first);
  double total_value = first.value;
  double total_error = first.error;
  int intervals = 1;

  while (total_error > std::max(settings.abs_tol,
                                settings.rel_tol * std::abs(total_value))) {
    if (intervals >= settings.max_intervals)
      throw QuadratureError("integrate_adaptive: interval budget exhausted",
                            total_error);
    const detail::IntervalEstimate worst = work.top();
    work.pop();
    total_value -= worst.value;
    total_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    const std::pair<double, double> halves[2] = {{worst.a, mid},
                                                 {mid, worst.b}};
    for (const auto& [lo, hi] : halves) {
      detail::IntervalEstimate piece{lo, hi, 0.0, 0.0};
      detail::gauss_kronrod_15(f, lo, hi, piece.value, piece.error);
      work.push(piece);
      total_value += piece.value;
      total_error += piece.error;
    }
    ++intervals;
  }
  return {total_value, total_error, intervals};
}

}  // namespace levycredit
