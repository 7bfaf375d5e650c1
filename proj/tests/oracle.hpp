// Test-only reference implementations, kept independent of the adaptive
// quadrature inside the library: a fixed-panel composite Simpson rule and
// exponential-integral closed forms for the gamma-family Pi.
#pragma once

#include <cmath>
#include <stdexcept>

namespace testoracle {

// Composite Simpson on [a, b] with `panels` panels (panels made even).
template <class F>
double simpson(const F& f, double a, double b, int panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i)
    sum += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// E1(x) = -Ei(-x) for x > 0.
inline double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("exp_integral_e1: x > 0");
  return -std::expint(-x);
}

// Pi for a gamma subordinator with mean rate mu, variance rate nv:
//   a [E1(b x) - e^x E1((1 + b) x)],  a = mu^2/nv, b = mu/nv,  x > 0,
// and a ln(1 + nv/mu) at x = 0.
inline double pi_gamma_reference(double mu, double nv, double x) {
  const double a = mu * mu / nv;
  const double b = mu / nv;
  if (x == 0.0) return a * std::log1p(nv / mu);
  return a * (exp_integral_e1(b * x) -
              std::exp(x) * exp_integral_e1((1.0 + b) * x));
}

// Pi for the compound-Poisson-exponential subordinator.
inline double pi_cpe_reference(double rho, double beta, double x) {
  return rho / (1.0 + beta) * std::exp(-beta * x);
}

}  // namespace testoracle
