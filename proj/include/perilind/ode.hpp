// ode.hpp — Adaptive embedded Runge-Kutta integrator (Dormand-Prince 5(4))
// acting on dense complex matrix states.

#pragma once

#include "perilind/errors.hpp"
#include "perilind/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace perilind::ode {

struct Options {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0.0;  // 0: pick automatically
  long max_steps = 2'000'000;
};

namespace detail {

// Dormand-Prince coefficients (the classic DOPRI5 tableau).
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 4th-order embedded weights
inline constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                        e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

inline double error_norm(const Matrix& err, const Matrix& y0, const Matrix& y1, double rtol,
                         double atol) {
  double worst = 0.0;
  for (Index j = 0; j < err.cols(); ++j) {
    for (Index i = 0; i < err.rows(); ++i) {
      const double scale = atol + rtol * std::max(std::abs(y0(i, j)), std::abs(y1(i, j)));
      worst = std::max(worst, std::abs(err(i, j)) / scale);
    }
  }
  return worst;
}

}  // namespace detail

// Integrates dy/dt = rhs(t, y) from t0 to t1 in place. `rhs` must have the
// signature Matrix(double, const Matrix&). Step size is controlled by the
// embedded 4th-order error estimate; a step rejected below the representable
// step floor raises IntegratorStepFailure.
template <typename Rhs>
void integrate(Rhs&& rhs, Matrix& y, double t0, double t1, const Options& opts = {}) {
  using namespace detail;
  if (t1 < t0) throw IntegratorStepFailure("integrate: t1 < t0");
  if (t1 == t0) return;

  double t = t0;
  const double span = t1 - t0;
  double h = opts.initial_step > 0.0 ? opts.initial_step : span / 100.0;
  h = std::min(h, span);

  Matrix k1 = rhs(t, y);
  long steps = 0;
  while (t < t1) {
    if (++steps > opts.max_steps) {
      throw IntegratorStepFailure("integrate: exceeded " + std::to_string(opts.max_steps) +
                                  " steps");
    }
    h = std::min(h, t1 - t);
    if (!(h > std::abs(t) * 1e-15 + 1e-300)) {
      throw IntegratorStepFailure("integrate: step size underflow at t = " + std::to_string(t));
    }

    const Matrix k2 = rhs(t + c2 * h, y + h * (a21 * k1));
    const Matrix k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Matrix k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Matrix k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Matrix k6 =
        rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Matrix y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Matrix k7 = rhs(t + h, y5);
    const Matrix y4 = y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double err = error_norm(y5 - y4, y, y5, opts.rtol, opts.atol);
    if (err <= 1.0) {
      t += h;
      y = y5;
      k1 = k7;  // FSAL
      const double grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(grow, 0.2, 5.0);
    } else {
      // k1 is still the derivative at the unchanged (t, y)
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
  }
}

}  // namespace perilind::ode
