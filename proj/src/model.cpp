#include "renewalloc/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace renewalloc {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

Params validate_params(const Params& p) {
  if (!(std::isfinite(p.V) && p.V > 0.0)) {
    throw std::invalid_argument("V must be positive");
  }
  if (!finite_nonneg(p.epsilon)) {
    throw std::invalid_argument("epsilon must be finite and >= 0");
  }
  if (!finite_nonneg(p.x_max)) {
    throw std::invalid_argument("x_max must be finite and >= 0");
  }
  if (!finite_nonneg(p.a_max)) {
    throw std::invalid_argument("a_max must be finite and >= 0");
  }
  if (!finite_nonneg(p.s_max)) {
    throw std::invalid_argument("s_max must be finite and >= 0");
  }
  if (!finite_nonneg(p.gamma_max)) {
    throw std::invalid_argument("gamma_max must be finite and >= 0");
  }
  if (!finite_nonneg(p.p_max)) {
    throw std::invalid_argument("p_max must be finite and >= 0");
  }
  if (p.x_max < p.a_max) {
    throw std::invalid_argument("x_max < a_max");
  }
  if (p.x_max < p.epsilon) {
    throw std::invalid_argument("x_max < epsilon");
  }
  return p;
}

void validate_observation(const SlotObservation& obs, const Params& p) {
  if (!(std::isfinite(obs.s) && obs.s >= 0.0 && obs.s <= p.s_max)) {
    throw std::invalid_argument("s out of [0, s_max]");
  }
  if (!(std::isfinite(obs.a) && obs.a >= 0.0 && obs.a <= p.a_max)) {
    throw std::invalid_argument("a out of [0, a_max]");
  }
  if (!(std::isfinite(obs.gamma) && obs.gamma >= 0.0 &&
        obs.gamma <= p.gamma_max)) {
    throw std::invalid_argument("gamma out of [0, gamma_max]");
  }
  if (obs.y && !finite_nonneg(*obs.y)) {
    throw std::invalid_argument("y must be finite and >= 0");
  }
}

double update_queue(double Q, double s, double x, double a) {
  return std::max(Q - s - x, 0.0) + a;
}

double update_virtual_queue(double Z, double s, double x, double epsilon,
                            bool q_positive) {
  const double fill = q_positive ? epsilon : 0.0;
  return std::max(Z - s - x + fill, 0.0);
}

double lyapunov_value(const SchedulerState& state) {
  return 0.5 * (state.Q * state.Q + state.Z * state.Z);
}

DerivedBounds derived_bounds(const Params& p) {
  DerivedBounds b;
  const double sx = p.s_max + p.x_max;
  b.B = 0.5 * (sx * sx + p.a_max * p.a_max) +
        0.5 * std::max(p.epsilon * p.epsilon, sx * sx);
  b.Q_max = p.V * p.gamma_max + p.a_max;
  b.Z_max = p.V * p.gamma_max + p.epsilon;
  b.C_Q = std::max(sx, p.a_max);
  b.C_Z = std::max(sx, p.epsilon);
  if (p.epsilon > 0.0) {
    b.D_max = static_cast<std::int64_t>(
        std::ceil((2.0 * p.V * p.gamma_max + p.a_max + p.epsilon) / p.epsilon));
  }
  return b;
}

bool check_drift_inequality(const SchedulerState& before,
                            const SchedulerState& after,
                            const SlotObservation& obs, double x,
                            const Params& p) {
  const DerivedBounds b = derived_bounds(p);
  const double lhs = lyapunov_value(after) - lyapunov_value(before);
  const double rhs = b.B + before.Q * (obs.a - obs.s - x) +
                     before.Z * (p.epsilon - obs.s - x);
  return lhs <= rhs + kNumericSlack;
}

}  // namespace renewalloc
