#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace renewalloc {

/// One slot's exogenous inputs: renewable supply s, arriving requests a,
/// spot-market price gamma, and an optional demand-state scalar y used
/// only in pricing mode.
struct SlotObservation {
  double s = 0.0;
  double a = 0.0;
  double gamma = 0.0;
  std::optional<double> y;
};

/// Algorithm configuration. The theorems require x_max >= max(a_max, epsilon)
/// and V > 0; validate_params enforces this.
struct Params {
  double V = 1.0;
  double epsilon = 0.0;
  double x_max = 0.0;
  double a_max = 0.0;
  double s_max = 0.0;
  double gamma_max = 0.0;
  double p_max = 0.0;  // pricing mode only
};

/// Real backlog Q and delay-aware virtual backlog Z. Both stay >= 0 under
/// the max[.,0] updates.
struct SchedulerState {
  double Q = 0.0;
  double Z = 0.0;
};

/// Constants derived from Params: the drift constant B, the deterministic
/// queue bounds, the worst-case delay bound (absent when epsilon = 0), and
/// the per-slot change bounds C_Q, C_Z.
struct DerivedBounds {
  double B = 0.0;
  double Q_max = 0.0;
  double Z_max = 0.0;
  std::optional<std::int64_t> D_max;  // nullopt: unbounded (epsilon = 0)
  double C_Q = 0.0;
  double C_Z = 0.0;
};

/// Per-slot decisions and accounting. x is the decision variable; x_actual
/// is the energy actually bought (x-tilde). Pricing-mode fields default to
/// an accepted zero-price slot with zero profit.
struct SlotOutcome {
  double x = 0.0;
  double x_actual = 0.0;
  double cost = 0.0;         // gamma * x_actual
  double cost_decision = 0.0;  // gamma * x, used by the theorem checkers
  double served = 0.0;
  bool b = false;
  double p = 0.0;
  double profit = 0.0;         // b*p*a - gamma*x
  double profit_actual = 0.0;  // b*p*a - gamma*x_actual
  double a_realized = 0.0;
};

/// Throws std::invalid_argument naming the violated inequality if p does not
/// satisfy the preconditions of the performance theorems; returns p unchanged
/// otherwise.
Params validate_params(const Params& p);

/// Throws std::invalid_argument if obs violates the declared bounds
/// (0 <= s <= s_max etc., y finite and non-negative when present).
void validate_observation(const SlotObservation& obs, const Params& p);

/// Backlog update: max(Q - s - x, 0) + a.
double update_queue(double Q, double s, double x, double a);

/// Virtual-queue update: max(Z - s - x + epsilon*[q_positive], 0). The
/// indicator is evaluated on Q strictly before the slot's service/arrival.
double update_virtual_queue(double Z, double s, double x, double epsilon,
                            bool q_positive);

/// (Q^2 + Z^2) / 2.
double lyapunov_value(const SchedulerState& state);

DerivedBounds derived_bounds(const Params& p);

/// Sample-path drift inequality:
///   L(after) - L(before) <= B + Q*(a - s - x) + Z*(eps - s - x)
/// with Q, Z taken from `before` and 1e-9 numeric slack. Guaranteed true for
/// every step produced by the queue updates; a false return flags a bug.
bool check_drift_inequality(const SchedulerState& before,
                            const SchedulerState& after,
                            const SlotObservation& obs, double x,
                            const Params& p);

inline constexpr double kNumericSlack = 1e-9;

}  // namespace renewalloc
