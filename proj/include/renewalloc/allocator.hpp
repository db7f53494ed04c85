#pragma once

#include "renewalloc/model.hpp"

namespace renewalloc {

/// The dynamic threshold purchase policy. State starts at Q = Z = 0.
struct AllocatorPolicy {
  Params params;
  SchedulerState state;

  explicit AllocatorPolicy(const Params& p) : params(validate_params(p)) {}
};

/// Bang-bang threshold rule: 0 if Q + Z <= V*gamma, else x_max.
double decide_purchase(const SchedulerState& state, double gamma,
                       const Params& p);

/// Energy actually bought: the post-supply shortfall clamped to [0, x].
double actual_purchase(double Q, double s, double x);

/// Advances one slot: decides x on the pre-update state, computes x_actual
/// and served energy, then applies both queue updates (with x, not x_actual).
SlotOutcome step(AllocatorPolicy& policy, const SlotObservation& obs);

}  // namespace renewalloc
