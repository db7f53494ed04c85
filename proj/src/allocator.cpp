#include "renewalloc/allocator.hpp"

#include <algorithm>

namespace renewalloc {

double decide_purchase(const SchedulerState& state, double gamma,
                       const Params& p) {
  return (state.Q + state.Z <= p.V * gamma) ? 0.0 : p.x_max;
}

double actual_purchase(double Q, double s, double x) {
  return std::clamp(Q - s, 0.0, x);
}

SlotOutcome step(AllocatorPolicy& policy, const SlotObservation& obs) {
  SchedulerState& st = policy.state;
  const double Q_before = st.Q;
  const bool q_positive = Q_before > 0.0;

  SlotOutcome out;
  out.x = decide_purchase(st, obs.gamma, policy.params);
  out.x_actual = actual_purchase(Q_before, obs.s, out.x);
  out.served = std::min(Q_before, obs.s + out.x);
  out.cost = obs.gamma * out.x_actual;
  out.cost_decision = obs.gamma * out.x;
  out.a_realized = obs.a;

  st.Q = update_queue(Q_before, obs.s, out.x, obs.a);
  st.Z = update_virtual_queue(st.Z, obs.s, out.x, policy.params.epsilon,
                              q_positive);
  return out;
}

}  // namespace renewalloc
