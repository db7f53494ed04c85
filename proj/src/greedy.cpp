#include "renewalloc/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace renewalloc {

SlotOutcome greedy_step(GreedyPolicy& policy, const SlotObservation& obs,
                        const Params& p) {
  if (policy.deadline < 1) {
    throw std::invalid_argument("greedy deadline must be >= 1");
  }

  SlotOutcome out;
  double supply = obs.s;
  while (supply > 0.0 && !policy.pending.empty()) {
    auto& head = policy.pending.front();
    const double take = std::min(supply, head.remaining);
    head.remaining -= take;
    supply -= take;
    out.served += take;
    if (head.remaining <= 0.0) policy.pending.pop_front();
  }

  double purchase = 0.0;
  while (!policy.pending.empty() &&
         policy.slot - policy.pending.front().arrival_slot >=
             policy.deadline) {
    purchase += policy.pending.front().remaining;
    policy.pending.pop_front();
  }
  if (purchase > p.x_max) policy.x_max_exceeded = true;

  if (obs.a > 0.0) {
    policy.pending.push_back({policy.slot, obs.a});
  }
  ++policy.slot;

  out.x = purchase;
  out.x_actual = purchase;
  out.served += purchase;
  out.cost = obs.gamma * purchase;
  out.cost_decision = out.cost;
  out.a_realized = obs.a;
  return out;
}

}  // namespace renewalloc
