#include "renewalloc/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "renewalloc/allocator.hpp"

namespace renewalloc {

double DemandModel::evaluate(double p, double y, double gamma) const {
  switch (kind) {
    case Kind::Linear:
      return y * a_max * std::max(0.0, 1.0 - p / p_max);
    case Kind::Scaled:
      return y * base(p, gamma);
  }
  return 0.0;
}

DemandModel DemandModel::linear(double a_max, double p_max) {
  DemandModel m;
  m.kind = Kind::Linear;
  m.a_max = a_max;
  m.p_max = p_max;
  return m;
}

DemandModel DemandModel::scaled(double a_max, double p_max,
                                std::function<double(double, double)> base) {
  DemandModel m;
  m.kind = Kind::Scaled;
  m.a_max = a_max;
  m.p_max = p_max;
  m.base = std::move(base);
  return m;
}

PricingDecision optimize_price(double Q, const SlotObservation& obs,
                               const Params& p, const DemandModel& demand,
                               double grid_step) {
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("grid_step must be positive");
  }
  // In SCALED mode the demand state only scales the objective, so the
  // optimizer evaluates the base curve (y = 1).
  const double y = demand.kind == DemandModel::Kind::Scaled
                       ? 1.0
                       : obs.y.value_or(1.0);

  PricingDecision best;
  bool first = true;
  auto consider = [&](double price) {
    const double obj = demand.evaluate(price, y, obs.gamma) * (p.V * price - Q);
    if (first || obj >= best.objective) {
      best.p = price;
      best.objective = obj;
      first = false;
    }
  };
  const auto n = static_cast<std::int64_t>(std::floor(p.p_max / grid_step));
  for (std::int64_t i = 0; i <= n; ++i) {
    consider(static_cast<double>(i) * grid_step);
  }
  consider(p.p_max);

  best.b = best.objective >= 0.0;
  return best;
}

double realize_demand(const PricingDecision& decision,
                      const SlotObservation& obs, const DemandModel& demand,
                      DemandRealization mode, std::mt19937_64& rng) {
  if (!decision.b) return 0.0;
  const double mean =
      demand.evaluate(decision.p, obs.y.value_or(1.0), obs.gamma);
  switch (mode) {
    case DemandRealization::Deterministic:
      return mean;
    case DemandRealization::UniformNoise: {
      const double lo = std::max(0.0, 2.0 * mean - demand.a_max);
      const double hi = std::min(demand.a_max, 2.0 * mean);
      return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
  }
  return 0.0;
}

double profit(bool b, double p, double a, double gamma, double x_used) {
  return (b ? p * a : 0.0) - gamma * x_used;
}

SlotOutcome pricing_step(PricingPolicy& policy, const SlotObservation& obs,
                         std::mt19937_64& rng) {
  const Params& prm = policy.params;
  SchedulerState& st = policy.state;
  const double step =
      policy.grid_step > 0.0 ? policy.grid_step : prm.p_max / 1e4;

  const PricingDecision decision =
      optimize_price(st.Q, obs, prm, policy.demand, step);
  const double a =
      realize_demand(decision, obs, policy.demand, policy.realization, rng);

  const double Q_before = st.Q;
  const bool q_positive = Q_before > 0.0;

  SlotOutcome out;
  out.b = decision.b;
  out.p = decision.p;
  out.a_realized = a;
  out.x = decide_purchase(st, obs.gamma, prm);
  out.x_actual = actual_purchase(Q_before, obs.s, out.x);
  out.served = std::min(Q_before, obs.s + out.x);
  out.cost = obs.gamma * out.x_actual;
  out.cost_decision = obs.gamma * out.x;
  out.profit = profit(out.b, out.p, a, obs.gamma, out.x);
  out.profit_actual = profit(out.b, out.p, a, obs.gamma, out.x_actual);

  st.Q = update_queue(Q_before, obs.s, out.x, a);
  st.Z = update_virtual_queue(st.Z, obs.s, out.x, prm.epsilon, q_positive);
  return out;
}

}  // namespace renewalloc
