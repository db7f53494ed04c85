#pragma once

#include <functional>
#include <random>

#include "renewalloc/model.hpp"

namespace renewalloc {

/// Expected requests as a function of posted price p, demand state y, and
/// market price gamma. LINEAR: y * a_max * max(0, 1 - p/p_max). SCALED:
/// y * base(p, gamma) for a supplied base curve; in SCALED mode the policy
/// optimizes over base(p, gamma) alone and never reads y.
struct DemandModel {
  enum class Kind { Linear, Scaled };

  Kind kind = Kind::Linear;
  double a_max = 0.0;
  double p_max = 0.0;
  std::function<double(double p, double gamma)> base;  // SCALED only

  double evaluate(double p, double y, double gamma) const;

  static DemandModel linear(double a_max, double p_max);
  static DemandModel scaled(double a_max, double p_max,
                            std::function<double(double, double)> base);
};

struct PricingDecision {
  bool b = false;
  double p = 0.0;
  double objective = 0.0;  // maximized F * (V*p - Q)
};

enum class DemandRealization { Deterministic, UniformNoise };

/// Grid search over {0, step, 2*step, ..., p_max} (p_max always included)
/// maximizing F(p, y, gamma) * (V*p - Q). Ties break toward the largest p;
/// b = 1 iff the maximum is non-negative (zero counts as accept).
PricingDecision optimize_price(double Q, const SlotObservation& obs,
                               const Params& p, const DemandModel& demand,
                               double grid_step);

/// Draws the slot's realized requests. b = 0 gives 0. Deterministic mode
/// returns F exactly; UniformNoise draws uniform on
/// [max(0, 2F - a_max), min(a_max, 2F)], which has mean F.
double realize_demand(const PricingDecision& decision,
                      const SlotObservation& obs, const DemandModel& demand,
                      DemandRealization mode, std::mt19937_64& rng);

/// b*p*a - gamma*x_used.
double profit(bool b, double p, double a, double gamma, double x_used);

struct PricingPolicy {
  Params params;
  SchedulerState state;
  DemandModel demand;
  DemandRealization realization = DemandRealization::Deterministic;
  double grid_step = 0.0;  // 0: default p_max / 1e4

  PricingPolicy(const Params& p, DemandModel d)
      : params(validate_params(p)), demand(std::move(d)) {}
};

/// One slot of the joint pricing-and-allocation algorithm: price, realized
/// demand, threshold allocation on the pre-update queues, then both queue
/// updates with the realized arrivals.
SlotOutcome pricing_step(PricingPolicy& policy, const SlotObservation& obs,
                         std::mt19937_64& rng);

}  // namespace renewalloc
