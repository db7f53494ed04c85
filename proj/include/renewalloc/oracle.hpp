#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "renewalloc/model.hpp"

namespace renewalloc {

/// Which frame constraint forced purchasing: the demand sum, the epsilon
/// sum, or neither (no purchase required).
enum class FrameBinding { DemandSum, EpsilonSum, Neither };

struct FrameOracleResult {
  bool feasible = true;
  double c_star = 0.0;               // optimal frame-average cost
  std::vector<double> x_star;        // per-slot allocation
  FrameBinding binding = FrameBinding::Neither;
};

/// Exact optimum of the per-frame lookahead problem: total purchase
/// M = max(sum(a) - sum(s), eps*T - sum(s), 0) placed on the cheapest slots
/// first (gamma ties break by slot index), each up to x_max. Every unit of
/// x counts identically toward both constraints, so cheapest-first is
/// optimal. feasible = false when M > T * x_max.
FrameOracleResult solve_frame(std::span<const SlotObservation> frame,
                              double epsilon, double x_max);

/// Independent oracle: exhaustive enumeration of grid-valued allocations.
/// Returns the minimum frame-average cost; feasible = false when no grid
/// allocation satisfies the constraints. Only for tiny instances.
FrameOracleResult brute_force_frame(std::span<const SlotObservation> frame,
                                    double epsilon, double x_max, double grid);

struct UniversalBoundReport {
  double lhs = 0.0;  // (1/RT) sum gamma*x over the checked frames
  double rhs = 0.0;  // (1/R) sum c_r* + B*T/V
  bool pass = false;
  std::int64_t frames = 0;
  std::int64_t infeasible_frames = 0;  // excluded with a warning
};

/// Theorem check: achieved average cost (decision variable x) against the
/// frame-oracle average plus B*T/V, over the first floor(len/T) frames.
UniversalBoundReport check_universal_bound(
    std::span<const SlotObservation> trace, std::span<const double> x,
    std::int64_t T, const Params& p);

}  // namespace renewalloc
