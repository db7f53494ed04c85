#include "renewalloc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace renewalloc {

FrameOracleResult solve_frame(std::span<const SlotObservation> frame,
                              double epsilon, double x_max) {
  const auto T = static_cast<std::int64_t>(frame.size());
  FrameOracleResult res;
  res.x_star.assign(frame.size(), 0.0);

  double sum_s = 0.0, sum_a = 0.0;
  for (const auto& obs : frame) {
    sum_s += obs.s;
    sum_a += obs.a;
  }
  const double need_demand = sum_a - sum_s;
  const double need_epsilon = epsilon * static_cast<double>(T) - sum_s;
  const double M = std::max({need_demand, need_epsilon, 0.0});

  if (M <= 0.0) {
    res.binding = FrameBinding::Neither;
    return res;
  }
  res.binding = need_demand >= need_epsilon ? FrameBinding::DemandSum
                                            : FrameBinding::EpsilonSum;
  if (M > static_cast<double>(T) * x_max) {
    res.feasible = false;
    return res;
  }

  std::vector<std::size_t> order(frame.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return frame[i].gamma < frame[j].gamma;
  });

  double remaining = M;
  double total_cost = 0.0;
  for (std::size_t idx : order) {
    if (remaining <= 0.0) break;
    const double fill = std::min(remaining, x_max);
    res.x_star[idx] = fill;
    total_cost += fill * frame[idx].gamma;
    remaining -= fill;
  }
  res.c_star = total_cost / static_cast<double>(T);
  return res;
}

FrameOracleResult brute_force_frame(std::span<const SlotObservation> frame,
                                    double epsilon, double x_max,
                                    double grid) {
  const auto T = static_cast<std::int64_t>(frame.size());
  const auto levels = static_cast<std::int64_t>(std::floor(x_max / grid)) + 1;

  double sum_s = 0.0, sum_a = 0.0;
  for (const auto& obs : frame) {
    sum_s += obs.s;
    sum_a += obs.a;
  }

  FrameOracleResult res;
  res.feasible = false;
  std::vector<double> x(frame.size(), 0.0);

  std::int64_t combos = 1;
  for (std::int64_t i = 0; i < T; ++i) combos *= levels;

  for (std::int64_t c = 0; c < combos; ++c) {
    std::int64_t rest = c;
    double sum_x = 0.0, cost = 0.0;
    for (std::int64_t i = 0; i < T; ++i) {
      x[static_cast<std::size_t>(i)] =
          static_cast<double>(rest % levels) * grid;
      rest /= levels;
      sum_x += x[static_cast<std::size_t>(i)];
      cost += x[static_cast<std::size_t>(i)] * frame[static_cast<std::size_t>(i)].gamma;
    }
    const bool ok =
        sum_s + sum_x - sum_a >= -kNumericSlack &&
        sum_s + sum_x - epsilon * static_cast<double>(T) >= -kNumericSlack;
    if (!ok) continue;
    const double avg = cost / static_cast<double>(T);
    if (!res.feasible || avg < res.c_star) {
      res.feasible = true;
      res.c_star = avg;
      res.x_star = x;
    }
  }
  return res;
}

UniversalBoundReport check_universal_bound(
    std::span<const SlotObservation> trace, std::span<const double> x,
    std::int64_t T, const Params& p) {
  UniversalBoundReport rep;
  const auto R = static_cast<std::int64_t>(trace.size()) / T;
  const DerivedBounds b = derived_bounds(p);

  double cost_sum = 0.0;
  double oracle_sum = 0.0;
  for (std::int64_t r = 0; r < R; ++r) {
    const auto begin = static_cast<std::size_t>(r * T);
    const auto frame = trace.subspan(begin, static_cast<std::size_t>(T));
    const FrameOracleResult fr = solve_frame(frame, p.epsilon, p.x_max);
    if (!fr.feasible) {
      ++rep.infeasible_frames;
      continue;
    }
    ++rep.frames;
    oracle_sum += fr.c_star;
    for (std::int64_t t = 0; t < T; ++t) {
      cost_sum += trace[begin + static_cast<std::size_t>(t)].gamma *
                  x[begin + static_cast<std::size_t>(t)];
    }
  }
  if (rep.frames == 0) {
    rep.pass = true;
    return rep;
  }
  const double R_used = static_cast<double>(rep.frames);
  rep.lhs = cost_sum / (R_used * static_cast<double>(T));
  rep.rhs = oracle_sum / R_used + b.B * static_cast<double>(T) / p.V;
  rep.pass = rep.lhs <= rep.rhs + kNumericSlack;
  return rep;
}

}  // namespace renewalloc
