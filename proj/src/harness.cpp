#include "renewalloc/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "renewalloc/allocator.hpp"
#include "renewalloc/greedy.hpp"

namespace renewalloc {

namespace {

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

PolicyKind parse_policy(const std::string& name) {
  if (name == "lyapunov") return PolicyKind::Lyapunov;
  if (name == "greedy") return PolicyKind::Greedy;
  if (name == "pricing") return PolicyKind::Pricing;
  throw std::invalid_argument("unknown policy: " + name);
}

std::string policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Lyapunov: return "lyapunov";
    case PolicyKind::Greedy: return "greedy";
    case PolicyKind::Pricing: return "pricing";
  }
  return "?";
}

RunRecord run_policy(const Trace& trace, PolicyKind policy, const Params& p,
                     const RunOptions& options) {
  validate_params(p);
  RunRecord rec;
  rec.policy = policy;
  rec.params = p;
  rec.trace_meta = trace.meta;
  const auto n = trace.slots.size();
  rec.observations.reserve(n);
  rec.outcomes.reserve(n);
  rec.states.reserve(n);

  FifoTracker tracker;
  std::mt19937_64 rng(options.seed);

  AllocatorPolicy lyapunov(p);
  PricingPolicy pricing(p, options.demand.p_max > 0.0
                               ? options.demand
                               : DemandModel::linear(p.a_max, p.p_max));
  pricing.realization = options.realization;
  GreedyPolicy greedy;
  if (policy == PolicyKind::Greedy) {
    greedy.deadline = options.greedy_deadline;
    if (greedy.deadline <= 0) {
      const DerivedBounds b = derived_bounds(p);
      if (!b.D_max) {
        throw std::invalid_argument(
            "greedy needs a deadline (D_max is unbounded at epsilon = 0)");
      }
      greedy.deadline = *b.D_max;
    }
  }
  rec.realization_mode =
      options.realization == DemandRealization::Deterministic ? "deterministic"
                                                              : "uniform";

  for (std::size_t t = 0; t < n; ++t) {
    SlotObservation obs = trace.slots[t];
    validate_observation(obs, p);
    const auto slot = static_cast<std::int64_t>(t);

    SlotOutcome out;
    SchedulerState before{}, after{};
    switch (policy) {
      case PolicyKind::Lyapunov:
        before = lyapunov.state;
        out = step(lyapunov, obs);
        after = lyapunov.state;
        break;
      case PolicyKind::Pricing:
        before = pricing.state;
        out = pricing_step(pricing, obs, rng);
        obs.a = out.a_realized;
        after = pricing.state;
        break;
      case PolicyKind::Greedy:
        out = greedy_step(greedy, obs, p);
        break;
    }

    if (policy == PolicyKind::Greedy) {
      // the greedy policy keeps its own batch list; mirror it as a backlog
      after.Q = 0.0;
      for (const auto& batch : greedy.pending) after.Q += batch.remaining;
    } else if (options.check_drift &&
               !check_drift_inequality(before, after, obs, out.x, p)) {
      rec.drift_ok = false;
    }
    tracker.apply_service(slot, out.served);
    tracker.enqueue(slot, obs.a);

    rec.observations.push_back(obs);
    rec.outcomes.push_back(out);
    rec.states.push_back(after);
    rec.cum_cost += out.cost;
    rec.cum_cost_decision += out.cost_decision;
    rec.cum_profit += out.profit;
    rec.cum_profit_actual += out.profit_actual;
    rec.max_Q = std::max(rec.max_Q, after.Q);
    rec.max_Z = std::max(rec.max_Z, after.Z);
  }

  rec.delays = tracker.stats();
  return rec;
}

std::vector<SweepRow> sweep(const Trace& trace, const Params& base,
                            SweepAxis axis, const std::vector<double>& values,
                            const RunOptions& options) {
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double v : values) {
    Params p = base;
    if (axis == SweepAxis::V) {
      p.V = v;
    } else {
      p.epsilon = v;
    }
    const RunRecord run = run_policy(trace, PolicyKind::Lyapunov, p, options);
    SweepRow row;
    row.value = v;
    row.cum_cost = run.cum_cost;
    row.cum_cost_decision = run.cum_cost_decision;
    row.max_delay = run.delays.max_delay;
    row.max_Q = run.max_Q;
    row.max_Z = run.max_Z;
    row.D_max = derived_bounds(p).D_max;
    rows.push_back(row);
  }
  return rows;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return !c.applicable || c.pass;
  });
}

VerificationReport verify(const RunRecord& run, const Params& p,
                          const std::vector<std::int64_t>& T_values) {
  VerificationReport report;
  const DerivedBounds b = derived_bounds(p);
  const bool theorem_policy = run.policy != PolicyKind::Greedy;

  {
    CheckResult c{"queue_bounds", true, theorem_policy, ""};
    if (theorem_policy) {
      c.pass = run.max_Q <= b.Q_max && run.max_Z <= b.Z_max;
      c.detail = "max_Q=" + fmt(run.max_Q) + " <= " + fmt(b.Q_max) +
                 ", max_Z=" + fmt(run.max_Z) + " <= " + fmt(b.Z_max);
    } else {
      c.detail = "not applicable to greedy";
    }
    report.checks.push_back(c);
  }
  {
    CheckResult c{"delay_bound", true, theorem_policy && b.D_max.has_value(),
                  ""};
    if (c.applicable) {
      c.pass = verify_delay_bound(run.delays, b);
      c.detail = "max_delay=" + std::to_string(run.delays.max_delay) +
                 " <= D_max=" + std::to_string(*b.D_max);
    } else if (theorem_policy) {
      c.detail = "D_max unbounded (epsilon = 0); observed max_delay=" +
                 std::to_string(run.delays.max_delay);
    } else {
      c.detail = "not applicable to greedy";
    }
    report.checks.push_back(c);
  }
  {
    CheckResult c{"bang_bang_x", true, theorem_policy, ""};
    if (theorem_policy) {
      for (const auto& out : run.outcomes) {
        if (out.x != 0.0 && out.x != p.x_max) {
          c.pass = false;
          c.detail = "x=" + fmt(out.x);
          break;
        }
      }
    }
    report.checks.push_back(c);
  }
  {
    CheckResult c{"purchase_dominance", true, true, ""};
    for (const auto& out : run.outcomes) {
      if (!(out.x_actual >= 0.0 && out.x_actual <= out.x + kNumericSlack)) {
        c.pass = false;
        c.detail = "x_actual=" + fmt(out.x_actual) + " x=" + fmt(out.x);
        break;
      }
    }
    report.checks.push_back(c);
  }
  {
    CheckResult c{"drift_inequality", run.drift_ok, theorem_policy, ""};
    report.checks.push_back(c);
  }
  {
    // conservation: arrivals = completed + remaining inside the tracker
    CheckResult c{"conservation", true, true, ""};
    double arrivals = 0.0;
    for (const auto& obs : run.observations) arrivals += obs.a;
    const double final_Q =
        run.states.empty() ? 0.0 : run.states.back().Q;
    double served = 0.0;
    for (const auto& out : run.outcomes) served += out.served;
    c.pass = std::abs(arrivals - served - final_Q) <=
             1e-6 * std::max(1.0, arrivals);
    c.detail = "arrivals=" + fmt(arrivals) + " served=" + fmt(served) +
               " final_Q=" + fmt(final_Q);
    report.checks.push_back(c);
  }
  if (theorem_policy) {
    std::vector<double> x(run.outcomes.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = run.outcomes[i].x;
    for (std::int64_t T : T_values) {
      if (T <= 0 || static_cast<std::size_t>(T) > run.observations.size()) {
        continue;
      }
      const UniversalBoundReport ub =
          check_universal_bound(run.observations, x, T, p);
      CheckResult c{"universal_bound_T" + std::to_string(T), ub.pass, true,
                    "lhs=" + fmt(ub.lhs) + " rhs=" + fmt(ub.rhs) +
                        (ub.infeasible_frames
                             ? " (warning: " +
                                   std::to_string(ub.infeasible_frames) +
                                   " infeasible frames excluded)"
                             : "")};
      report.checks.push_back(c);
    }
  }
  return report;
}

void write_trajectory_csv(const RunRecord& run, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << "slot,Q,Z,x,x_actual,cost_x,cost_x_actual,served\n";
  for (std::size_t i = 0; i < run.outcomes.size(); ++i) {
    const auto& o = run.outcomes[i];
    const auto& st = run.states[i];
    out << i << ',' << fmt(st.Q) << ',' << fmt(st.Z) << ',' << fmt(o.x) << ','
        << fmt(o.x_actual) << ',' << fmt(o.cost_decision) << ','
        << fmt(o.cost) << ',' << fmt(o.served) << '\n';
  }
}

void write_histogram_csv(const DelayStats& stats, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << "delay_slots,count,log10_count\n";
  for (const auto& [delay, count] : stats.histogram) {
    out << delay << ',' << count << ','
        << fmt(std::log10(static_cast<double>(count))) << '\n';
  }
}

void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << "value,cum_cost,max_delay,max_Q,max_Z,D_max\n";
  for (const auto& row : rows) {
    out << fmt(row.value) << ',' << fmt(row.cum_cost) << ',' << row.max_delay
        << ',' << fmt(row.max_Q) << ',' << fmt(row.max_Z) << ','
        << (row.D_max ? std::to_string(*row.D_max) : std::string("unbounded"))
        << '\n';
  }
}

}  // namespace renewalloc
