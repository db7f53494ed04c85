#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renewalloc/fifo_tracker.hpp"
#include "renewalloc/model.hpp"
#include "renewalloc/oracle.hpp"
#include "renewalloc/pricing.hpp"
#include "renewalloc/trace.hpp"

namespace renewalloc {

enum class PolicyKind { Lyapunov, Greedy, Pricing };

PolicyKind parse_policy(const std::string& name);
std::string policy_name(PolicyKind kind);

struct RunOptions {
  std::uint64_t seed = 0;  // demand realization (pricing mode)
  bool check_drift = true;
  DemandRealization realization = DemandRealization::Deterministic;
  DemandModel demand;                 // pricing mode
  std::int64_t greedy_deadline = 0;   // 0: use the Lyapunov D_max
};

/// Full per-slot trajectory of a policy over a trace; the input to the
/// theorem checkers and CSV exporters.
struct RunRecord {
  PolicyKind policy = PolicyKind::Lyapunov;
  Params params;
  std::string trace_meta;
  std::vector<SlotObservation> observations;  // arrivals as realized
  std::vector<SlotOutcome> outcomes;
  std::vector<SchedulerState> states;  // state after each slot
  DelayStats delays;
  double cum_cost = 0.0;           // sum gamma * x_actual
  double cum_cost_decision = 0.0;  // sum gamma * x
  double cum_profit = 0.0;
  double cum_profit_actual = 0.0;
  double max_Q = 0.0;
  double max_Z = 0.0;
  bool drift_ok = true;            // only meaningful when drift was checked
  std::string realization_mode;
};

RunRecord run_policy(const Trace& trace, PolicyKind policy, const Params& p,
                     const RunOptions& options = {});

struct SweepRow {
  double value = 0.0;
  double cum_cost = 0.0;
  double cum_cost_decision = 0.0;
  std::int64_t max_delay = 0;
  double max_Q = 0.0;
  double max_Z = 0.0;
  std::optional<std::int64_t> D_max;
};

enum class SweepAxis { V, Epsilon };

std::vector<SweepRow> sweep(const Trace& trace, const Params& base,
                            SweepAxis axis, const std::vector<double>& values,
                            const RunOptions& options = {});

struct CheckResult {
  std::string name;
  bool pass = true;
  bool applicable = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Evaluates every sample-path guarantee on a finished run: queue bounds,
/// delay bound, bang-bang decisions, purchase dominance, the per-slot drift
/// inequality, conservation, and the universal bound for each requested T.
VerificationReport verify(const RunRecord& run, const Params& p,
                          const std::vector<std::int64_t>& T_values);

// CSV exporters. All numbers print in shortest round-trip form, so repeated
// runs with the same inputs are byte-identical.
void write_trajectory_csv(const RunRecord& run, const std::string& path);
void write_histogram_csv(const DelayStats& stats, const std::string& path);
void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path);

}  // namespace renewalloc
