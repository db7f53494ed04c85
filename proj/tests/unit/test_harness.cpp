#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "renewalloc/harness.hpp"

using namespace renewalloc;

namespace {

Params paper_params() {
  Params p;
  p.V = 100.0;
  p.epsilon = 87.5;
  p.x_max = 400.0;
  p.a_max = 175.0;
  p.s_max = 90.0;
  p.gamma_max = 180.0;
  return p;
}

Trace iid_trace(std::uint64_t seed, std::int64_t n) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.s_max = 90.0;
  spec.a_max = 175.0;
  spec.gamma_max = 180.0;
  return gen_iid(spec, n);
}

}  // namespace

TEST_CASE("lyapunov run passes every applicable check") {
  const Params p = paper_params();
  const Trace trace = iid_trace(1, 20000);
  const RunRecord run = run_policy(trace, PolicyKind::Lyapunov, p);
  const VerificationReport report = verify(run, p, {1, 10, 100});
  for (const auto& c : report.checks) {
    if (c.applicable) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
  CHECK(report.all_passed());
}

TEST_CASE("greedy run skips the theorem checks but keeps conservation") {
  const Params p = paper_params();
  const Trace trace = iid_trace(2, 10000);
  const RunRecord run = run_policy(trace, PolicyKind::Greedy, p);
  const VerificationReport report = verify(run, p, {10});
  bool saw_skipped = false, saw_conservation = false;
  for (const auto& c : report.checks) {
    if (c.name == "queue_bounds") {
      CHECK_FALSE(c.applicable);
      saw_skipped = true;
    }
    if (c.name == "conservation") {
      CHECK(c.applicable);
      CHECK(c.pass);
      saw_conservation = true;
    }
  }
  CHECK(saw_skipped);
  CHECK(saw_conservation);
  CHECK(report.all_passed());
}

TEST_CASE("a tampered trajectory fails verification") {
  const Params p = paper_params();
  const Trace trace = iid_trace(3, 2000);
  RunRecord run = run_policy(trace, PolicyKind::Lyapunov, p);
  run.max_Q = derived_bounds(p).Q_max + 1.0;
  CHECK_FALSE(verify(run, p, {}).all_passed());
}

TEST_CASE("greedy pays more than the allocator on spiky prices") {
  const Params p = paper_params();
  GeneratorSpec spec;
  spec.kind = GeneratorKind::PriceSpike;
  spec.seed = 6;
  spec.s_max = p.s_max;
  spec.a_max = p.a_max;
  spec.gamma_max = p.gamma_max;
  spec.spike_baseline = 10.0;
  spec.spike_probability = 0.05;
  const Trace trace = generate(spec, 26496);

  const RunRecord lyap = run_policy(trace, PolicyKind::Lyapunov, p);
  const RunRecord greedy = run_policy(trace, PolicyKind::Greedy, p);
  CHECK(greedy.cum_cost > lyap.cum_cost);
}

TEST_CASE("single-value sweep equals a direct run") {
  const Params p = paper_params();
  const Trace trace = iid_trace(4, 5000);
  const auto rows = sweep(trace, p, SweepAxis::V, {p.V});
  REQUIRE(rows.size() == 1);
  const RunRecord run = run_policy(trace, PolicyKind::Lyapunov, p);
  CHECK(rows[0].cum_cost == run.cum_cost);
  CHECK(rows[0].max_delay == run.delays.max_delay);
  CHECK(rows[0].max_Q == run.max_Q);
}

TEST_CASE("CSV exporters are deterministic") {
  namespace fs = std::filesystem;
  const Params p = paper_params();
  const Trace trace = iid_trace(5, 2000);
  const RunRecord run = run_policy(trace, PolicyKind::Lyapunov, p);

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = (fs::temp_directory_path() / "traj_a.csv").string();
  const std::string b = (fs::temp_directory_path() / "traj_b.csv").string();
  write_trajectory_csv(run, a);
  write_trajectory_csv(run, b);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("slot,Q,Z,x,x_actual,cost_x,cost_x_actual,served\n",
                       0) == 0);

  write_histogram_csv(run.delays, a);
  CHECK(slurp(a).rfind("delay_slots,count", 0) == 0);
}
