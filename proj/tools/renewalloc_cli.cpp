// Command-line harness: run the allocation policies over traces, sweep
// parameters, compare against the greedy baseline, verify the sample-path
// guarantees, solve frame-lookahead problems, and generate synthetic traces.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "renewalloc/allocator.hpp"
#include "renewalloc/greedy.hpp"
#include "renewalloc/harness.hpp"
#include "renewalloc/oracle.hpp"
#include "renewalloc/trace.hpp"

namespace fs = std::filesystem;
using namespace renewalloc;

namespace {

struct CommonOpts {
  std::string trace_path;
  std::string generator = "iid";
  std::string policy = "lyapunov";
  double V = 100.0;
  double epsilon = -1.0;  // <0: default a_max/2
  double x_max = 400.0;
  double a_max = 175.0;
  double s_max = 90.0;
  double gamma_max = 180.0;
  double p_max = 0.0;
  std::uint64_t seed = 0;
  std::int64_t slots = 26496;  // six months of 10-minute slots
  std::string out_dir = ".";
  bool check_drift = true;
  double spike_baseline = 10.0;
  double spike_probability = 0.05;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_trace = true) {
  if (with_trace) {
    cmd->add_option("--trace", o.trace_path, "trace CSV (omit to generate)");
    cmd->add_option("--generator", o.generator,
                    "synthetic generator: iid|markov|spike|constant");
    cmd->add_option("--seed", o.seed, "generator / realization seed");
    cmd->add_option("--slots", o.slots, "generated trace length");
    cmd->add_option("--spike-baseline", o.spike_baseline);
    cmd->add_option("--spike-probability", o.spike_probability);
  }
  cmd->add_option("--V", o.V, "tradeoff weight (> 0)");
  cmd->add_option("--epsilon", o.epsilon,
                  "virtual-queue fill rate (default a_max/2)");
  cmd->add_option("--x-max", o.x_max);
  cmd->add_option("--a-max", o.a_max);
  cmd->add_option("--s-max", o.s_max);
  cmd->add_option("--gamma-max", o.gamma_max);
  cmd->add_option("--p-max", o.p_max, "max posted price (pricing mode)");
  cmd->add_option("--out-dir", o.out_dir, "output directory for CSVs");
  cmd->add_flag("--check-drift,!--no-check-drift", o.check_drift,
                "per-slot drift inequality checker");
  cmd->set_config("--config");
}

Params make_params(const CommonOpts& o) {
  Params p;
  p.V = o.V;
  p.epsilon = o.epsilon < 0.0 ? o.a_max / 2.0 : o.epsilon;
  p.x_max = o.x_max;
  p.a_max = o.a_max;
  p.s_max = o.s_max;
  p.gamma_max = o.gamma_max;
  p.p_max = o.p_max;
  return validate_params(p);
}

Trace make_trace(const CommonOpts& o) {
  if (!o.trace_path.empty()) return load_csv(o.trace_path);
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(o.generator);
  spec.seed = o.seed;
  spec.s_max = o.s_max;
  spec.a_max = o.a_max;
  spec.gamma_max = o.gamma_max;
  spec.spike_baseline = o.spike_baseline;
  spec.spike_probability = o.spike_probability;
  return generate(spec, o.slots);
}

void print_summary(const RunRecord& run) {
  std::cout << "policy=" << policy_name(run.policy)
            << " slots=" << run.outcomes.size()
            << " cum_cost_actual=" << run.cum_cost
            << " cum_cost_decision=" << run.cum_cost_decision
            << " max_Q=" << run.max_Q << " max_Z=" << run.max_Z
            << " max_delay=" << run.delays.max_delay;
  if (run.policy == PolicyKind::Pricing) {
    std::cout << " cum_profit=" << run.cum_profit
              << " cum_profit_actual=" << run.cum_profit_actual;
  }
  std::cout << '\n';
}

int print_report(const VerificationReport& report) {
  for (const auto& c : report.checks) {
    std::cout << c.name << ": "
              << (!c.applicable ? "skipped" : c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << '\n';
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyapunov drift-plus-penalty renewable energy allocation"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<double> sweep_values;
  std::string sweep_axis = "V";
  std::vector<std::int64_t> frame_Ts = {1, 10, 100};
  std::int64_t frame_T = 10;
  std::string out_file;

  auto* sim = app.add_subcommand("simulate", "run one policy over a trace");
  add_common(sim, o);
  sim->add_option("--policy", o.policy, "lyapunov|greedy|pricing");

  auto* swp = app.add_subcommand("sweep", "run the allocator across V or epsilon");
  add_common(swp, o);
  swp->add_option("--axis", sweep_axis, "V|epsilon");
  swp->add_option("--values", sweep_values, "sweep values")->required();

  auto* cmp = app.add_subcommand("compare",
                                 "Lyapunov vs greedy-at-deadline on one trace");
  add_common(cmp, o);

  auto* ver = app.add_subcommand("verify", "run a policy and check every bound");
  add_common(ver, o);
  ver->add_option("--policy", o.policy, "lyapunov|greedy|pricing");
  ver->add_option("--frame-T", frame_Ts, "frame sizes for the universal bound");

  auto* orc = app.add_subcommand("oracle", "frame-lookahead solver on a trace");
  add_common(orc, o);
  orc->add_option("--frame-T", frame_T, "frame size T");

  auto* gen = app.add_subcommand("gen", "generate a synthetic trace to CSV");
  add_common(gen, o);
  gen->add_option("--out", out_file, "output trace CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(o.out_dir);

    if (gen->parsed()) {
      o.trace_path.clear();
      write_csv(make_trace(o), out_file);
      return 0;
    }

    const Params p = make_params(o);
    const Trace trace = make_trace(o);
    RunOptions opts;
    opts.seed = o.seed;
    opts.check_drift = o.check_drift;
    if (p.p_max > 0.0) opts.demand = DemandModel::linear(p.a_max, p.p_max);

    if (sim->parsed()) {
      const RunRecord run =
          run_policy(trace, parse_policy(o.policy), p, opts);
      print_summary(run);
      write_trajectory_csv(run, o.out_dir + "/trajectory.csv");
      write_histogram_csv(run.delays, o.out_dir + "/delay_histogram.csv");
      return 0;
    }

    if (swp->parsed()) {
      const SweepAxis axis =
          sweep_axis == "epsilon" ? SweepAxis::Epsilon : SweepAxis::V;
      const auto rows = sweep(trace, p, axis, sweep_values, opts);
      write_sweep_csv(rows, o.out_dir + "/sweep.csv");
      for (const auto& row : rows) {
        std::cout << sweep_axis << "=" << row.value
                  << " cum_cost=" << row.cum_cost
                  << " max_delay=" << row.max_delay << '\n';
      }
      return 0;
    }

    if (cmp->parsed()) {
      const RunRecord lyap = run_policy(trace, PolicyKind::Lyapunov, p, opts);
      const RunRecord grd = run_policy(trace, PolicyKind::Greedy, p, opts);
      print_summary(lyap);
      print_summary(grd);
      write_trajectory_csv(lyap, o.out_dir + "/lyapunov_trajectory.csv");
      write_trajectory_csv(grd, o.out_dir + "/greedy_trajectory.csv");
      write_histogram_csv(lyap.delays, o.out_dir + "/lyapunov_delays.csv");
      write_histogram_csv(grd.delays, o.out_dir + "/greedy_delays.csv");
      std::cout << "cost ratio (greedy/lyapunov, actual): "
                << (lyap.cum_cost > 0.0 ? grd.cum_cost / lyap.cum_cost : 0.0)
                << '\n';
      return 0;
    }

    if (ver->parsed()) {
      const RunRecord run =
          run_policy(trace, parse_policy(o.policy), p, opts);
      print_summary(run);
      return print_report(verify(run, p, frame_Ts));
    }

    if (orc->parsed()) {
      const auto T = static_cast<std::size_t>(frame_T);
      const std::span<const SlotObservation> all(trace.slots);
      for (std::size_t r = 0; r * T + T <= all.size(); ++r) {
        const auto fr = solve_frame(all.subspan(r * T, T), p.epsilon, p.x_max);
        std::cout << "frame " << r << ": "
                  << (fr.feasible ? "c_star=" + std::to_string(fr.c_star)
                                  : std::string("infeasible"))
                  << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
