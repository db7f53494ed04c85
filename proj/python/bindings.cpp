#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "renewalloc/allocator.hpp"
#include "renewalloc/harness.hpp"
#include "renewalloc/oracle.hpp"
#include "renewalloc/trace.hpp"

namespace py = pybind11;
using namespace renewalloc;

namespace {

SlotObservation make_obs(double s, double a, double gamma,
                         std::optional<double> y) {
  return SlotObservation{s, a, gamma, y};
}

py::dict summarize(const RunRecord& run) {
  py::dict d;
  d["policy"] = policy_name(run.policy);
  d["slots"] = run.outcomes.size();
  d["cum_cost_actual"] = run.cum_cost;
  d["cum_cost_decision"] = run.cum_cost_decision;
  d["cum_profit"] = run.cum_profit;
  d["cum_profit_actual"] = run.cum_profit_actual;
  d["max_Q"] = run.max_Q;
  d["max_Z"] = run.max_Z;
  d["max_delay"] = run.delays.max_delay;
  d["drift_ok"] = run.drift_ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(_renewalloc, m) {
  m.doc() = "Lyapunov drift-plus-penalty renewable energy allocation";

  py::class_<Params>(m, "Params")
      .def(py::init<>())
      .def_readwrite("V", &Params::V)
      .def_readwrite("epsilon", &Params::epsilon)
      .def_readwrite("x_max", &Params::x_max)
      .def_readwrite("a_max", &Params::a_max)
      .def_readwrite("s_max", &Params::s_max)
      .def_readwrite("gamma_max", &Params::gamma_max)
      .def_readwrite("p_max", &Params::p_max);

  py::class_<SlotObservation>(m, "SlotObservation")
      .def(py::init(&make_obs), py::arg("s"), py::arg("a"), py::arg("gamma"),
           py::arg("y") = std::nullopt)
      .def_readwrite("s", &SlotObservation::s)
      .def_readwrite("a", &SlotObservation::a)
      .def_readwrite("gamma", &SlotObservation::gamma)
      .def_readwrite("y", &SlotObservation::y);

  py::class_<DerivedBounds>(m, "DerivedBounds")
      .def_readonly("B", &DerivedBounds::B)
      .def_readonly("Q_max", &DerivedBounds::Q_max)
      .def_readonly("Z_max", &DerivedBounds::Z_max)
      .def_readonly("D_max", &DerivedBounds::D_max)
      .def_readonly("C_Q", &DerivedBounds::C_Q)
      .def_readonly("C_Z", &DerivedBounds::C_Z);

  m.def("validate_params", &validate_params);
  m.def("derived_bounds", &derived_bounds);
  m.def("update_queue", &update_queue, py::arg("Q"), py::arg("s"),
        py::arg("x"), py::arg("a"));
  m.def("update_virtual_queue", &update_virtual_queue, py::arg("Z"),
        py::arg("s"), py::arg("x"), py::arg("epsilon"), py::arg("q_positive"));
  m.def("actual_purchase", &actual_purchase, py::arg("Q"), py::arg("s"),
        py::arg("x"));
  m.def(
      "decide_purchase",
      [](double Q, double Z, double gamma, const Params& p) {
        return decide_purchase({Q, Z}, gamma, p);
      },
      py::arg("Q"), py::arg("Z"), py::arg("gamma"), py::arg("params"));

  m.def(
      "solve_frame",
      [](const std::vector<SlotObservation>& frame, double epsilon,
         double x_max) {
        const FrameOracleResult res = solve_frame(frame, epsilon, x_max);
        py::dict d;
        d["feasible"] = res.feasible;
        d["c_star"] = res.c_star;
        d["x_star"] = res.x_star;
        return d;
      },
      py::arg("frame"), py::arg("epsilon"), py::arg("x_max"));

  m.def(
      "simulate",
      [](const std::string& policy, const std::string& generator,
         std::uint64_t seed, std::int64_t slots, const Params& p) {
        GeneratorSpec spec;
        spec.kind = parse_generator_kind(generator);
        spec.seed = seed;
        spec.s_max = p.s_max;
        spec.a_max = p.a_max;
        spec.gamma_max = p.gamma_max;
        if (spec.kind == GeneratorKind::PriceSpike) {
          spec.spike_baseline = 10.0;
          spec.spike_probability = 0.05;
        }
        const Trace trace = generate(spec, slots);
        RunOptions opts;
        opts.seed = seed;
        if (p.p_max > 0.0) opts.demand = DemandModel::linear(p.a_max, p.p_max);
        return summarize(run_policy(trace, parse_policy(policy), p, opts));
      },
      py::arg("policy"), py::arg("generator"), py::arg("seed"),
      py::arg("slots"), py::arg("params"));

  m.def(
      "simulate_csv",
      [](const std::string& policy, const std::string& trace_path,
         const Params& p, std::uint64_t seed) {
        const Trace trace = load_csv(trace_path);
        RunOptions opts;
        opts.seed = seed;
        if (p.p_max > 0.0) opts.demand = DemandModel::linear(p.a_max, p.p_max);
        return summarize(run_policy(trace, parse_policy(policy), p, opts));
      },
      py::arg("policy"), py::arg("trace_path"), py::arg("params"),
      py::arg("seed") = 0);
}
