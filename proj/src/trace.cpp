#include "renewalloc/trace.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace renewalloc {

namespace {

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_field(const std::string& text, const char* column,
                   std::int64_t line) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("malformed row at line " + std::to_string(line) +
                             ": bad value for " + column);
  }
  if (!std::isfinite(v) || v < 0.0) {
    throw std::runtime_error("bound violation at line " + std::to_string(line) +
                             ": " + column + " = " + text);
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "iid") return GeneratorKind::IidUniform;
  if (name == "markov") return GeneratorKind::Markov;
  if (name == "spike") return GeneratorKind::PriceSpike;
  if (name == "constant") return GeneratorKind::Constant;
  throw std::invalid_argument("unknown generator: " + name);
}

std::string generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::IidUniform: return "iid";
    case GeneratorKind::Markov: return "markov";
    case GeneratorKind::PriceSpike: return "spike";
    case GeneratorKind::Constant: return "constant";
  }
  return "?";
}

Trace generate(const GeneratorSpec& spec, std::int64_t length) {
  switch (spec.kind) {
    case GeneratorKind::IidUniform: return gen_iid(spec, length);
    case GeneratorKind::Markov: return gen_markov(spec, length);
    case GeneratorKind::PriceSpike: return gen_price_spike(spec, length);
    case GeneratorKind::Constant: return gen_constant(spec, length);
  }
  throw std::invalid_argument("unknown generator kind");
}

Trace gen_iid(const GeneratorSpec& spec, std::int64_t length) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::int64_t> a_dist(
      0, static_cast<std::int64_t>(std::floor(spec.a_max)));
  std::uniform_real_distribution<double> s_dist(0.0, spec.s_max);
  std::uniform_real_distribution<double> g_dist(0.0, spec.gamma_max);

  Trace t;
  t.meta = "gen=iid seed=" + std::to_string(spec.seed);
  t.slots.reserve(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) {
    SlotObservation obs;
    obs.s = spec.s_max > 0.0 ? s_dist(rng) : 0.0;
    obs.a = static_cast<double>(a_dist(rng));
    obs.gamma = spec.gamma_max > 0.0 ? g_dist(rng) : 0.0;
    t.slots.push_back(obs);
  }
  return t;
}

Trace gen_markov(const GeneratorSpec& spec, std::int64_t length) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // One HIGH/LOW chain per process; LOW draws from the lower half of the
  // range, HIGH from the upper half.
  bool high[3] = {false, false, false};
  auto draw = [&](bool h, double max_value) {
    const double half = max_value / 2.0;
    return (h ? half : 0.0) + unit(rng) * half;
  };

  Trace t;
  t.meta = "gen=markov seed=" + std::to_string(spec.seed);
  t.slots.reserve(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) {
    for (bool& h : high) {
      if (unit(rng) < spec.markov_flip_probability) h = !h;
    }
    SlotObservation obs;
    obs.s = draw(high[0], spec.s_max);
    obs.a = std::floor(draw(high[1], spec.a_max + 1.0));
    if (obs.a > spec.a_max) obs.a = spec.a_max;
    obs.gamma = draw(high[2], spec.gamma_max);
    t.slots.push_back(obs);
  }
  return t;
}

Trace gen_price_spike(const GeneratorSpec& spec, std::int64_t length) {
  if (spec.spike_baseline > spec.gamma_max) {
    throw std::invalid_argument("spike baseline exceeds gamma_max");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> a_dist(
      0, static_cast<std::int64_t>(std::floor(spec.a_max)));
  std::uniform_real_distribution<double> s_dist(0.0, spec.s_max);

  Trace t;
  t.meta = "gen=spike seed=" + std::to_string(spec.seed);
  t.slots.reserve(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) {
    SlotObservation obs;
    obs.s = spec.s_max > 0.0 ? s_dist(rng) : 0.0;
    obs.a = static_cast<double>(a_dist(rng));
    obs.gamma =
        unit(rng) < spec.spike_probability ? spec.gamma_max : spec.spike_baseline;
    t.slots.push_back(obs);
  }
  return t;
}

Trace gen_constant(const GeneratorSpec& spec, std::int64_t length) {
  Trace t;
  t.meta = "gen=constant";
  SlotObservation obs;
  obs.s = spec.const_s;
  obs.a = spec.const_a;
  obs.gamma = spec.const_gamma;
  if (spec.emit_y) obs.y = spec.const_y;
  t.slots.assign(static_cast<std::size_t>(length), obs);
  return t;
}

Trace load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty trace file: " + path);
  }
  bool has_y = false;
  if (line == "slot,s,a,gamma") {
    has_y = false;
  } else if (line == "slot,s,a,gamma,y") {
    has_y = true;
  } else {
    throw std::runtime_error("unexpected trace header: " + line);
  }

  Trace t;
  t.meta = "file=" + path;
  std::int64_t line_no = 1;
  std::int64_t expected_slot = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    const std::size_t want = has_y ? 5 : 4;
    if (fields.size() != want) {
      throw std::runtime_error("malformed row at line " +
                               std::to_string(line_no) + ": expected " +
                               std::to_string(want) + " fields");
    }
    const auto slot =
        static_cast<std::int64_t>(parse_field(fields[0], "slot", line_no));
    if (slot != expected_slot) {
      throw std::runtime_error("non-contiguous slot index at line " +
                               std::to_string(line_no));
    }
    ++expected_slot;
    SlotObservation obs;
    obs.s = parse_field(fields[1], "s", line_no);
    obs.a = parse_field(fields[2], "a", line_no);
    obs.gamma = parse_field(fields[3], "gamma", line_no);
    if (has_y) obs.y = parse_field(fields[4], "y", line_no);
    t.slots.push_back(obs);
  }
  return t;
}

void write_csv(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  const bool has_y = !trace.slots.empty() && trace.slots.front().y.has_value();
  out << (has_y ? "slot,s,a,gamma,y\n" : "slot,s,a,gamma\n");
  for (std::size_t i = 0; i < trace.slots.size(); ++i) {
    const auto& obs = trace.slots[i];
    out << i << ',' << fmt(obs.s) << ',' << fmt(obs.a) << ',' << fmt(obs.gamma);
    if (has_y) out << ',' << fmt(obs.y.value_or(0.0));
    out << '\n';
  }
}

}  // namespace renewalloc
