#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renewalloc/model.hpp"

namespace renewalloc {

/// An ordered sequence of slot observations plus provenance. The canonical
/// interchange format is CSV with header `slot,s,a,gamma[,y]`, 0-based
/// contiguous slot indices, one row per slot.
struct Trace {
  std::vector<SlotObservation> slots;
  int slot_minutes = 10;
  std::string meta;  // source file or generator spec + seed
};

enum class GeneratorKind { IidUniform, Markov, PriceSpike, Constant };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::IidUniform;
  std::uint64_t seed = 0;

  // Bounds; generated values always respect them. a is drawn on the
  // integers {0, ..., a_max}; s and gamma are uniform on [0, max] unless
  // the generator says otherwise.
  double s_max = 0.0;
  double a_max = 0.0;
  double gamma_max = 0.0;

  // CONSTANT values
  double const_s = 0.0;
  double const_a = 0.0;
  double const_gamma = 0.0;
  double const_y = 1.0;
  bool emit_y = false;

  // PRICE_SPIKE: baseline price with seeded spikes to gamma_max
  double spike_baseline = 0.0;
  double spike_probability = 0.0;

  // MARKOV: two-state (HIGH/LOW) modulation per process; each process draws
  // uniformly from the lower or upper half of its range and flips state
  // with this probability per slot.
  double markov_flip_probability = 0.1;
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string generator_kind_name(GeneratorKind kind);

Trace generate(const GeneratorSpec& spec, std::int64_t length);

Trace gen_iid(const GeneratorSpec& spec, std::int64_t length);
Trace gen_markov(const GeneratorSpec& spec, std::int64_t length);
Trace gen_price_spike(const GeneratorSpec& spec, std::int64_t length);
Trace gen_constant(const GeneratorSpec& spec, std::int64_t length);

/// Parses the canonical CSV. Throws std::runtime_error with the line number
/// for malformed rows and the offending column for NaN/negative values.
Trace load_csv(const std::string& path);

/// Writes the canonical CSV; numbers round-trip bit-exactly through
/// load_csv.
void write_csv(const Trace& trace, const std::string& path);

}  // namespace renewalloc
