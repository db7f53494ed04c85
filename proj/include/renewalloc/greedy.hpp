#pragma once

#include <cstdint>
#include <deque>

#include "renewalloc/model.hpp"

namespace renewalloc {

/// "Purchase at deadline" baseline: serve from renewable supply FIFO, and
/// buy from the spot market only for batches that reach their deadline.
struct GreedyPolicy {
  struct Batch {
    std::int64_t arrival_slot = 0;
    double remaining = 0.0;
  };

  std::int64_t deadline = 1;  // slots
  std::deque<Batch> pending;
  std::int64_t slot = 0;
  bool x_max_exceeded = false;  // a forced purchase ever exceeded x_max
};

/// One greedy slot: drain pending batches FIFO with s(t), then purchase the
/// remaining energy of every batch whose age equals the deadline, then
/// enqueue a(t). outcome.x = x_actual = the forced purchase.
SlotOutcome greedy_step(GreedyPolicy& policy, const SlotObservation& obs,
                        const Params& p);

}  // namespace renewalloc
