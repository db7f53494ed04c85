#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "renewalloc/model.hpp"

namespace renewalloc {

struct ArrivalBatch {
  std::int64_t arrival_slot = 0;
  double amount = 0.0;
  double remaining = 0.0;
};

struct CompletedBatch {
  std::int64_t arrival_slot = 0;
  std::int64_t completion_slot = 0;
  std::int64_t delay = 0;  // completion - arrival, >= 1
};

struct DelayStats {
  std::vector<CompletedBatch> completed;
  std::int64_t max_delay = 0;
  std::map<std::int64_t, std::int64_t> histogram;  // delay -> batch count
};

/// Follows individual arrival batches through FIFO service so per-request
/// delay can be measured against the worst-case bound.
class FifoTracker {
 public:
  /// Registers the slot's arrivals (after that slot's service has been
  /// applied, matching the queue-update ordering). Zero amounts are ignored.
  void enqueue(std::int64_t slot, double amount);

  /// Drains `amount` of service front-first; batches whose remaining energy
  /// hits zero complete on this slot. Returns the number of completions.
  std::int64_t apply_service(std::int64_t slot, double amount);

  double total_remaining() const;
  const DelayStats& stats() const { return stats_; }

 private:
  std::deque<ArrivalBatch> pending_;
  DelayStats stats_;
};

/// True iff the observed max delay respects D_max; unbounded D_max
/// (epsilon = 0) passes vacuously.
bool verify_delay_bound(const DelayStats& stats, const DerivedBounds& bounds);

}  // namespace renewalloc
