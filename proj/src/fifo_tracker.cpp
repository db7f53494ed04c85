#include "renewalloc/fifo_tracker.hpp"

#include <algorithm>

namespace renewalloc {

void FifoTracker::enqueue(std::int64_t slot, double amount) {
  if (amount <= 0.0) return;
  pending_.push_back({slot, amount, amount});
}

std::int64_t FifoTracker::apply_service(std::int64_t slot, double amount) {
  std::int64_t completions = 0;
  while (amount > 0.0 && !pending_.empty()) {
    auto& head = pending_.front();
    const double take = std::min(amount, head.remaining);
    head.remaining -= take;
    amount -= take;
    if (head.remaining <= 0.0) {
      const std::int64_t delay = slot - head.arrival_slot;
      stats_.completed.push_back({head.arrival_slot, slot, delay});
      stats_.max_delay = std::max(stats_.max_delay, delay);
      ++stats_.histogram[delay];
      ++completions;
      pending_.pop_front();
    }
  }
  return completions;
}

double FifoTracker::total_remaining() const {
  double total = 0.0;
  for (const auto& b : pending_) total += b.remaining;
  return total;
}

bool verify_delay_bound(const DelayStats& stats, const DerivedBounds& bounds) {
  if (!bounds.D_max) return true;
  return stats.max_delay <= *bounds.D_max;
}

}  // namespace renewalloc
