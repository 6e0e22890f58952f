#pragma once

#include <cstdint>

namespace ownlink {

// Logical simulation clock in integer milliseconds. Every timestamp in the
// system flows from one of these; wall time is never consulted.
class SimClock {
 public:
  explicit SimClock(std::int64_t start_ms = 0) : now_ms_(start_ms) {}

  [[nodiscard]] std::int64_t now_ms() const { return now_ms_; }

  void advance(std::int64_t delta_ms) { now_ms_ += delta_ms; }

  // Moves forward only; a scenario step earlier than "now" does not rewind.
  void advance_to(std::int64_t t_ms) {
    if (t_ms > now_ms_) now_ms_ = t_ms;
  }

 private:
  std::int64_t now_ms_;
};

}  // namespace ownlink
