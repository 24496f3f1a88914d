#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "adtpf/errors.hpp"

namespace adtpf {

/// Optional wall-clock limit polled by long-running analyses.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}

  static Deadline none() { return Deadline{}; }
  static Deadline after(std::chrono::duration<double> budget) {
    return Deadline{Clock::now() +
                    std::chrono::duration_cast<Clock::duration>(budget)};
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  /// Throws TimeoutError once the deadline has passed. Only reads the clock
  /// every 4096 calls so it can sit inside tight loops.
  void poll() const {
    if (!at_) return;
    if ((++ticks_ & 0xFFF) == 0 && Clock::now() >= *at_) throw TimeoutError{};
  }

  void check() const {
    if (expired()) throw TimeoutError{};
  }

 private:
  std::optional<Clock::time_point> at_;
  mutable std::uint64_t ticks_ = 0;
};

}  // namespace adtpf
