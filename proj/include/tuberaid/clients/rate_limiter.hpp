#pragma once

#include <chrono>
#include <cstddef>
#include <deque>
#include <mutex>

namespace tuberaid::clients {

// Time source the clients sleep on; tests substitute a manual clock.
class Clock {
public:
  using Duration = std::chrono::nanoseconds;
  virtual ~Clock() = default;
  virtual Duration now() = 0;
  virtual void sleep_for(Duration d) = 0;
};

class SystemClock final : public Clock {
public:
  Duration now() override;
  void sleep_for(Duration d) override;
};

// Advances only when slept on. Thread-safe.
class ManualClock final : public Clock {
public:
  Duration now() override;
  void sleep_for(Duration d) override;
  void advance(Duration d);

private:
  std::mutex mutex_;
  Duration now_{0};
};

// Sliding-window limiter: no more than floor(rate) acquisitions in any
// one-second window. Rates below one allow a single acquisition per 1/rate
// seconds. Thread-safe.
class RateLimiter {
public:
  RateLimiter(double per_second, Clock &clock);

  // Blocks until a slot is free; returns the acquisition time.
  Clock::Duration acquire();

  std::size_t capacity() const noexcept { return capacity_; }
  Clock::Duration window() const noexcept { return window_; }

private:
  Clock &clock_;
  std::size_t capacity_;
  Clock::Duration window_;
  std::mutex mutex_;
  std::deque<Clock::Duration> recent_;
};

} // namespace tuberaid::clients
