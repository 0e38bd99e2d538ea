#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

namespace gonlab {

// Work and wall-clock limits for the exhaustive searches. A "step" is one
// enumerated candidate (divisor, subset, separator, search node).
struct Budget {
  using Clock = std::chrono::steady_clock;

  std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();
  std::optional<Clock::time_point> deadline;

  static Budget unlimited() { return {}; }

  static Budget steps(std::uint64_t n) {
    Budget b;
    b.max_steps = n;
    return b;
  }

  Budget& with_seconds(double seconds) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(seconds));
    return *this;
  }
};

// Thread-safe step counter against a Budget. The clock is polled every 4096
// steps per meter.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget) : budget_(budget) {}

  BudgetMeter(const BudgetMeter&) = delete;
  BudgetMeter& operator=(const BudgetMeter&) = delete;

  // Returns false once the budget is exhausted; sticky afterwards.
  bool charge(std::uint64_t n = 1) {
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t before = used_.fetch_add(n, std::memory_order_relaxed);
    const std::uint64_t after = before + n;
    if (after > budget_.max_steps) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (budget_.deadline && (before >> 12) != (after >> 12) &&
        Budget::Clock::now() > *budget_.deadline) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  Budget budget_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace gonlab
