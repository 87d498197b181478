#ifndef ODDSIGN_BUDGET_HPP
#define ODDSIGN_BUDGET_HPP

#include <cstdint>

#include "oddsign/errors.hpp"

namespace oddsign {

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;

// Shared step counter for exponential searches. Running out throws
// CapExceeded; callers that report a three-way outcome catch it.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit = kDefaultWorkBudget) : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw CapExceeded("work budget of " + std::to_string(limit_) + " steps exceeded");
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

enum class Outcome { found, absent, capped };

const char* to_string(Outcome o);

}  // namespace oddsign

#endif  // ODDSIGN_BUDGET_HPP
