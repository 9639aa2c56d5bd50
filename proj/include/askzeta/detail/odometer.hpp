#pragma once

#include <cstdint>
#include <vector>

namespace askzeta::detail {

/// Row-major counter over {0, ..., base-1}^width; the last digit moves fastest.
class Odometer {
 public:
  Odometer(std::size_t width, std::int64_t base) : digits_(width, 0), base_(base) {}

  const std::vector<std::int64_t>& digits() const { return digits_; }

  /// Advances to the next tuple. Returns the index of the leftmost digit that
  /// changed, or -1 after wrapping past the last tuple. Digits at and to the
  /// right of the returned index each moved by +1 (mod base).
  long advance() {
    for (std::size_t k = digits_.size(); k-- > 0;) {
      if (++digits_[k] < base_) return static_cast<long>(k);
      digits_[k] = 0;
    }
    return -1;
  }

 private:
  std::vector<std::int64_t> digits_;
  std::int64_t base_;
};

/// base^width, or -1 when the value exceeds limit.
inline std::int64_t checked_power(std::int64_t base, std::size_t width, std::int64_t limit) {
  std::int64_t total = 1;
  for (std::size_t k = 0; k < width; ++k) {
    if (base != 0 && total > limit / base) return -1;
    total *= base;
  }
  return total;
}

}  // namespace askzeta::detail
