#pragma once

#include <cstdint>
#include <random>

namespace jackprod {

/// MT19937-64 with doubles taken from the top 53 bits of each draw, so a
/// seed reproduces the same sample stream on every standard library.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (lo, hi].
  double uniform_open_closed(double lo, double hi) { return hi - (hi - lo) * uniform01(); }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jackprod
