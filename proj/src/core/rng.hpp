#pragma once

#include <cstdint>

namespace sqz {

// Counter-based generator built on the splitmix64 finalizer. Draw i depends
// only on (seed, stream, i), so parallel workers and serial loops produce
// identical output for the same indices.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(seed ^ (0xd1b54a32d192ed03ULL * (stream + 1))) {}

  std::uint64_t at(std::uint64_t index) const {
    std::uint64_t z = key_ + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform_at(std::uint64_t index) const {
    return static_cast<double>(at(index) >> 11) * 0x1.0p-53;  // [0, 1)
  }

  std::uint64_t next_u64() { return at(counter_++); }
  double next_double() { return uniform_at(counter_++); }
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
  double next_rademacher() { return next_double() < 0.5 ? -1.0 : 1.0; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sqz
