#pragma once

#include <cstdint>
#include <random>

namespace noma {

// Seeded random stream with independent substreams addressed by
// (master seed, stream index). Substream seeds are derived with a
// splitmix64 mix so results do not depend on how realizations are
// distributed over workers. Variates are produced from raw mt19937_64
// output instead of std::*_distribution, which keeps sequences
// identical across standard-library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(mix(seed)) {}

  static RngStream substream(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t next_u64() { return gen_(); }

  // uniform on [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unit-mean exponential
  double exponential();

  // exact Poisson sampling via the exponential-arrival race
  long poisson(double mean);

 private:
  static std::uint64_t mix(std::uint64_t x);
  std::mt19937_64 gen_;
};

}  // namespace noma
