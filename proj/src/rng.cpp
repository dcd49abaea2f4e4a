#include "noma/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace noma {

std::uint64_t RngStream::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

RngStream RngStream::substream(std::uint64_t master_seed, std::uint64_t index) {
  return RngStream(mix(master_seed) ^ mix(index * 0xD6E8FEB86659FD93ull + 1));
}

double RngStream::exponential() {
  // u < 1 strictly, so the log argument never reaches 0
  return -std::log1p(-uniform());
}

long RngStream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("poisson: mean must be finite and >= 0");
  }
  double acc = 0.0;
  long count = -1;
  while (acc <= mean) {
    acc += exponential();
    ++count;
  }
  return count;
}

}  // namespace noma
