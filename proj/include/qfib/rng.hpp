#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qfib {

// splitmix64; used to derive independent per-task streams from a master seed
// so that parallel stages stay reproducible regardless of scheduling.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = mix64(master);
  for (char c : tag) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  return mix64(h ^ index);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform integer in [lo, hi]
  long uniform_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  double uniform_real(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(eng_);
  }

  // nonzero integer in [-bound, bound]
  long nonzero_int(long bound) {
    long v = 0;
    while (v == 0) v = uniform_int(-bound, bound);
    return v;
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

}  // namespace qfib
