// Deterministic seeded RNG: identical seeds must give identical streams on
// every platform, so distributions are implemented by hand (the standard
// library's are implementation-defined).
#pragma once

#include <cstdint>

#include "rat.hpp"

namespace guspin {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  // splitmix64: tiny, high-quality, reproducible.
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is irrelevant at our tiny ranges.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1) != 0; }

  // Rational with numerator in [-n, n] and denominator in [1, d].
  Rat rational(long n, long d = 1) { return rat(range(-n, n), range(1, d)); }

  // Nonzero rational with numerator in [-n, n] \ {0}.
  Rat nonzero_rational(long n, long d = 1) {
    long num = range(1, n);
    if (flip()) num = -num;
    return rat(num, range(1, d));
  }

  // Uniform double in [lo, hi) from 53 random bits.
  double real(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

 private:
  std::uint64_t state_;
};

}  // namespace guspin
