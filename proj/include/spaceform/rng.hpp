#ifndef SPACEFORM_RNG_HPP
#define SPACEFORM_RNG_HPP

// Deterministic random source.  The engine is the standard 64-bit Mersenne
// twister, whose output stream is fully specified, and doubles are derived
// from it by fixed bit arithmetic rather than through the (implementation-
// defined) standard distributions — identical seeds therefore reproduce
// identical streams on every platform and standard library.

#include <cstdint>
#include <random>

namespace spaceform {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform on [0, 1), with 53 random mantissa bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in {lo, ..., hi}.
  int uniform_int(int lo, int hi) {
    const int span = hi - lo + 1;
    int v = lo + static_cast<int>(uniform() * span);
    return v > hi ? hi : v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spaceform

#endif  // SPACEFORM_RNG_HPP
