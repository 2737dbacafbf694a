#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qcl {

// Error raised when an input exceeds a configured capacity (e.g. qubit count).
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error raised by an energy oracle (or on its behalf).
class oracle_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse/validation error for files and textual inputs.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic RNG wrapper. All randomness in the library flows through
// this type so that a fixed seed reproduces byte-identical outputs; the
// raw mt19937_64 stream is consumed with fixed arithmetic (no
// std::*_distribution, whose output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform double in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform double in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    // modulo rejection to avoid bias
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// 64-bit mixing hash (splitmix64 finalizer), used for seeded deterministic
// per-key draws that must not consume RNG stream state.
inline std::uint64_t mix_hash(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Shortest decimal form that round-trips a double exactly.
std::string format_double(double v);

}  // namespace qcl
