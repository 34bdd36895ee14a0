#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lieder/rational.hpp"

namespace lieder {

/// Seeded generator whose output is identical on every platform: the engine
/// is fully specified by the standard and bounded draws avoid std
/// distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }
  /// num/den with |num| <= span and 1 <= den <= max_den.
  Rational rational(std::int64_t span = 5, std::int64_t max_den = 3);
  Rational nonzero_rational(std::int64_t span = 5, std::int64_t max_den = 3);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a(std::string_view text, std::uint64_t basis = 1469598103934665603ULL);
/// Derives an independent stream seed from a parent seed and a label.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

}  // namespace lieder
