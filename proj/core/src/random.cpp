#include "lieder/random.hpp"

#include <string>

namespace lieder {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational(std::int64_t span, std::int64_t max_den) {
  const long num = static_cast<long>(uniform(-span, span));
  const long den = static_cast<long>(uniform(1, max_den));
  return Rational(num, den);
}

Rational Rng::nonzero_rational(std::int64_t span, std::int64_t max_den) {
  long num = static_cast<long>(uniform(1, span));
  if (coin()) num = -num;
  return Rational(num, static_cast<long>(uniform(1, max_den)));
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  return fnv1a(label, fnv1a(std::to_string(seed)));
}

}  // namespace lieder
