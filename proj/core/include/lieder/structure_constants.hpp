#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lieder/lie.hpp"
#include "lieder/linear_solve.hpp"

namespace lieder {

/// Rational coordinates of [b_k, b_l] in the canonical basis of K_n.
class StructureConstants {
 public:
  /// Shared, lazily built table; safe to call concurrently.
  static const StructureConstants& of(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return n_ * n_; }
  const SparseVector<Rational>& bracket(std::size_t k, std::size_t l) const { return table_[k * dim() + l]; }

 private:
  explicit StructureConstants(std::size_t n);

  std::size_t n_;
  std::vector<SparseVector<Rational>> table_;
};

struct BracketEquation {
  /// Canonical basis index of the argument x.
  std::size_t argument;
  /// Required value of [a, x].
  SkewMatrix value;
};

/// Some a in the star-fixed span of the basis elements listed in `unknowns`
/// with [a, x] = value for every equation, solved exactly at every point of
/// the ring; nullopt if some point has no solution.
std::optional<SkewMatrix> solve_implementer(const Ring& ring, std::size_t n, const std::vector<std::size_t>& unknowns,
                                            const std::vector<BracketEquation>& equations);

}  // namespace lieder
