#include "lieder/structure_constants.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace lieder {

StructureConstants::StructureConstants(std::size_t n) : n_(n) {
  const Ring ring = Ring::gauss();
  CanonicalBasis basis(ring, n);
  table_.resize(dim() * dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    for (std::size_t l = 0; l < dim(); ++l) {
      const auto c = rational_coordinates(lieder::bracket(basis[k], basis[l]));
      auto& entry = table_[k * dim() + l];
      for (std::size_t m = 0; m < c.size(); ++m) {
        if (!c[m].is_zero()) entry.emplace(m, c[m]);
      }
    }
  }
}

const StructureConstants& StructureConstants::of(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<StructureConstants>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot.reset(new StructureConstants(n));
  return *slot;
}

std::optional<SkewMatrix> solve_implementer(const Ring& ring, std::size_t n, const std::vector<std::size_t>& unknowns,
                                            const std::vector<BracketEquation>& equations) {
  const auto& sc = StructureConstants::of(n);
  const std::size_t points = solve_points(ring);
  const std::size_t rhs = unknowns.size();
  std::vector<std::vector<Rational>> solution(points, std::vector<Rational>(n * n));
  for (std::size_t t = 0; t < points; ++t) {
    Echelon<Rational> system;
    for (const auto& eq : equations) {
      std::map<std::size_t, SparseVector<Rational>> rows;
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        for (const auto& [m, c] : sc.bracket(unknowns[u], eq.argument)) rows[m].emplace(u, c);
      }
      const auto target = rational_coordinates(eq.value, t);
      for (std::size_t m = 0; m < target.size(); ++m) {
        if (!target[m].is_zero()) rows[m].emplace(rhs, target[m]);
      }
      for (auto& [m, row] : rows) system.insert(std::move(row));
    }
    auto x = system.solve(rhs);
    if (!x) return std::nullopt;
    for (const auto& [u, v] : *x) solution[t][unknowns[u]] = v;
  }
  std::vector<RingElement> coefficients;
  coefficients.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (ring.kind() == RingKind::Gauss) {
      coefficients.emplace_back(GaussianRational(solution[0][k]));
    } else {
      std::vector<GaussianRational> v;
      for (std::size_t t = 0; t < points; ++t) v.emplace_back(solution[t][k]);
      coefficients.emplace_back(FunctionValue(std::move(v)));
    }
  }
  return recompose(ring, n, coefficients);
}

}  // namespace lieder
