#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lieder/lie.hpp"
#include "lieder/report.hpp"

namespace lieder {

/// Witnessed 2-local inner derivation: for every pair (x, y) one element a
/// with Delta(x) = [a, x] and Delta(y) = [a, y]. Delta itself is read off the
/// diagonal query: Delta(x) = [query(x, x), x].
class PairWitnessOracle {
 public:
  virtual ~PairWitnessOracle() = default;
  virtual std::size_t n() const = 0;
  virtual const Ring& ring() const = 0;
  /// Deterministic in (x, y) and the oracle's seed.
  virtual SkewMatrix query(const SkewMatrix& x, const SkewMatrix& y) const = 0;
};

enum class GaugeModel { None, Central };

std::string_view to_string(GaugeModel gauge);
GaugeModel parse_gauge(std::string_view text);

/// Witness a0 + g(x, y) with g a central element lambda*I*1 whose scalar is
/// derived from a hash of (x, y, seed).
class GaugedInnerTwoLocal final : public PairWitnessOracle {
 public:
  GaugedInnerTwoLocal(SkewMatrix a0, GaugeModel gauge, std::uint64_t seed);

  std::size_t n() const override { return a0_.n(); }
  const Ring& ring() const override { return a0_.ring(); }
  SkewMatrix query(const SkewMatrix& x, const SkewMatrix& y) const override;

  const SkewMatrix& generator() const { return a0_; }

 private:
  SkewMatrix a0_;
  GaugeModel gauge_;
  std::uint64_t seed_;
};

/// Pointwise oracle over the function ring on |Omega| points, one base
/// oracle over the Gaussian rationals per point.
class FunctionRingTwoLocal final : public PairWitnessOracle {
 public:
  explicit FunctionRingTwoLocal(std::vector<std::shared_ptr<const PairWitnessOracle>> points);

  std::size_t n() const override { return n_; }
  const Ring& ring() const override { return ring_; }
  SkewMatrix query(const SkewMatrix& x, const SkewMatrix& y) const override;

 private:
  std::vector<std::shared_ptr<const PairWitnessOracle>> points_;
  std::size_t n_;
  Ring ring_;
};

/// Fault injection: for off-diagonal queries (x != y) where x or y is
/// +-s_{u,v}, adds I*ebar_{u,v} to the base witness, which breaks the pair
/// contract at s_{u,v}.
class PerturbedTwoLocal final : public PairWitnessOracle {
 public:
  PerturbedTwoLocal(std::shared_ptr<const PairWitnessOracle> base, std::size_t u, std::size_t v);

  std::size_t n() const override { return base_->n(); }
  const Ring& ring() const override { return base_->ring(); }
  SkewMatrix query(const SkewMatrix& x, const SkewMatrix& y) const override;

 private:
  std::shared_ptr<const PairWitnessOracle> base_;
  SkewMatrix target_;
  SkewMatrix perturbation_;
};

/// Index p for the pair (i, j) used by the off-diagonal extraction.
using PChoice = std::function<std::size_t(std::size_t i, std::size_t j)>;
/// Smallest index distinct from i and j.
std::size_t default_p(std::size_t i, std::size_t j);

struct OffDiagonalCorners {
  Matrix a_ij;
  Matrix a_ji;
};

SkewMatrix delta_eval(const PairWitnessOracle& oracle, const SkewMatrix& x);

/// Corners (i,j) and (j,i) of the witness of the pair (s_{i,p}, s_{p,j}).
/// Throws NeedThreeIndices when n < 3.
OffDiagonalCorners extract_offdiagonal(const PairWitnessOracle& oracle, std::size_t i, std::size_t j, std::size_t p);

/// Diagonal entries c^{i,i} of the witness c of the pair (s_{io,jo}, x_o).
std::vector<RingElement> extract_diagonal(const PairWitnessOracle& oracle, std::size_t io = 1, std::size_t jo = 2,
                                          const Weights& weights = Weights::unit());

/// abar = sum over i != j of the extracted corners plus sum of c^{i,i} e_{i,i}.
/// Throws NeedThreeIndices (n < 3) and NotSkewAdjoint (non-conforming oracle).
SkewMatrix reconstruct_implementer(const PairWitnessOracle& oracle, std::size_t io = 1, std::size_t jo = 2,
                                   const PChoice& p_choice = default_p, const Weights& weights = Weights::unit());

/// One record per test element: Delta(t) == [abar, t].
VerificationReport verify_implementer(const PairWitnessOracle& oracle, const SkewMatrix& abar,
                                      const std::vector<SkewMatrix>& tests);

/// Randomized checks of the pair identities on the witnesses actually
/// returned by the oracle. Failing records carry the offending index pair.
VerificationReport check_pair_lemmas(const PairWitnessOracle& oracle, std::size_t trials, std::uint64_t seed);

/// Delta tabulated on the canonical basis. Decomposable rings only.
LinearLieMap tabulate_delta(const PairWitnessOracle& oracle);

/// Independent oracle: some a with [a, b_k] = map(b_k) for every basis
/// element, by exact linear solve; nullopt when no such a exists.
std::optional<SkewMatrix> brute_force_implementer(const LinearLieMap& map);

/// Every admissible p gives the same corners, for every ordered pair (i, j).
VerificationReport check_offdiagonal_p_independence(const PairWitnessOracle& oracle);

/// Diagonal differences c^{k,k} - c^{l,l} agree across every (io, jo).
VerificationReport check_diagonal_independence(const PairWitnessOracle& oracle,
                                               const Weights& weights = Weights::unit());

/// Function-ring oracle from per-point oracles sharing n.
std::shared_ptr<const PairWitnessOracle> omega_instantiate(
    std::vector<std::shared_ptr<const PairWitnessOracle>> base_oracle_per_point, std::size_t omega_size);

/// [z, b] == 0 for every canonical basis element b.
bool commutes_with_basis(const SkewMatrix& z);
/// R_a and R_b agree on every canonical basis element.
bool same_inner_map(const SkewMatrix& a, const SkewMatrix& b);

}  // namespace lieder
