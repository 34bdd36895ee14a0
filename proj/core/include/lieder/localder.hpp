#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieder/lie.hpp"
#include "lieder/report.hpp"
#include "lieder/twolocal.hpp"

namespace lieder {

struct PointWitness {
  SkewMatrix value;
  SkewMatrix witness;
};

/// Witnessed local inner derivation: each single point x carries its own a_x
/// with value(x) = [a_x, x].
class PointWitnessOracle {
 public:
  virtual ~PointWitnessOracle() = default;
  virtual std::size_t n() const = 0;
  virtual const Ring& ring() const = 0;
  /// Deterministic in x and the oracle's seed.
  virtual PointWitness query(const SkewMatrix& x) const = 0;
};

/// value [a0, x], witness a0 + g(x) with g central and seeded by (x, seed).
class InnerLocalOracle final : public PointWitnessOracle {
 public:
  InnerLocalOracle(SkewMatrix a0, GaugeModel gauge, std::uint64_t seed);

  std::size_t n() const override { return a0_.n(); }
  const Ring& ring() const override { return a0_.ring(); }
  PointWitness query(const SkewMatrix& x) const override;

  const SkewMatrix& generator() const { return a0_; }

 private:
  SkewMatrix a0_;
  GaugeModel gauge_;
  std::uint64_t seed_;
};

/// Hand-crafted witnesses for selected elements; value = [w, x] for those,
/// base oracle elsewhere.
class OverrideLocalOracle final : public PointWitnessOracle {
 public:
  OverrideLocalOracle(std::shared_ptr<const PointWitnessOracle> base,
                      std::vector<std::pair<SkewMatrix, SkewMatrix>> overrides);

  std::size_t n() const override { return base_->n(); }
  const Ring& ring() const override { return base_->ring(); }
  PointWitness query(const SkewMatrix& x) const override;

 private:
  std::shared_ptr<const PointWitnessOracle> base_;
  std::vector<std::pair<SkewMatrix, SkewMatrix>> overrides_;
};

/// Tabulated linear map plus a witness oracle. Witness queries are memoized
/// per element (write-once, shared between copies), so an element queried
/// twice yields the same a_x.
class WitnessedLocalMap {
 public:
  /// With `gate`, throws InconsistentWitnessTable unless the oracle value at
  /// every canonical basis element equals the tabulated image.
  WitnessedLocalMap(LinearLieMap map, std::shared_ptr<const PointWitnessOracle> oracle, bool gate = true);

  std::size_t n() const { return map_.n(); }
  const Ring& ring() const { return map_.ring(); }
  const LinearLieMap& map() const { return map_; }
  const PointWitnessOracle& oracle() const { return *oracle_; }

  /// nabla(x) through the tabulation.
  SkewMatrix value(const SkewMatrix& x) const { return map_.apply(x); }
  /// a_x; throws WitnessMismatch if [a_x, x] differs from the oracle value.
  SkewMatrix witness(const SkewMatrix& x) const;

  /// Memoized witnesses so far, in key order: [{x, witness}].
  nlohmann::json witness_table() const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::string, std::pair<SkewMatrix, SkewMatrix>> entries;
  };

  LinearLieMap map_;
  std::shared_ptr<const PointWitnessOracle> oracle_;
  std::shared_ptr<Memo> memo_;
};

/// R_{a0} tabulated, witnesses from InnerLocalOracle.
WitnessedLocalMap make_inner_local_map(const SkewMatrix& a0, GaugeModel gauge, std::uint64_t seed);

/// Some a supported in the block S with e nabla(x) e = [a, x] for every
/// canonical basis element x supported in S; nullopt when infeasible.
/// Throws DimensionMismatch for |S| < 2 and IndexOutOfRange.
std::optional<SkewMatrix> corner_implementer(const WitnessedLocalMap& map, const std::set<std::size_t>& block);

/// 2-block implementers keyed by (k, l), k < l.
using CornerTable = std::map<std::pair<std::size_t, std::size_t>, SkewMatrix>;

/// Every 2-block implementer; throws Infeasible naming the first block
/// without one.
CornerTable corner_table(const WitnessedLocalMap& map);

/// abar for the pair (i, j): entries in row or column i or j, the {i,j}
/// block from the {i,j} implementer and every other entry (k,l) from the
/// {k,l} implementer.
SkewMatrix lemma_4_0_element(const CornerTable& table, std::size_t n, std::size_t i, std::size_t j);

/// nabla(b) == [abar, b] for b in Ie_ii, s_ij, I ebar_ij, Ie_jj. `table`
/// overrides the computed corner table when given.
VerificationReport check_lemma_4_0(const WitnessedLocalMap& map, std::size_t i, std::size_t j,
                                   const CornerTable* table = nullptr);

/// Block nesting: corners of the S-block implementer against the 2-block
/// implementers and against the witness of Ie_mm; nabla(Ie_mm)^{mm} = 0.
VerificationReport corner_coherence(const WitnessedLocalMap& map, std::size_t m, const std::set<std::size_t>& block);

/// a_ii^{ik} = a_kk^{ik} and a_ii^{ki} = a_kk^{ki} for all i != k, with a_ii
/// the witness of Ie_ii, read through the witness a1 of I(e_ii + e_kk).
VerificationReport check_eq_5_1(const WitnessedLocalMap& map);

/// d^{ii} = a2^{ii} with a2 the witness of x_o, d^{ij} = a_ii^{ij}.
/// Throws NeedThreeIndices and NotSkewAdjoint.
SkewMatrix build_d(const WitnessedLocalMap& map, const Weights& weights = Weights::unit());

/// nabla(b) == [d, b] on the spanning set plus the corner equalities of the
/// pair elements abar_{ik} and of the witnesses a3 of the summed elements.
VerificationReport verify_spanning_set(const WitnessedLocalMap& map, const SkewMatrix& d);

/// nabla(x) == [d, x] for random x.
VerificationReport verify_full(const WitnessedLocalMap& map, const SkewMatrix& d, std::size_t trials,
                               std::uint64_t seed);

struct LiftResult {
  SkewMatrix ahat;
  VerificationReport report;
};

/// ahat(t) = build_d of the map at t, checked on random function-valued x
/// and against the brute-force implementer of the lifted tabulation.
/// Throws DimensionMismatch.
LiftResult pointwise_lift(const std::vector<WitnessedLocalMap>& maps_per_point, std::size_t omega_size,
                          std::size_t trials, std::uint64_t seed);

}  // namespace lieder
