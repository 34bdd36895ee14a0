#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "lieder/error.hpp"
#include "lieder/localder.hpp"

namespace lieder {
namespace {

const Ring kGauss = Ring::gauss();

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::IOError;
}

std::set<std::size_t> pair_of(const CheckRecord& r) {
  const auto& p = r.payload.at("pair");
  return {p[0].get<std::size_t>(), p[1].get<std::size_t>()};
}

bool touches(const CheckRecord& r, std::size_t i) { return pair_of(r).count(i) != 0; }

// Claims a value that no witness produces.
class LyingOracle final : public PointWitnessOracle {
 public:
  explicit LyingOracle(std::size_t n) : n_(n), ring_(Ring::gauss()) {}
  std::size_t n() const override { return n_; }
  const Ring& ring() const override { return ring_; }
  PointWitness query(const SkewMatrix& x) const override {
    return {s_elem(ring_, n_, 1, 2), SkewMatrix(ring_, n_)};
  }

 private:
  std::size_t n_;
  Ring ring_;
};

std::shared_ptr<const PointWitnessOracle> inner_oracle(const SkewMatrix& a0, std::uint64_t seed = 3) {
  return std::make_shared<InnerLocalOracle>(a0, GaugeModel::Central, seed);
}

TEST(InnerLocalOracle, WitnessContractAndGauge) {
  Rng rng(1);
  const SkewMatrix a0 = random_skew(kGauss, 4, rng);
  const InnerLocalOracle oracle(a0, GaugeModel::Central, 5);
  const SkewMatrix x = random_skew(kGauss, 4, rng);
  const auto q = oracle.query(x);
  EXPECT_EQ(q.value, bracket(a0, x));
  EXPECT_EQ(bracket(q.witness, x), q.value);
  EXPECT_FALSE(q.witness == a0);
  EXPECT_TRUE(commutes_with_basis(q.witness - a0));
  EXPECT_EQ(oracle.query(x).witness, q.witness);
}

TEST(WitnessedLocalMap, GateAndDimensionChecks) {
  Rng rng(2);
  const SkewMatrix a0 = random_skew(kGauss, 3, rng);
  EXPECT_EQ(kind_of([&] { WitnessedLocalMap(LinearLieMap::zero(kGauss, 3), inner_oracle(a0)); }),
            ErrorKind::InconsistentWitnessTable);
  EXPECT_EQ(kind_of([&] { WitnessedLocalMap(LinearLieMap::of_inner(a0), inner_oracle(SkewMatrix(kGauss, 4))); }),
            ErrorKind::DimensionMismatch);
  EXPECT_NO_THROW(WitnessedLocalMap(LinearLieMap::zero(kGauss, 3), inner_oracle(a0), false));
}

TEST(WitnessedLocalMap, WitnessMismatchIsRaised) {
  const WitnessedLocalMap map(LinearLieMap::zero(kGauss, 3), std::make_shared<LyingOracle>(3), false);
  EXPECT_EQ(kind_of([&] { map.witness(s_elem(kGauss, 3, 1, 3)); }), ErrorKind::WitnessMismatch);
}

TEST(WitnessedLocalMap, MemoizedAndShared) {
  Rng rng(3);
  const WitnessedLocalMap map = make_inner_local_map(random_skew(kGauss, 3, rng), GaugeModel::Central, 9);
  const WitnessedLocalMap copy = map;
  const SkewMatrix x = random_skew(kGauss, 3, rng);
  const SkewMatrix w = map.witness(x);
  EXPECT_EQ(copy.witness(x), w);
  const auto table = copy.witness_table();
  ASSERT_EQ(table.size(), 1U);
  EXPECT_EQ(table[0]["witness"], w.to_json());
}

TEST(CornerImplementer, InnerMapOnTwoBlock) {
  const SkewMatrix s12 = s_elem(kGauss, 4, 1, 2);
  const WitnessedLocalMap map = make_inner_local_map(s12, GaugeModel::Central, 1);
  const auto a = corner_implementer(map, {1, 2});
  ASSERT_TRUE(a.has_value());
  const std::vector<SkewMatrix> block_basis = {s12, ebar_i_elem(kGauss, 4, 1, 2), ie_diag(kGauss, 4, 1),
                                               ie_diag(kGauss, 4, 2)};
  for (const auto& x : block_basis) {
    EXPECT_EQ(bracket(*a, x).matrix(), block_compress(map.value(x).matrix(), {1, 2}));
    EXPECT_TRUE(bracket(*a - s12, x).is_zero());
  }
}

TEST(CornerImplementer, ZeroAndProjectionMaps) {
  const WitnessedLocalMap zero = make_inner_local_map(SkewMatrix(kGauss, 3), GaugeModel::None, 0);
  const auto a = corner_implementer(zero, {1, 3});
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->is_zero());

  CanonicalBasis basis(kGauss, 3);
  std::vector<SkewMatrix> images(basis.size(), SkewMatrix(kGauss, 3));
  images[0] = basis[0];
  const WitnessedLocalMap proj(LinearLieMap(kGauss, 3, images), inner_oracle(SkewMatrix(kGauss, 3)), false);
  EXPECT_FALSE(corner_implementer(proj, {1, 2}).has_value());
  EXPECT_EQ(kind_of([&] { corner_table(proj); }), ErrorKind::Infeasible);
  EXPECT_EQ(kind_of([&] { corner_implementer(proj, {1}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { corner_implementer(proj, {1, 5}); }), ErrorKind::IndexOutOfRange);
}

TEST(CornerCoherence, GenuineAndZero) {
  Rng rng(4);
  const WitnessedLocalMap map = make_inner_local_map(random_skew(kGauss, 4, rng), GaugeModel::Central, 2);
  const auto report = corner_coherence(map, 2, {1, 2, 3});
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.records().size(), 1U + 3U + 2U + 1U);
  EXPECT_TRUE(corner_coherence(make_inner_local_map(SkewMatrix(kGauss, 3), GaugeModel::None, 0), 1, {1, 2, 3})
                  .all_passed());
}

TEST(CornerCoherence, InconsistentWitnessIsLocalized) {
  Rng rng(5);
  const SkewMatrix a0 = random_skew(kGauss, 4, rng);
  const SkewMatrix e22 = ie_diag(kGauss, 4, 2);
  auto oracle = std::make_shared<OverrideLocalOracle>(
      inner_oracle(a0), std::vector<std::pair<SkewMatrix, SkewMatrix>>{{e22, a0 + s_elem(kGauss, 4, 2, 3)}});
  const WitnessedLocalMap map(LinearLieMap::of_inner(a0), oracle, false);
  const auto report = corner_coherence(map, 2, {1, 2, 3});
  ASSERT_EQ(report.failures().size(), 1U);
  EXPECT_EQ(report.failures()[0].name, "corner_coherence.witness_corner(2,3)");
}

TEST(Eq51, GenuineZeroAndCorrupted) {
  const SkewMatrix s12 = s_elem(kGauss, 3, 1, 2);
  const WitnessedLocalMap map = make_inner_local_map(s12, GaugeModel::Central, 6);
  const auto report = check_eq_5_1(map);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.records().size(), 3U);
  EXPECT_EQ(report.records()[0].payload["a_ii_ik"], "1");
  EXPECT_EQ(report.records()[0].payload["a_kk_ik"], "1");
  EXPECT_TRUE(check_eq_5_1(make_inner_local_map(SkewMatrix(kGauss, 3), GaugeModel::None, 0)).all_passed());

  const SkewMatrix e11 = ie_diag(kGauss, 3, 1);
  auto bad = std::make_shared<OverrideLocalOracle>(
      inner_oracle(s12, 6),
      std::vector<std::pair<SkewMatrix, SkewMatrix>>{{e11, s12 + ebar_i_elem(kGauss, 3, 1, 2)}});
  const auto corrupted = check_eq_5_1(WitnessedLocalMap(LinearLieMap::of_inner(s12), bad, false));
  ASSERT_EQ(corrupted.failures().size(), 1U);
  EXPECT_EQ(pair_of(corrupted.failures()[0]), (std::set<std::size_t>{1, 2}));
}

TEST(BuildD, ExamplesFromTemplate) {
  const SkewMatrix s12 = s_elem(kGauss, 3, 1, 2);
  const WitnessedLocalMap map = make_inner_local_map(s12, GaugeModel::Central, 7);
  const SkewMatrix d = build_d(map);
  EXPECT_TRUE(commutes_with_basis(d - s12));
  CanonicalBasis basis(kGauss, 3);
  for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(bracket(d, basis[k]), map.map().image(k));

  const SkewMatrix z = build_d(make_inner_local_map(SkewMatrix(kGauss, 4), GaugeModel::Central, 8));
  EXPECT_TRUE(commutes_with_basis(z));

  const SkewMatrix e = build_d(make_inner_local_map(ie_diag(kGauss, 3, 1), GaugeModel::Central, 9));
  EXPECT_EQ(e(1, 1) - e(2, 2), kGauss.imaginary_unit());
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      if (i != j) EXPECT_TRUE(e(i, j).is_zero());
    }
  }
}

TEST(BuildD, Errors) {
  EXPECT_EQ(kind_of([] { build_d(make_inner_local_map(SkewMatrix(kGauss, 2), GaugeModel::None, 0)); }),
            ErrorKind::NeedThreeIndices);
}

TEST(BuildD, WeightedStaircase) {
  Rng rng(10);
  const SkewMatrix a0 = random_skew(kGauss, 4, rng);
  const WitnessedLocalMap map = make_inner_local_map(a0, GaugeModel::Central, 10);
  const Weights w{{GaussianRational(3), GaussianRational(Rational(-1, 2)), GaussianRational(7)}};
  EXPECT_TRUE(commutes_with_basis(build_d(map, w) - a0));
}

TEST(SpanningSet, GenuineAndZero) {
  Rng rng(11);
  for (std::size_t n : {3, 4, 5}) {
    const WitnessedLocalMap map = make_inner_local_map(random_skew(kGauss, n, rng), GaugeModel::Central, n);
    const auto report = verify_spanning_set(map, build_d(map));
    EXPECT_TRUE(report.all_passed()) << n;
    const std::size_t pairs = n * (n - 1) / 2;
    EXPECT_EQ(report.records().size(), n + 2 * pairs + 6 * pairs);
    EXPECT_FALSE(report.notes().empty());
  }
  const WitnessedLocalMap zero = make_inner_local_map(SkewMatrix(kGauss, 3), GaugeModel::None, 0);
  EXPECT_TRUE(verify_spanning_set(zero, SkewMatrix(kGauss, 3)).all_passed());
}

TEST(SpanningSet, DiagonalCorruptionHitsPairsThroughThatIndex) {
  Rng rng(12);
  const std::size_t n = 4;
  const WitnessedLocalMap map = make_inner_local_map(random_skew(kGauss, n, rng), GaugeModel::Central, 12);
  const SkewMatrix bad = build_d(map) + ie_diag(kGauss, n, 2);
  const auto report = verify_spanning_set(map, bad);
  for (const auto& r : report.records()) {
    if (r.anchor == "eq 5.3") {
      // A diagonal shift commutes with every Ie_ii.
      EXPECT_TRUE(r.passed()) << r.name;
    } else if (r.anchor == "eq 5.4" || r.anchor == "eq 5.7") {
      EXPECT_EQ(r.passed(), !touches(r, 2)) << r.name;
    }
  }
}

TEST(SpanningSet, OffDiagonalCorruptionIsLocalized) {
  Rng rng(13);
  const std::size_t n = 5;
  const WitnessedLocalMap map = make_inner_local_map(random_skew(kGauss, n, rng), GaugeModel::Central, 13);
  const SkewMatrix bad = build_d(map) + s_elem(kGauss, n, 2, 4);
  const auto report = verify_spanning_set(map, bad);
  ASSERT_FALSE(report.all_passed());
  for (const auto& f : report.failures()) {
    if (f.anchor == "eq 5.3") {
      const auto i = f.payload.at("index").get<std::size_t>();
      EXPECT_TRUE(i == 2 || i == 4) << f.name;
    } else {
      EXPECT_TRUE(touches(f, 2) || touches(f, 4)) << f.name;
    }
  }
  for (const auto& r : report.records()) {
    if (r.name == "eq_5_5(2,4)" || r.name == "eq_5_4.s(1,2)") EXPECT_FALSE(r.passed()) << r.name;
    if (r.name == "eq_5_4.s(1,3)" || r.name == "eq_5_3(1)") EXPECT_TRUE(r.passed()) << r.name;
  }
}

TEST(VerifyFull, GenuineMap) {
  Rng rng(14);
  const WitnessedLocalMap map = make_inner_local_map(random_skew(kGauss, 4, rng), GaugeModel::Central, 14);
  const auto report = verify_full(map, build_d(map), 100, 1);
  EXPECT_EQ(report.records().size(), 100U);
  EXPECT_TRUE(report.all_passed());
}

TEST(VerifyFull, CorruptedSlotFailsExactlyWhereItsCoefficientIsNonzero) {
  Rng rng(15);
  const SkewMatrix a0 = random_skew(kGauss, 3, rng);
  const WitnessedLocalMap genuine = make_inner_local_map(a0, GaugeModel::Central, 15);
  const SkewMatrix d = build_d(genuine);
  const std::size_t slot = CanonicalBasis::index_iebar(3, 1, 3);
  const LinearLieMap broken = genuine.map().with_image(slot, genuine.map().image(slot) + s_elem(kGauss, 3, 1, 2));
  const WitnessedLocalMap map(broken, inner_oracle(a0, 15), false);

  CanonicalBasis basis(kGauss, 3);
  const auto sum = verify_full(map, d, 40, 2);
  for (const auto& f : sum.failures()) {
    const auto x = SkewMatrix(Matrix::from_json(kGauss, f.payload.at("x")));
    EXPECT_FALSE(decompose(x)[slot].is_zero());
  }
  EXPECT_FALSE(sum.all_passed());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const SkewMatrix x = basis[k] + basis[(k + 1) % basis.size()];
    const bool hit = k == slot || (k + 1) % basis.size() == slot;
    EXPECT_EQ(map.value(x) == bracket(d, x), !hit) << k;
  }
}

TEST(Lemma40, GenuineZeroAndCorruptedCorner) {
  Rng rng(16);
  const WitnessedLocalMap map = make_inner_local_map(random_skew(kGauss, 4, rng), GaugeModel::Central, 16);
  const auto report = check_lemma_4_0(map, 1, 2);
  EXPECT_EQ(report.records().size(), 4U);
  EXPECT_TRUE(report.all_passed());

  const WitnessedLocalMap zero = make_inner_local_map(SkewMatrix(kGauss, 3), GaugeModel::None, 0);
  EXPECT_TRUE(lemma_4_0_element(corner_table(zero), 3, 1, 2).is_zero());
  EXPECT_TRUE(check_lemma_4_0(zero, 1, 2).all_passed());

  CornerTable table = corner_table(map);
  table.at({1, 3}) = table.at({1, 3}) + s_elem(kGauss, 4, 1, 3);
  const auto corrupted = check_lemma_4_0(map, 1, 2, &table);
  EXPECT_FALSE(corrupted.records()[0].passed());
  EXPECT_EQ(corrupted.records()[0].name, "lemma_4_0.Ie_ii(1,2)");
  EXPECT_EQ(kind_of([] { check_lemma_4_0(make_inner_local_map(SkewMatrix(kGauss, 2), GaugeModel::None, 0), 1, 2); }),
            ErrorKind::NeedThreeIndices);
}

std::vector<WitnessedLocalMap> maps_for(const std::vector<SkewMatrix>& generators) {
  std::vector<WitnessedLocalMap> out;
  for (std::size_t t = 0; t < generators.size(); ++t) {
    out.push_back(make_inner_local_map(generators[t], GaugeModel::Central, 100 + t));
  }
  return out;
}

TEST(PointwiseLift, SinglePoint) {
  Rng rng(17);
  const SkewMatrix a0 = random_skew(kGauss, 3, rng);
  const auto lift_result = pointwise_lift(maps_for({a0}), 1, 20, 3);
  EXPECT_TRUE(lift_result.report.all_passed());
  const WitnessedLocalMap single = make_inner_local_map(a0, GaugeModel::Central, 100);
  EXPECT_EQ(project(lift_result.ahat, 0), build_d(single));
}

TEST(PointwiseLift, DistinctGenerators) {
  Rng rng(18);
  std::vector<SkewMatrix> gens;
  for (int t = 0; t < 3; ++t) gens.push_back(random_skew(kGauss, 4, rng));
  const auto result = pointwise_lift(maps_for(gens), 3, 50, 4);
  EXPECT_TRUE(result.report.all_passed());
  EXPECT_EQ(result.report.records().size(), 3U + 50U + 1U);
  for (std::size_t t = 0; t < 3; ++t) EXPECT_TRUE(commutes_with_basis(project(result.ahat, t) - gens[t]));
}

TEST(PointwiseLift, ConstantFamily) {
  Rng rng(19);
  const SkewMatrix a0 = random_skew(kGauss, 3, rng);
  const auto result = pointwise_lift(maps_for({a0, a0, a0}), 3, 10, 5);
  EXPECT_TRUE(result.report.all_passed());
  for (std::size_t t = 0; t < 3; ++t) EXPECT_TRUE(commutes_with_basis(project(result.ahat, t) - a0));
}

TEST(PointwiseLift, Errors) {
  Rng rng(20);
  const auto three = maps_for({random_skew(kGauss, 3, rng)});
  const auto four = maps_for({random_skew(kGauss, 4, rng)});
  EXPECT_EQ(kind_of([&] { pointwise_lift(three, 2, 1, 0); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { pointwise_lift({three[0], four[0]}, 2, 1, 0); }), ErrorKind::DimensionMismatch);
}

}  // namespace
}  // namespace lieder
