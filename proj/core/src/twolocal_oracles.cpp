#include <string>

#include "lieder/error.hpp"
#include "lieder/twolocal.hpp"

namespace lieder {

std::string_view to_string(GaugeModel gauge) { return gauge == GaugeModel::None ? "none" : "central"; }

GaugeModel parse_gauge(std::string_view text) {
  if (text == "none") return GaugeModel::None;
  if (text == "central") return GaugeModel::Central;
  throw Error(ErrorKind::ConfigError, "gauge must be 'none' or 'central', got '" + std::string(text) + "'");
}

namespace {

std::uint64_t pair_seed(const SkewMatrix& x, const SkewMatrix& y, std::uint64_t seed) {
  const std::string key = std::to_string(x.matrix().hash()) + "|" + std::to_string(y.matrix().hash()) + "|" +
                          std::to_string(seed);
  return fnv1a(key);
}

}  // namespace

GaugedInnerTwoLocal::GaugedInnerTwoLocal(SkewMatrix a0, GaugeModel gauge, std::uint64_t seed)
    : a0_(std::move(a0)), gauge_(gauge), seed_(seed) {}

SkewMatrix GaugedInnerTwoLocal::query(const SkewMatrix& x, const SkewMatrix& y) const {
  if (x.n() != n() || y.n() != n()) throw Error(ErrorKind::DimensionMismatch, "query of the wrong size");
  if (gauge_ == GaugeModel::None) return a0_;
  return a0_ + centralizer_gauge(ring(), n(), pair_seed(x, y, seed_));
}

FunctionRingTwoLocal::FunctionRingTwoLocal(std::vector<std::shared_ptr<const PairWitnessOracle>> points)
    : points_(std::move(points)),
      n_(points_.empty() ? 0 : points_.front()->n()),
      ring_(Ring::function(points_.empty() ? 1 : points_.size())) {
  if (points_.empty()) throw Error(ErrorKind::DimensionMismatch, "function-ring oracle needs at least one point");
  for (const auto& p : points_) {
    if (p->n() != n_) throw Error(ErrorKind::DimensionMismatch, "per-point oracles disagree on n");
    if (p->ring().kind() != RingKind::Gauss) {
      throw Error(ErrorKind::UnsupportedRing, "per-point oracles must be over the Gaussian rationals");
    }
  }
}

SkewMatrix FunctionRingTwoLocal::query(const SkewMatrix& x, const SkewMatrix& y) const {
  std::vector<SkewMatrix> witnesses;
  witnesses.reserve(points_.size());
  for (std::size_t t = 0; t < points_.size(); ++t) {
    witnesses.push_back(points_[t]->query(project(x, t), project(y, t)));
  }
  return lift(witnesses);
}

PerturbedTwoLocal::PerturbedTwoLocal(std::shared_ptr<const PairWitnessOracle> base, std::size_t u, std::size_t v)
    : base_(std::move(base)),
      target_(s_elem(base_->ring(), base_->n(), u, v)),
      perturbation_(ebar_i_elem(base_->ring(), base_->n(), u, v)) {}

SkewMatrix PerturbedTwoLocal::query(const SkewMatrix& x, const SkewMatrix& y) const {
  SkewMatrix w = base_->query(x, y);
  if (x == y) return w;
  auto hits = [&](const SkewMatrix& z) { return z == target_ || z == -target_; };
  if (hits(x) || hits(y)) return w + perturbation_;
  return w;
}

std::shared_ptr<const PairWitnessOracle> omega_instantiate(
    std::vector<std::shared_ptr<const PairWitnessOracle>> base_oracle_per_point, std::size_t omega_size) {
  if (omega_size == 0 || base_oracle_per_point.size() != omega_size) {
    throw Error(ErrorKind::DimensionMismatch, "need exactly one base oracle per point of Omega");
  }
  return std::make_shared<FunctionRingTwoLocal>(std::move(base_oracle_per_point));
}

}  // namespace lieder
