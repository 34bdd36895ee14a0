#include <string>

#include "lieder/error.hpp"
#include "lieder/localder.hpp"

namespace lieder {

InnerLocalOracle::InnerLocalOracle(SkewMatrix a0, GaugeModel gauge, std::uint64_t seed)
    : a0_(std::move(a0)), gauge_(gauge), seed_(seed) {}

PointWitness InnerLocalOracle::query(const SkewMatrix& x) const {
  if (x.n() != n()) throw Error(ErrorKind::DimensionMismatch, "query of the wrong size");
  SkewMatrix w = a0_;
  if (gauge_ == GaugeModel::Central) {
    const std::uint64_t s = fnv1a(std::to_string(x.matrix().hash()) + "|" + std::to_string(seed_));
    w = w + centralizer_gauge(ring(), n(), s);
  }
  return {bracket(a0_, x), std::move(w)};
}

OverrideLocalOracle::OverrideLocalOracle(std::shared_ptr<const PointWitnessOracle> base,
                                         std::vector<std::pair<SkewMatrix, SkewMatrix>> overrides)
    : base_(std::move(base)), overrides_(std::move(overrides)) {}

PointWitness OverrideLocalOracle::query(const SkewMatrix& x) const {
  for (const auto& [key, w] : overrides_) {
    if (key == x) return {bracket(w, x), w};
  }
  return base_->query(x);
}

WitnessedLocalMap::WitnessedLocalMap(LinearLieMap map, std::shared_ptr<const PointWitnessOracle> oracle, bool gate)
    : map_(std::move(map)), oracle_(std::move(oracle)), memo_(std::make_shared<Memo>()) {
  if (oracle_->n() != map_.n() || !(oracle_->ring() == map_.ring())) {
    throw Error(ErrorKind::DimensionMismatch, "oracle and tabulated map disagree on n or ring");
  }
  if (!gate) return;
  const CanonicalBasis basis(ring(), n());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!(oracle_->query(basis[k]).value == map_.image(k))) {
      throw Error(ErrorKind::InconsistentWitnessTable,
                  "oracle value at " + basis.label_str(k) + " differs from the tabulated image");
    }
  }
}

SkewMatrix WitnessedLocalMap::witness(const SkewMatrix& x) const {
  const std::string key = x.str();
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->entries.find(key);
    if (it != memo_->entries.end()) return it->second.second;
  }
  PointWitness q = oracle_->query(x);
  if (!(bracket(q.witness, x) == q.value)) {
    throw Error(ErrorKind::WitnessMismatch, "witness does not implement the value at " + key);
  }
  std::lock_guard lock(memo_->mutex);
  auto [it, inserted] = memo_->entries.emplace(key, std::make_pair(x, std::move(q.witness)));
  return it->second.second;
}

nlohmann::json WitnessedLocalMap::witness_table() const {
  std::lock_guard lock(memo_->mutex);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, entry] : memo_->entries) {
    out.push_back({{"x", entry.first.to_json()}, {"witness", entry.second.to_json()}});
  }
  return out;
}

WitnessedLocalMap make_inner_local_map(const SkewMatrix& a0, GaugeModel gauge, std::uint64_t seed) {
  return WitnessedLocalMap(LinearLieMap::of_inner(a0), std::make_shared<InnerLocalOracle>(a0, gauge, seed));
}

}  // namespace lieder
