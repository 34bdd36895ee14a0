#include "lieder/localder.hpp"

#include <string>

#include "lieder/error.hpp"
#include "lieder/structure_constants.hpp"

namespace lieder {

namespace {

void require_index(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

std::string idx(std::initializer_list<std::size_t> ids) {
  std::string out = "(";
  bool first = true;
  for (auto k : ids) {
    out += (first ? "" : ",") + std::to_string(k);
    first = false;
  }
  return out + ")";
}

nlohmann::json pair_json(std::size_t i, std::size_t j) { return nlohmann::json::array({i, j}); }

std::pair<std::size_t, std::size_t> ordered(std::size_t k, std::size_t l) {
  return k < l ? std::make_pair(k, l) : std::make_pair(l, k);
}

}  // namespace

std::optional<SkewMatrix> corner_implementer(const WitnessedLocalMap& map, const std::set<std::size_t>& block) {
  const std::size_t n = map.n();
  if (block.size() < 2) throw Error(ErrorKind::DimensionMismatch, "a corner block needs at least two indices");
  std::vector<bool> in_block(n + 1, false);
  for (auto t : block) {
    require_index(n, t);
    in_block[t] = true;
  }
  const CanonicalBasis basis(map.ring(), n);
  std::vector<std::size_t> unknowns;
  std::vector<BracketEquation> equations;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!CanonicalBasis::supported_in(basis.label(k), in_block)) continue;
    unknowns.push_back(k);
    equations.push_back({k, SkewMatrix::trusted(block_compress(map.map().image(k).matrix(), block))});
  }
  return solve_implementer(map.ring(), n, unknowns, equations);
}

CornerTable corner_table(const WitnessedLocalMap& map) {
  CornerTable table;
  for (std::size_t k = 1; k <= map.n(); ++k) {
    for (std::size_t l = k + 1; l <= map.n(); ++l) {
      auto a = corner_implementer(map, {k, l});
      if (!a) throw Error(ErrorKind::Infeasible, "no implementer on the block " + idx({k, l}));
      table.emplace(std::make_pair(k, l), std::move(*a));
    }
  }
  return table;
}

SkewMatrix lemma_4_0_element(const CornerTable& table, std::size_t n, std::size_t i, std::size_t j) {
  if (table.empty()) throw Error(ErrorKind::DimensionMismatch, "empty corner table");
  require_index(n, i);
  require_index(n, j);
  if (i == j) throw Error(ErrorKind::EqualIndices, "pair element needs i != j");
  auto entry = [&](std::size_t k, std::size_t l) -> const SkewMatrix& {
    auto it = table.find(ordered(k, l));
    if (it == table.end()) throw Error(ErrorKind::IndexOutOfRange, "corner table lacks the block " + idx({k, l}));
    return it->second;
  };
  Matrix m(table.begin()->second.ring(), n);
  auto touches = [&](std::size_t t) { return t == i || t == j; };
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 1; l <= n; ++l) {
      if (!touches(k) && !touches(l)) continue;
      if (k == l || (touches(k) && touches(l))) {
        m.set(k, l, entry(i, j)(k, l));
      } else {
        m.set(k, l, entry(k, l)(k, l));
      }
    }
  }
  return SkewMatrix(std::move(m));
}

VerificationReport check_lemma_4_0(const WitnessedLocalMap& map, std::size_t i, std::size_t j,
                                   const CornerTable* table) {
  const std::size_t n = map.n();
  if (n < 3) throw Error(ErrorKind::NeedThreeIndices, "the pair element needs n >= 3 (got n = " + std::to_string(n) + ")");
  VerificationReport report("lemma_4_0");
  CornerTable computed;
  if (!table) {
    try {
      computed = corner_table(map);
    } catch (const Error& e) {
      report.add("lemma_4_0.corner_table" + idx({i, j}), "lemma 4.0", false, {{"error", e.what()}});
      return report;
    }
    table = &computed;
  }
  const SkewMatrix abar = lemma_4_0_element(*table, n, i, j);
  const Ring& r = map.ring();
  const std::pair<const char*, SkewMatrix> cases[] = {
      {"Ie_ii", ie_diag(r, n, i)},
      {"s_ij", s_elem(r, n, i, j)},
      {"Iebar_ij", ebar_i_elem(r, n, i, j)},
      {"Ie_jj", ie_diag(r, n, j)},
  };
  for (const auto& [label, b] : cases) {
    report.add(std::string("lemma_4_0.") + label + idx({i, j}), "lemma 4.0", map.value(b) == bracket(abar, b),
               {{"pair", pair_json(i, j)}});
  }
  return report;
}

VerificationReport corner_coherence(const WitnessedLocalMap& map, std::size_t m, const std::set<std::size_t>& block) {
  const std::size_t n = map.n();
  if (!block.count(m)) throw Error(ErrorKind::IndexOutOfRange, "index m must lie in the block");
  VerificationReport report("corner_coherence");
  const std::string tag = "(m=" + std::to_string(m) + ")";
  const auto a_s = corner_implementer(map, block);
  report.add("corner_coherence.block_implementer" + tag, "theorem 4.4", a_s.has_value());
  if (!a_s) return report;
  for (auto i : block) {
    for (auto j : block) {
      if (j <= i) continue;
      const auto a_ij = corner_implementer(map, {i, j});
      bool ok = a_ij.has_value();
      if (ok) {
        const auto& a = *a_ij;
        ok = (*a_s)(i, j) == a(i, j) && (*a_s)(j, i) == a(j, i) &&
             (*a_s)(i, i) - (*a_s)(j, j) == a(i, i) - a(j, j);
      }
      report.add("corner_coherence.block_nesting" + idx({i, j}), "theorem 4.4", ok, {{"pair", pair_json(i, j)}});
    }
  }
  const Ring& r = map.ring();
  const SkewMatrix w = map.witness(ie_diag(r, n, m));
  for (auto k : block) {
    if (k == m) continue;
    const bool ok = (*a_s)(m, k) == w(m, k) && (*a_s)(k, m) == w(k, m);
    report.add("corner_coherence.witness_corner" + idx({m, k}), "theorem 4.4", ok, {{"pair", pair_json(m, k)}});
  }
  report.add("corner_coherence.singleton_block" + tag, "theorem 4.4", map.value(ie_diag(r, n, m))(m, m).is_zero());
  return report;
}

VerificationReport check_eq_5_1(const WitnessedLocalMap& map) {
  const std::size_t n = map.n();
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "needs n >= 2");
  const Ring& r = map.ring();
  VerificationReport report("eq_5_1");
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i + 1; k <= n; ++k) {
      const SkewMatrix ei = ie_diag(r, n, i);
      const SkewMatrix ek = ie_diag(r, n, k);
      const SkewMatrix a_ii = map.witness(ei);
      const SkewMatrix a_kk = map.witness(ek);
      const SkewMatrix y = ei + ek;
      const SkewMatrix a1 = map.witness(y);
      const SkewMatrix lhs = bracket(a1, y);
      const SkewMatrix rhs = bracket(a_ii, ei) + bracket(a_kk, ek);
      const bool additivity = lhs(i, k) == rhs(i, k) && lhs(k, i) == rhs(k, i);
      const bool corners = a_ii(i, k) == a_kk(i, k) && a_ii(k, i) == a_kk(k, i);
      report.add("eq_5_1" + idx({i, k}), "eq 5.1", additivity && corners,
                 {{"pair", pair_json(i, k)},
                  {"additivity", additivity},
                  {"corners", corners},
                  {"a_ii_ik", a_ii(i, k).str()},
                  {"a_kk_ik", a_kk(i, k).str()}});
    }
  }
  return report;
}

SkewMatrix build_d(const WitnessedLocalMap& map, const Weights& weights) {
  const std::size_t n = map.n();
  if (n < 3) {
    throw Error(ErrorKind::NeedThreeIndices,
                "the diagonal of d is read through a chain of three or more indices, which needs n >= 3 (got n = " +
                    std::to_string(n) + ")");
  }
  const Ring& r = map.ring();
  const SkewMatrix a2 = map.witness(x_o(r, n, weights));
  Matrix d(r, n);
  for (std::size_t i = 1; i <= n; ++i) {
    d.set(i, i, a2(i, i));
    const SkewMatrix a_ii = map.witness(ie_diag(r, n, i));
    for (std::size_t j = 1; j <= n; ++j) {
      if (j != i) d.set(i, j, a_ii(i, j));
    }
  }
  return SkewMatrix(std::move(d));
}

VerificationReport verify_spanning_set(const WitnessedLocalMap& map, const SkewMatrix& d) {
  const std::size_t n = map.n();
  const Ring& r = map.ring();
  VerificationReport report("spanning_set");
  report.note("a3 is read as the witness of the summed element, e.g. Ie_kk + s_ki");
  for (std::size_t i = 1; i <= n; ++i) {
    const SkewMatrix b = ie_diag(r, n, i);
    report.add("eq_5_3(" + std::to_string(i) + ")", "eq 5.3", map.value(b) == bracket(d, b), {{"index", i}});
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i + 1; k <= n; ++k) {
      const SkewMatrix s = s_elem(r, n, i, k);
      const SkewMatrix e = ebar_i_elem(r, n, i, k);
      const nlohmann::json at = {{"pair", pair_json(i, k)}};
      report.add("eq_5_4.s" + idx({i, k}), "eq 5.4", map.value(s) == bracket(d, s), at);
      report.add("eq_5_4.ebar" + idx({i, k}), "eq 5.4", map.value(e) == bracket(d, e), at);
    }
  }
  if (n < 3) return report;
  CornerTable table;
  try {
    table = corner_table(map);
  } catch (const Error& e) {
    report.add("spanning_set.corner_table", "lemma 4.0", false, {{"error", e.what()}});
    return report;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i + 1; k <= n; ++k) {
      const SkewMatrix a = lemma_4_0_element(table, n, i, k);
      const nlohmann::json at = {{"pair", pair_json(i, k)}};
      bool ok = true;
      for (std::size_t j = 1; j <= n; ++j) {
        if (j != k) ok = ok && a(k, j) == d(k, j);
      }
      report.add("eq_5_5" + idx({i, k}), "eq 5.5", ok, at);
      ok = true;
      for (std::size_t j = 1; j <= n; ++j) {
        if (j != i) ok = ok && a(j, i) == d(j, i);
      }
      report.add("eq_5_6" + idx({i, k}), "eq 5.6", ok, at);
      report.add("eq_5_7" + idx({i, k}), "eq 5.7", a(i, i) - a(k, k) == d(i, i) - d(k, k), at);

      const SkewMatrix ei = ie_diag(r, n, i);
      const SkewMatrix ek = ie_diag(r, n, k);
      const SkewMatrix s_ki = s_elem(r, n, k, i);
      const SkewMatrix s_ik = s_elem(r, n, i, k);
      const SkewMatrix e_ik = ebar_i_elem(r, n, i, k);
      const std::pair<SkewMatrix, SkewMatrix> sums[] = {{ek, s_ki}, {ek, e_ik}, {ei, s_ik}, {ei, e_ik}};
      bool sum_k = true;
      bool sum_i = true;
      bool corners = true;
      for (std::size_t t = 0; t < 4; ++t) {
        const auto& [diag, off] = sums[t];
        const SkewMatrix y = diag + off;
        const SkewMatrix a3 = map.witness(y);
        const bool ok_sum = bracket(a3, y) == bracket(d, diag) + bracket(a, off);
        (t < 2 ? sum_k : sum_i) = (t < 2 ? sum_k : sum_i) && ok_sum;
        corners = corners && a3(i, k) == a(i, k) && a3(k, i) == a(k, i);
      }
      report.add("eq_5_8" + idx({i, k}), "eq 5.8", sum_k, at);
      report.add("eq_5_9" + idx({i, k}), "eq 5.9", sum_i, at);
      report.add("eq_5_10" + idx({i, k}), "eq 5.10", corners, at);
    }
  }
  return report;
}

VerificationReport verify_full(const WitnessedLocalMap& map, const SkewMatrix& d, std::size_t trials,
                               std::uint64_t seed) {
  VerificationReport report("verify_full", seed);
  Rng rng(derive_seed(seed, "verify_full"));
  for (std::size_t t = 0; t < trials; ++t) {
    const SkewMatrix x = random_skew(map.ring(), map.n(), rng);
    const bool ok = map.value(x) == bracket(d, x);
    nlohmann::json payload = {{"trial", t}};
    if (!ok) payload["x"] = x.to_json();
    report.add("verify_full(" + std::to_string(t) + ")", "theorem 4.4", ok, std::move(payload));
  }
  return report;
}

LiftResult pointwise_lift(const std::vector<WitnessedLocalMap>& maps_per_point, std::size_t omega_size,
                          std::size_t trials, std::uint64_t seed) {
  if (maps_per_point.empty() || maps_per_point.size() != omega_size) {
    throw Error(ErrorKind::DimensionMismatch, "need exactly one map per point of Omega");
  }
  const std::size_t n = maps_per_point.front().n();
  for (const auto& m : maps_per_point) {
    if (m.n() != n) throw Error(ErrorKind::DimensionMismatch, "per-point maps disagree on n");
    if (m.ring().kind() != RingKind::Gauss) {
      throw Error(ErrorKind::UnsupportedRing, "per-point maps must be over the Gaussian rationals");
    }
  }
  VerificationReport report("pointwise_lift", seed);
  std::vector<SkewMatrix> points;
  for (std::size_t t = 0; t < omega_size; ++t) {
    points.push_back(build_d(maps_per_point[t]));
    report.add("pointwise_lift.point_spanning(" + std::to_string(t) + ")", "theorem 5.1",
               verify_spanning_set(maps_per_point[t], points.back()).all_passed(), {{"point", t}});
  }
  const SkewMatrix ahat = lift(points);
  const Ring& fr = ahat.ring();

  Rng rng(derive_seed(seed, "pointwise_lift"));
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const SkewMatrix x = random_skew(fr, n, rng);
    const SkewMatrix rhs = bracket(ahat, x);
    nlohmann::json bad = nlohmann::json::array();
    for (std::size_t t = 0; t < omega_size; ++t) {
      if (!(maps_per_point[t].value(project(x, t)) == project(rhs, t))) bad.push_back(t);
    }
    report.add("pointwise_lift.eval(" + std::to_string(trial) + ")", "theorem 5.1", bad.empty(),
               {{"trial", trial}, {"failing_points", bad}});
  }

  const CanonicalBasis basis(fr, n);
  std::vector<SkewMatrix> images;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<SkewMatrix> at;
    for (const auto& m : maps_per_point) at.push_back(m.map().image(k));
    images.push_back(lift(at));
  }
  const LinearLieMap lifted(fr, n, std::move(images));
  const auto brute = brute_force_implementer(lifted);
  report.add("pointwise_lift.function_ring_route", "theorem 5.1", brute && same_inner_map(*brute, ahat));
  return LiftResult{ahat, std::move(report)};
}

}  // namespace lieder
