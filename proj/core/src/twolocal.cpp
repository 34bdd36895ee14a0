#include "lieder/twolocal.hpp"

#include <string>

#include "lieder/error.hpp"
#include "lieder/structure_constants.hpp"

namespace lieder {

namespace {

void require_three(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::NeedThreeIndices,
                "reconstruction reads corners through a third index p distinct from i and j, which needs n >= 3 "
                "(got n = " + std::to_string(n) + ")");
  }
}

void require_index(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

nlohmann::json pair_json(std::size_t i, std::size_t j) { return nlohmann::json::array({i, j}); }

std::string idx(std::initializer_list<std::size_t> ids) {
  std::string out = "(";
  bool first = true;
  for (auto k : ids) {
    out += (first ? "" : ",") + std::to_string(k);
    first = false;
  }
  return out + ")";
}

}  // namespace

std::size_t default_p(std::size_t i, std::size_t j) {
  std::size_t p = 1;
  while (p == i || p == j) ++p;
  return p;
}

SkewMatrix delta_eval(const PairWitnessOracle& oracle, const SkewMatrix& x) {
  return bracket(oracle.query(x, x), x);
}

OffDiagonalCorners extract_offdiagonal(const PairWitnessOracle& oracle, std::size_t i, std::size_t j, std::size_t p) {
  const std::size_t n = oracle.n();
  require_three(n);
  require_index(n, i);
  require_index(n, j);
  require_index(n, p);
  if (i == j || i == p || j == p) {
    throw Error(ErrorKind::EqualIndices, "indices " + idx({i, j, p}) + " must be pairwise distinct");
  }
  const Ring& ring = oracle.ring();
  const SkewMatrix w = oracle.query(s_elem(ring, n, i, p), s_elem(ring, n, p, j));
  return {corner(w.matrix(), i, j), corner(w.matrix(), j, i)};
}

std::vector<RingElement> extract_diagonal(const PairWitnessOracle& oracle, std::size_t io, std::size_t jo,
                                          const Weights& weights) {
  const std::size_t n = oracle.n();
  const Ring& ring = oracle.ring();
  const SkewMatrix c = oracle.query(s_elem(ring, n, io, jo), x_o(ring, n, weights));
  std::vector<RingElement> diag;
  diag.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) diag.push_back(c(i, i));
  return diag;
}

SkewMatrix reconstruct_implementer(const PairWitnessOracle& oracle, std::size_t io, std::size_t jo,
                                   const PChoice& p_choice, const Weights& weights) {
  const std::size_t n = oracle.n();
  require_three(n);
  Matrix abar(oracle.ring(), n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto c = extract_offdiagonal(oracle, i, j, p_choice(i, j));
      abar.set(i, j, c.a_ij(i, j));
      abar.set(j, i, c.a_ji(j, i));
    }
  }
  const auto diag = extract_diagonal(oracle, io, jo, weights);
  for (std::size_t i = 1; i <= n; ++i) abar.set(i, i, diag[i - 1]);
  return SkewMatrix(std::move(abar));
}

VerificationReport verify_implementer(const PairWitnessOracle& oracle, const SkewMatrix& abar,
                                      const std::vector<SkewMatrix>& tests) {
  VerificationReport report("implementer verification");
  for (std::size_t k = 0; k < tests.size(); ++k) {
    const SkewMatrix expected = delta_eval(oracle, tests[k]);
    const SkewMatrix actual = bracket(abar, tests[k]);
    nlohmann::json payload = {{"test", k}};
    const bool ok = expected == actual;
    if (!ok) {
      payload["x"] = tests[k].to_json();
      payload["delta"] = expected.to_json();
      payload["bracket"] = actual.to_json();
    }
    report.add("delta_equals_inner#" + std::to_string(k), "theorem 2.6", ok, std::move(payload));
  }
  return report;
}

VerificationReport check_pair_lemmas(const PairWitnessOracle& oracle, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = oracle.n();
  require_three(n);
  const Ring& ring = oracle.ring();
  VerificationReport report("pair identities", seed);
  Rng rng(seed);
  auto entry_sum = [](const SkewMatrix& a, std::size_t i, std::size_t j) { return a(i, j) + a(j, i); };
  auto diag_diff = [](const SkewMatrix& a, std::size_t i, std::size_t j) { return a(i, i) - a(j, j); };

  auto lemma_3_4_1 = [&](std::size_t i, std::size_t j, const SkewMatrix& y, const std::string& tag) {
    const SkewMatrix s = s_elem(ring, n, i, j);
    const SkewMatrix a = oracle.query(s, y);
    const SkewMatrix b = oracle.query(s, s);
    const bool sums = entry_sum(a, i, j) == entry_sum(b, i, j);
    const bool diffs = diag_diff(a, i, j) == diag_diff(b, i, j);
    nlohmann::json payload = {{"pair", pair_json(i, j)}};
    if (!sums) payload["sums"] = {entry_sum(a, i, j).str(), entry_sum(b, i, j).str()};
    if (!diffs) payload["diagonal_differences"] = {diag_diff(a, i, j).str(), diag_diff(b, i, j).str()};
    report.add("lemma_3_4_1" + idx({i, j}) + tag, "lemma 3.4 (1)", sums && diffs, std::move(payload));
  };

  // Deterministic sweep so that every ordered pair is exercised at least once.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j) lemma_3_4_1(i, j, random_skew(ring, n, rng), "#sweep");
    }
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const std::string tag = "#" + std::to_string(t);
    const auto i = static_cast<std::size_t>(rng.uniform(1, n));
    std::size_t j = static_cast<std::size_t>(rng.uniform(1, n - 1));
    if (j >= i) ++j;
    std::size_t p = static_cast<std::size_t>(rng.uniform(1, n - 2));
    for (std::size_t q : {std::min(i, j), std::max(i, j)}) {
      if (p >= q) ++p;
    }
    const SkewMatrix y1 = random_skew(ring, n, rng);
    const SkewMatrix y2 = random_skew(ring, n, rng);

    lemma_3_4_1(i, j, y1, tag);

    {
      const SkewMatrix a = oracle.query(s_elem(ring, n, i, j), y1);
      const SkewMatrix b = oracle.query(s_elem(ring, n, i, p), y2);
      const bool ok = entry_sum(a, i, j) == entry_sum(b, i, j);
      nlohmann::json payload = {{"pair", pair_json(i, j)}, {"p", p}};
      if (!ok) payload["sums"] = {entry_sum(a, i, j).str(), entry_sum(b, i, j).str()};
      report.add("lemma_3_4_2" + idx({i, j, p}) + tag, "lemma 3.4 (2)", ok, std::move(payload));
    }
    {
      const SkewMatrix a = oracle.query(s_elem(ring, n, i, p), y1);
      const SkewMatrix b = oracle.query(s_elem(ring, n, p, j), y2);
      const bool ok = a(i, j) == b(i, j) && a(j, i) == b(j, i);
      nlohmann::json payload = {{"pair", pair_json(i, j)}, {"p", p}};
      if (!ok) {
        payload["a"] = {a(i, j).str(), a(j, i).str()};
        payload["b"] = {b(i, j).str(), b(j, i).str()};
      }
      report.add("lemma_3_41" + idx({i, j, p}) + tag, "lemma 3.41", ok, std::move(payload));
    }
    {
      const auto io = static_cast<std::size_t>(rng.uniform(1, n));
      std::size_t jo = static_cast<std::size_t>(rng.uniform(1, n - 1));
      if (jo >= io) ++jo;
      const SkewMatrix x0 = x_o(ring, n);
      const SkewMatrix c = oracle.query(s_elem(ring, n, io, jo), x0);
      const SkewMatrix b = oracle.query(s_elem(ring, n, i, j), x0);
      const bool ok = diag_diff(c, i, j) == diag_diff(b, i, j);
      nlohmann::json payload = {{"pair", pair_json(i, j)}, {"io_jo", pair_json(io, jo)}};
      if (!ok) payload["differences"] = {diag_diff(c, i, j).str(), diag_diff(b, i, j).str()};
      report.add("lemma_3_6" + idx({i, j}) + tag, "lemma 3.6", ok, std::move(payload));
    }
  }
  return report;
}

LinearLieMap tabulate_delta(const PairWitnessOracle& oracle) {
  CanonicalBasis basis(oracle.ring(), oracle.n());
  std::vector<SkewMatrix> images;
  images.reserve(basis.size());
  for (const auto& b : basis.elements()) images.push_back(delta_eval(oracle, b));
  return LinearLieMap(oracle.ring(), oracle.n(), std::move(images));
}

std::optional<SkewMatrix> brute_force_implementer(const LinearLieMap& map) {
  const std::size_t dim = map.n() * map.n();
  std::vector<std::size_t> unknowns(dim);
  std::vector<BracketEquation> equations;
  equations.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    unknowns[k] = k;
    equations.push_back({k, map.image(k)});
  }
  return solve_implementer(map.ring(), map.n(), unknowns, equations);
}

VerificationReport check_offdiagonal_p_independence(const PairWitnessOracle& oracle) {
  const std::size_t n = oracle.n();
  require_three(n);
  VerificationReport report("off-diagonal extraction is independent of p");
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const auto ref_p = default_p(i, j);
      const auto ref = extract_offdiagonal(oracle, i, j, ref_p);
      nlohmann::json mismatches = nlohmann::json::array();
      for (std::size_t p = 1; p <= n; ++p) {
        if (p == i || p == j || p == ref_p) continue;
        const auto c = extract_offdiagonal(oracle, i, j, p);
        if (!(c.a_ij == ref.a_ij) || !(c.a_ji == ref.a_ji)) mismatches.push_back(p);
      }
      report.add("p_independence" + idx({i, j}), "lemma 3.41", mismatches.empty(),
                 {{"pair", pair_json(i, j)}, {"reference_p", ref_p}, {"mismatched_p", mismatches}});
    }
  }
  return report;
}

VerificationReport check_diagonal_independence(const PairWitnessOracle& oracle, const Weights& weights) {
  const std::size_t n = oracle.n();
  VerificationReport report("diagonal differences are independent of (io, jo)");
  const auto ref = extract_diagonal(oracle, 1, 2, weights);
  for (std::size_t io = 1; io <= n; ++io) {
    for (std::size_t jo = 1; jo <= n; ++jo) {
      if (io == jo) continue;
      const auto c = extract_diagonal(oracle, io, jo, weights);
      nlohmann::json mismatches = nlohmann::json::array();
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = k + 1; l <= n; ++l) {
          if (!(c[k - 1] - c[l - 1] == ref[k - 1] - ref[l - 1])) mismatches.push_back(pair_json(k, l));
        }
      }
      report.add("diagonal_independence" + idx({io, jo}), "lemma 3.6", mismatches.empty(),
                 {{"io_jo", pair_json(io, jo)}, {"mismatched_kl", mismatches}});
    }
  }
  return report;
}

bool commutes_with_basis(const SkewMatrix& z) {
  CanonicalBasis basis(z.ring(), z.n());
  for (const auto& b : basis.elements()) {
    if (!bracket(z, b).is_zero()) return false;
  }
  return true;
}

bool same_inner_map(const SkewMatrix& a, const SkewMatrix& b) { return commutes_with_basis(a - b); }

}  // namespace lieder
