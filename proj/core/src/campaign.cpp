#include "lieder/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "lieder/error.hpp"
#include "lieder/localder.hpp"
#include "lieder/ring_axioms.hpp"
#include "lieder/symcheck.hpp"

namespace lieder {

namespace {

constexpr std::size_t kMaxN = 8;
constexpr std::size_t kMaxOmega = 16;
constexpr std::size_t kRandomTests = 50;
constexpr std::size_t kFullTrials = 20;

const char* const kModes[] = {"twolocal", "local", "symcheck", "axioms", "all"};
const char* const kRings[] = {"gauss", "fnring", "poly"};

[[noreturn]] void config_error(const std::string& field, const std::string& message) {
  throw Error(ErrorKind::ConfigError, field + ": " + message);
}

std::size_t parse_size(std::string_view text, const std::string& field) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    config_error(field, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool uses(const CampaignConfig& c, std::string_view mode) { return c.mode == mode || c.mode == "all"; }

Ring make_ring(const CampaignConfig& c) {
  if (c.ring == "gauss") return Ring::gauss();
  if (c.ring == "fnring") return Ring::function(c.omega);
  return Ring::polynomial(std::make_shared<const VariableInvolution>(VariableInvolution::paired(4)));
}

std::string tag(std::size_t n, std::size_t t) { return "n=" + std::to_string(n) + "/t=" + std::to_string(t); }

// One record per anchor of `sub`: pass iff every record with that anchor
// passed; the payload lists failing record names.
void condense(VerificationReport& into, const VerificationReport& sub, const std::string& prefix,
              nlohmann::json context) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, nlohmann::json>> groups;
  for (const auto& r : sub.records()) {
    auto [it, inserted] = groups.try_emplace(r.anchor, 0, nlohmann::json::array());
    if (inserted) order.push_back(r.anchor);
    ++it->second.first;
    if (!r.passed()) it->second.second.push_back({{"name", r.name}, {"payload", r.payload}});
  }
  for (const auto& anchor : order) {
    auto& [count, failing] = groups[anchor];
    nlohmann::json payload = context;
    payload["checks"] = count;
    payload["failing"] = failing;
    into.add(prefix + "/" + sub.title() + "[" + anchor + "]", anchor, failing.empty(), std::move(payload));
  }
  for (const auto& n : sub.notes()) into.note(n);
}

std::vector<VerificationReport> parallel_trials(std::size_t count, std::size_t workers,
                                                const std::function<VerificationReport(std::size_t)>& fn) {
  std::vector<VerificationReport> out(count);
  const std::size_t pool = std::max<std::size_t>(1, std::min(workers, count));
  if (pool == 1) {
    for (std::size_t t = 0; t < count; ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < pool; ++w) {
    threads.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) out[t] = fn(t);
    });
  }
  for (auto& th : threads) th.join();
  return out;
}

VerificationReport guarded(const std::string& prefix, const std::string& anchor,
                           const std::function<void(VerificationReport&)>& body) {
  VerificationReport r;
  try {
    body(r);
  } catch (const Error& e) {
    r.add(prefix + "/error", anchor, false, {{"error", e.what()}, {"kind", to_string(e.kind())}});
  }
  return r;
}

VerificationReport twolocal_trial(const CampaignConfig& c, std::size_t n, std::size_t t) {
  const std::string prefix = "twolocal/" + tag(n, t);
  return guarded(prefix, "theorem 2.6", [&](VerificationReport& r) {
    const std::uint64_t seed = derive_seed(c.seed, prefix);
    const nlohmann::json ctx = {{"n", n}, {"trial", t}, {"seed", seed}};
    Rng rng(seed);
    const Ring ring = make_ring(c);
    std::shared_ptr<const PairWitnessOracle> oracle;
    std::vector<std::shared_ptr<const PairWitnessOracle>> points;
    SkewMatrix a0(ring, n);
    if (ring.kind() == RingKind::Function) {
      std::vector<SkewMatrix> gens;
      for (std::size_t p = 0; p < c.omega; ++p) {
        gens.push_back(random_skew(Ring::gauss(), n, rng));
        points.push_back(std::make_shared<GaugedInnerTwoLocal>(gens.back(), c.gauge, derive_seed(seed, std::to_string(p))));
      }
      oracle = omega_instantiate(points, c.omega);
      a0 = lift(gens);
    } else {
      a0 = random_skew(ring, n, rng);
      oracle = std::make_shared<GaugedInnerTwoLocal>(a0, c.gauge, seed);
    }
    const SkewMatrix abar = reconstruct_implementer(*oracle);
    std::vector<SkewMatrix> tests = CanonicalBasis(ring, n).elements();
    for (std::size_t k = 0; k < kRandomTests; ++k) tests.push_back(random_skew(ring, n, rng));
    condense(r, verify_implementer(*oracle, abar, tests), prefix, ctx);
    r.add(prefix + "/generator", "theorem 2.6", same_inner_map(abar, a0), ctx);
    if (ring.decomposable()) {
      const auto brute = brute_force_implementer(tabulate_delta(*oracle));
      r.add(prefix + "/brute_force", "theorem 2.6", brute && same_inner_map(*brute, abar), ctx);
    }
    if (ring.kind() == RingKind::Function) {
      bool ok = true;
      for (std::size_t p = 0; p < c.omega; ++p) ok = ok && project(abar, p) == reconstruct_implementer(*points[p]);
      r.add(prefix + "/pointwise_projection", "theorem 2.7", ok, ctx);
    }
    condense(r, check_pair_lemmas(*oracle, 2, seed), prefix, ctx);
    if (c.p_sweep) {
      condense(r, check_offdiagonal_p_independence(*oracle), prefix, ctx);
      condense(r, check_diagonal_independence(*oracle), prefix, ctx);
    }
  });
}

VerificationReport local_trial(const CampaignConfig& c, std::size_t n, std::size_t t) {
  const std::string prefix = "local/" + tag(n, t);
  return guarded(prefix, "theorem 4.4", [&](VerificationReport& r) {
    const std::uint64_t seed = derive_seed(c.seed, prefix);
    const nlohmann::json ctx = {{"n", n}, {"trial", t}, {"seed", seed}};
    Rng rng(seed);
    if (c.ring == "fnring") {
      std::vector<WitnessedLocalMap> maps;
      for (std::size_t p = 0; p < c.omega; ++p) {
        maps.push_back(make_inner_local_map(random_skew(Ring::gauss(), n, rng), c.gauge,
                                            derive_seed(seed, std::to_string(p))));
      }
      condense(r, pointwise_lift(maps, c.omega, kFullTrials, seed).report, prefix, ctx);
      return;
    }
    const SkewMatrix a0 = random_skew(Ring::gauss(), n, rng);
    const WitnessedLocalMap map = make_inner_local_map(a0, c.gauge, seed);
    condense(r, check_eq_5_1(map), prefix, ctx);
    const SkewMatrix d = build_d(map);
    condense(r, verify_spanning_set(map, d), prefix, ctx);
    condense(r, verify_full(map, d, kFullTrials, seed), prefix, ctx);
    r.add(prefix + "/d_minus_generator_central", "theorem 4.4", commutes_with_basis(d - a0), ctx);
    const auto brute = brute_force_implementer(map.map());
    r.add(prefix + "/brute_force", "theorem 4.4", brute && same_inner_map(*brute, d), ctx);
    condense(r, check_lemma_4_0(map, 1, 2), prefix, ctx);
    condense(r, corner_coherence(map, 2, {1, 2, 3}), prefix, ctx);
  });
}

}  // namespace

nlohmann::json CampaignConfig::to_json() const {
  return {{"mode", mode},     {"n", {n_min, n_max}},       {"ring", ring},         {"omega", omega},
          {"trials", trials}, {"seed", seed},              {"gauge", lieder::to_string(gauge)},
          {"p_sweep", p_sweep}, {"lemma", lemma},          {"out", out}};
}

std::pair<std::size_t, std::size_t> parse_n_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::size_t n = parse_size(text, "n");
    return {n, n};
  }
  return {parse_size(text.substr(0, dots), "n"), parse_size(text.substr(dots + 2), "n")};
}

void validate(const CampaignConfig& c) {
  if (std::find(std::begin(kModes), std::end(kModes), c.mode) == std::end(kModes)) {
    config_error("mode", "expected twolocal, local, symcheck, axioms or all, got '" + c.mode + "'");
  }
  if (std::find(std::begin(kRings), std::end(kRings), c.ring) == std::end(kRings)) {
    config_error("ring", "expected gauss, fnring or poly, got '" + c.ring + "'");
  }
  if (c.n_min < 1 || c.n_min > c.n_max) config_error("n", "empty or invalid range");
  if (c.n_max > kMaxN) config_error("n", "at most " + std::to_string(kMaxN) + " supported");
  if (c.mode != "axioms" && c.n_min < 3) {
    config_error("n", "the " + c.mode +
                          " campaign reads corners through a third index distinct from i and j, which needs n >= 3 "
                          "(got n = " + std::to_string(c.n_min) + ")");
  }
  if (c.ring == "fnring" && (c.omega < 1 || c.omega > kMaxOmega)) {
    config_error("omega", "must lie in 1.." + std::to_string(kMaxOmega));
  }
  if (c.ring == "poly" && uses(c, "local")) config_error("ring", "local campaigns need a decomposable ring");
  if (c.trials < 1) config_error("trials", "must be positive");
  if (c.workers < 1) config_error("workers", "must be positive");
  if (!c.lemma.empty()) {
    const auto& known = known_lemmas();
    if (std::find(known.begin(), known.end(), c.lemma) == known.end()) {
      config_error("lemma", "unknown identity '" + c.lemma + "'");
    }
  }
}

VerificationReport run_campaign(const CampaignConfig& c) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report("campaign " + c.mode, c.seed);
  report.set_config(c.to_json());
  if (uses(c, "axioms")) report.merge(check_ring_axioms(make_ring(c), c.trials, c.seed), "axioms");
  for (std::size_t n = c.n_min; n <= c.n_max; ++n) {
    if (uses(c, "twolocal")) {
      for (const auto& r : parallel_trials(c.trials, c.workers, [&](std::size_t t) { return twolocal_trial(c, n, t); })) {
        report.merge(r);
      }
    }
    if (uses(c, "local")) {
      for (const auto& r : parallel_trials(c.trials, c.workers, [&](std::size_t t) { return local_trial(c, n, t); })) {
        report.merge(r);
      }
    }
    if (uses(c, "symcheck")) {
      const std::vector<std::string> lemmas = c.lemma.empty() ? known_lemmas() : std::vector<std::string>{c.lemma};
      const auto reports = parallel_trials(lemmas.size(), c.workers, [&](std::size_t k) {
        return guarded("symcheck/n=" + std::to_string(n) + "/" + lemmas[k], "symcheck",
                       [&](VerificationReport& r) { r = certify_lemma(lemmas[k], n); });
      });
      for (const auto& r : reports) report.merge(r, "symcheck/n=" + std::to_string(n));
    }
  }
  report.set_duration_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  return report;
}

std::string summary_table(const VerificationReport& report) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& r : report.records()) {
    auto [it, inserted] = counts.try_emplace(r.anchor, 0, 0);
    if (inserted) order.push_back(r.anchor);
    (r.passed() ? it->second.first : it->second.second)++;
  }
  std::size_t width = 6;
  for (const auto& a : order) width = std::max(width, a.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "anchor" << "  " << std::right << std::setw(8) << "passed"
      << std::setw(8) << "failed" << "\n";
  for (const auto& a : order) {
    out << std::left << std::setw(static_cast<int>(width)) << a << "  " << std::right << std::setw(8)
        << counts[a].first << std::setw(8) << counts[a].second << "\n";
  }
  out << std::left << std::setw(static_cast<int>(width)) << "total" << "  " << std::right << std::setw(8)
      << report.passed() << std::setw(8) << report.failed() << "\n";
  return out.str();
}

}  // namespace lieder
