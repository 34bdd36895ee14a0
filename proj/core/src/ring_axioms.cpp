#include "lieder/ring_axioms.hpp"

#include <functional>
#include <string>
#include <vector>

#include "lieder/error.hpp"

namespace lieder {

namespace {

using Sample = std::vector<RingElement>;
using Law = std::function<bool(const Ring&, const Sample&)>;

struct Axiom {
  const char* name;
  int arity;
  Law holds;
};

nlohmann::json sample_json(const Sample& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : s) out.push_back(x.str());
  return out;
}

std::vector<Axiom> axioms_for(const Ring& ring) {
  std::vector<Axiom> out = {
      {"add_commutative", 2, [](const Ring&, const Sample& s) { return s[0] + s[1] == s[1] + s[0]; }},
      {"add_associative", 3,
       [](const Ring&, const Sample& s) { return (s[0] + s[1]) + s[2] == s[0] + (s[1] + s[2]); }},
      {"add_identity", 1, [](const Ring& r, const Sample& s) { return s[0] + r.zero() == s[0]; }},
      {"add_inverse", 1, [](const Ring&, const Sample& s) { return (s[0] + (-s[0])).is_zero(); }},
      {"mul_commutative", 2, [](const Ring&, const Sample& s) { return s[0] * s[1] == s[1] * s[0]; }},
      {"mul_associative", 3,
       [](const Ring&, const Sample& s) { return (s[0] * s[1]) * s[2] == s[0] * (s[1] * s[2]); }},
      {"mul_identity", 1, [](const Ring& r, const Sample& s) { return s[0] * r.one() == s[0]; }},
      {"distributive", 3,
       [](const Ring&, const Sample& s) { return s[0] * (s[1] + s[2]) == s[0] * s[1] + s[0] * s[2]; }},
      {"star_involutive", 1, [](const Ring&, const Sample& s) { return s[0].star().star() == s[0]; }},
      {"star_additive", 2,
       [](const Ring&, const Sample& s) { return (s[0] + s[1]).star() == s[0].star() + s[1].star(); }},
      {"star_multiplicative", 2,
       [](const Ring&, const Sample& s) { return (s[0] * s[1]).star() == s[0].star() * s[1].star(); }},
  };
  if (ring.kind() == RingKind::Gauss) {
    out.push_back({"star_fixed_iff_real", 1, [](const Ring&, const Sample& s) {
                     return s[0].is_star_fixed() == s[0].gauss().is_real();
                   }});
  }
  if (ring.kind() == RingKind::Function) {
    out.push_back({"projection_homomorphism", 2, [](const Ring& r, const Sample& s) {
                     const auto& f = s[0].function();
                     const auto& g = s[1].function();
                     const auto sum = (s[0] + s[1]).function();
                     const auto prod = (s[0] * s[1]).function();
                     const auto st = s[0].star().function();
                     const auto one = r.one().function();
                     for (std::size_t t = 0; t < r.omega_size(); ++t) {
                       if (sum.at(t) != f.at(t) + g.at(t) || prod.at(t) != f.at(t) * g.at(t) ||
                           st.at(t) != f.at(t).conj() || one.at(t) != GaussianRational(1)) {
                         return false;
                       }
                     }
                     return true;
                   }});
  }
  if (ring.kind() == RingKind::Polynomial) {
    // Independent oracle: expanded products must agree with products of values
    // at a point respecting the involution.
    out.push_back({"evaluation_homomorphism", 2, [](const Ring& r, const Sample& s) {
                     const auto& vars = *r.vars();
                     Rng rng(s[0].hash() ^ (s[1].hash() << 1));
                     std::vector<GaussianRational> point(vars.size());
                     for (std::uint32_t v = 0; v < vars.size(); ++v) {
                       const auto p = vars.partner(v);
                       if (p < v) {
                         point[v] = point[p].conj();
                       } else if (p == v) {
                         point[v] = GaussianRational(rng.rational());
                       } else {
                         point[v] = GaussianRational(rng.rational(), rng.rational());
                       }
                     }
                     const auto& a = s[0].polynomial();
                     const auto& b = s[1].polynomial();
                     return (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point) &&
                            (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point) &&
                            a.star().evaluate(point) == a.evaluate(point).conj();
                   }});
  }
  return out;
}

}  // namespace

VerificationReport check_ring_axioms(const Ring& ring, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0) throw Error(ErrorKind::ConfigError, "sample_count must be at least 1");
  VerificationReport report("ring axioms over " + ring.name(), seed);
  Rng rng(seed);

  {
    const auto i = ring.imaginary_unit();
    report.add("one_nonzero", "ring axioms", !(ring.one() == ring.zero()));
    report.add("imaginary_unit_square", "imaginary unit", i * i == -ring.one(), {{"I", i.str()}});
    report.add("imaginary_unit_star", "imaginary unit", i.star() == -i, {{"I", i.str()}});
  }

  for (const auto& axiom : axioms_for(ring)) {
    bool ok = true;
    nlohmann::json payload = {{"samples", sample_count}};
    for (std::size_t k = 0; k < sample_count && ok; ++k) {
      Sample s;
      for (int a = 0; a < axiom.arity; ++a) s.push_back(ring.random(rng));
      if (!axiom.holds(ring, s)) {
        ok = false;
        payload["counterexample"] = sample_json(s);
        payload["sample_index"] = k;
      }
    }
    report.add(axiom.name, "ring axioms", ok, std::move(payload));
  }
  return report;
}

}  // namespace lieder
