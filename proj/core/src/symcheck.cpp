#include "lieder/symcheck.hpp"

#include <string>

#include "lieder/error.hpp"

namespace lieder {

GenericFamily::GenericFamily(std::size_t n, bool general_diagonal)
    : n_(n),
      general_(general_diagonal),
      vars_(std::make_shared<VariableInvolution>()),
      ring_(Ring::polynomial(vars_)) {}

SkewMatrix GenericFamily::generic(const std::string& name, const std::set<std::size_t>* support) {
  if (!names_.insert(name).second) throw Error(ErrorKind::ConfigError, "generic name '" + name + "' already used");
  auto in = [&](std::size_t t) { return !support || support->count(t) != 0; };
  auto var = [&](std::uint32_t v) { return RingElement(StarPolynomial::variable(vars_, v)); };
  Matrix m(ring_, n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    if (!in(i)) continue;
    const std::string base = name + "_" + std::to_string(i);
    if (general_) {
      const std::uint32_t v = vars_->add_pair(base + "_" + std::to_string(i), base + "_" + std::to_string(i) + "'");
      m.set(i, i, var(v) - var(v + 1));
    } else {
      m.set(i, i, ring_.imaginary_unit() * var(vars_->add_fixed(base)));
    }
    for (std::size_t j = i + 1; j <= n_; ++j) {
      if (!in(j)) continue;
      const std::string entry = base + "_" + std::to_string(j);
      const std::uint32_t v = vars_->add_pair(entry, entry + "'");
      m.set(i, j, var(v));
      m.set(j, i, -var(v + 1));
    }
  }
  return SkewMatrix::trusted(std::move(m));
}

Matrix GenericFamily::embed(const Matrix& gauss_matrix) const {
  if (gauss_matrix.ring().kind() != RingKind::Gauss || gauss_matrix.n() != n_) {
    throw Error(ErrorKind::RingMismatch, "embedding expects an n x n Gaussian-rational matrix");
  }
  Matrix m(ring_, n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) {
      const auto& x = gauss_matrix(i, j);
      if (!x.is_zero()) m.set(i, j, ring_.constant(x.gauss()));
    }
  }
  return m;
}

SkewMatrix GenericFamily::embed(const SkewMatrix& gauss_matrix) const {
  return SkewMatrix::trusted(embed(gauss_matrix.matrix()));
}

namespace {

SparseVector<GaussianRational> linear_form(const StarPolynomial& p, const std::string& what) {
  SparseVector<GaussianRational> v;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.empty()) throw Error(ErrorKind::NonLinearHypothesis, what + " has a constant term");
    if (monomial_degree(mono) > 1) throw Error(ErrorKind::NonLinearHypothesis, what + " is not linear: " + p.str());
    v.emplace(mono.front().first, c);
  }
  return v;
}

std::vector<GaussianRational> evaluation_point(const VariableInvolution& vars,
                                               const std::map<std::uint32_t, GaussianRational>& values) {
  std::vector<GaussianRational> point(vars.size());
  for (const auto& [v, x] : values) point[v] = x;
  return point;
}

}  // namespace

std::vector<HypothesisComponent> hypothesis_components(const std::string& label, const Matrix& lhs,
                                                       const Matrix& rhs) {
  const Matrix diff = lhs - rhs;
  std::vector<HypothesisComponent> out;
  out.reserve(diff.n() * diff.n());
  for (std::size_t r = 1; r <= diff.n(); ++r) {
    for (std::size_t c = 1; c <= diff.n(); ++c) {
      const std::string id = label + "[" + std::to_string(r) + "," + std::to_string(c) + "]";
      StarPolynomial p = diff(r, c).is_zero() ? StarPolynomial(diff.ring().vars()) : diff(r, c).polynomial();
      linear_form(p, "hypothesis component " + id);
      out.push_back({id, std::move(p)});
    }
  }
  return out;
}

nlohmann::json Certification::to_json(const StarPolynomial& conclusion) const {
  nlohmann::json j = {{"conclusion", conclusion.str()}, {"implied", implied}};
  if (implied) {
    nlohmann::json combo = nlohmann::json::array();
    for (const auto& t : combination) combo.push_back({{"hyp_id", t.hyp_id}, {"coeff", t.coeff.str()}});
    j["combination"] = std::move(combo);
  } else {
    nlohmann::json a = nlohmann::json::object();
    for (const auto& [name, x] : assignment) a[name] = x.str();
    j["assignment"] = std::move(a);
    j["assignment_real"] = assignment_real;
    j["conclusion_value"] = conclusion_value.str();
  }
  return j;
}

Certifier::Certifier(std::vector<HypothesisComponent> hypotheses) : hyps_(std::move(hypotheses)), echelon_(true) {
  rows_.reserve(hyps_.size());
  for (std::size_t k = 0; k < hyps_.size(); ++k) {
    if (!vars_) vars_ = hyps_[k].poly.vars();
    rows_.push_back(linear_form(hyps_[k].poly, "hypothesis component " + hyps_[k].id));
    if (!rows_.back().empty()) echelon_.insert(rows_.back(), k);
  }
}

Certification Certifier::certify(const StarPolynomial& conclusion) const {
  Certification result;
  const auto target = linear_form(conclusion, "conclusion");
  if (target.empty()) {
    result.implied = true;
    return result;
  }

  // A single proportional component reads best; prefer coefficient one.
  std::optional<CertificateTerm> single;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& row = rows_[k];
    if (row.size() != target.size() || row.begin()->first != target.begin()->first) continue;
    const GaussianRational ratio = target.begin()->second / row.begin()->second;
    bool proportional = true;
    for (auto p = row.begin(), q = target.begin(); p != row.end(); ++p, ++q) {
      if (p->first != q->first || !(ratio * p->second == q->second)) {
        proportional = false;
        break;
      }
    }
    if (!proportional) continue;
    if (ratio == GaussianRational(1)) {
      single = CertificateTerm{hyps_[k].id, ratio};
      break;
    }
    if (!single) single = CertificateTerm{hyps_[k].id, ratio};
  }

  std::map<std::size_t, GaussianRational> combo_by_index;
  SparseVector<GaussianRational> residual;
  if (single) {
    for (std::size_t k = 0; k < hyps_.size(); ++k) {
      if (hyps_[k].id == single->hyp_id) {
        combo_by_index.emplace(k, single->coeff);
        break;
      }
    }
  } else {
    SparseVector<GaussianRational> combo;
    residual = echelon_.reduce(target, &combo);
    if (residual.empty()) combo_by_index.insert(combo.begin(), combo.end());
  }

  if (residual.empty()) {
    StarPolynomial expansion(conclusion.vars());
    for (const auto& [k, c] : combo_by_index) {
      StarPolynomial term = hyps_[k].poly;
      expansion += term.scale(c);
      result.combination.push_back({hyps_[k].id, c});
    }
    if (!(expansion == conclusion)) {
      throw Error(ErrorKind::NonLinearHypothesis, "certificate re-expansion mismatch for " + conclusion.str());
    }
    result.implied = true;
    return result;
  }

  // Kernel vector v separating the conclusion; the hypotheses are closed
  // under star, so one of the real parts of v separates as well.
  const VariableInvolution& vars = *conclusion.vars();
  std::map<std::uint32_t, GaussianRational> v;
  for (const auto& [col, x] : echelon_.separating_vector(residual)) v.emplace(static_cast<std::uint32_t>(col), x);
  std::map<std::uint32_t, GaussianRational> vbar;
  for (const auto& [var, x] : v) vbar.emplace(vars.partner(var), x.conj());
  const GaussianRational half(Rational(1, 2));
  const GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
  auto combine = [&](bool sum) {
    std::map<std::uint32_t, GaussianRational> u;
    auto add = [&](std::uint32_t var, const GaussianRational& x) {
      auto [it, inserted] = u.try_emplace(var, x);
      if (!inserted) it->second += x;
    };
    for (const auto& [var, x] : v) add(var, (sum ? half : minus_half_i) * x);
    for (const auto& [var, x] : vbar) add(var, (sum ? half : -minus_half_i) * x);
    return u;
  };
  auto satisfies = [&](const std::vector<GaussianRational>& point) {
    for (const auto& h : hyps_) {
      if (!h.poly.evaluate(point).is_zero()) return false;
    }
    return true;
  };
  std::vector<std::map<std::uint32_t, GaussianRational>> candidates = {combine(true), combine(false)};
  for (const auto& u : candidates) {
    const auto point = evaluation_point(vars, u);
    const GaussianRational value = conclusion.evaluate(point);
    if (value.is_zero() || !satisfies(point)) continue;
    result.assignment_real = true;
    result.conclusion_value = value;
    for (const auto& [var, x] : u) {
      if (!x.is_zero()) result.assignment.emplace(vars.name(var), x);
    }
    return result;
  }
  const auto point = evaluation_point(vars, v);
  result.conclusion_value = conclusion.evaluate(point);
  for (const auto& [var, x] : v) {
    if (!x.is_zero()) result.assignment.emplace(vars.name(var), x);
  }
  return result;
}

Certification certify(const StarPolynomial& conclusion, const std::vector<HypothesisComponent>& hypotheses) {
  return Certifier(hypotheses).certify(conclusion);
}

}  // namespace lieder
