#include "lieder/star_polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "lieder/error.hpp"

namespace lieder {

VariableInvolution::VariableInvolution(std::vector<std::uint32_t> partner, std::vector<std::string> names)
    : partner_(std::move(partner)), names_(std::move(names)) {
  if (names_.size() != partner_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "involution needs one name per variable");
  }
  for (std::uint32_t k = 0; k < partner_.size(); ++k) {
    if (partner_[k] >= partner_.size() || partner_[partner_[k]] != k) {
      throw Error(ErrorKind::ConfigError, "variable permutation is not an involution at index " + std::to_string(k));
    }
    if (!index_.emplace(names_[k], k).second) {
      throw Error(ErrorKind::ConfigError, "duplicate variable name '" + names_[k] + "'");
    }
  }
}

VariableInvolution VariableInvolution::paired(std::uint32_t count) {
  std::vector<std::uint32_t> partner(count);
  std::vector<std::string> names(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    partner[k] = (k % 2 == 0) ? (k + 1 < count ? k + 1 : k) : k - 1;
    names[k] = "z" + std::to_string(k + 1);
  }
  return VariableInvolution(std::move(partner), std::move(names));
}

std::uint32_t VariableInvolution::add_fixed(std::string name) {
  const auto k = size();
  if (!index_.emplace(name, k).second) throw Error(ErrorKind::ConfigError, "duplicate variable name '" + name + "'");
  partner_.push_back(k);
  names_.push_back(std::move(name));
  return k;
}

std::uint32_t VariableInvolution::add_pair(std::string name, std::string star_name) {
  const auto k = size();
  if (!index_.emplace(name, k).second) throw Error(ErrorKind::ConfigError, "duplicate variable name '" + name + "'");
  if (!index_.emplace(star_name, k + 1).second) {
    throw Error(ErrorKind::ConfigError, "duplicate variable name '" + star_name + "'");
  }
  partner_.push_back(k + 1);
  partner_.push_back(k);
  names_.push_back(std::move(name));
  names_.push_back(std::move(star_name));
  return k;
}

std::optional<std::uint32_t> VariableInvolution::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t p = 0, q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].first < a[p].first) {
      out.push_back(b[q++]);
    } else {
      out.emplace_back(a[p].first, a[p].second + b[q].second);
      ++p;
      ++q;
    }
  }
  return out;
}

std::uint32_t monomial_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& [var, e] : m) d += e;
  return d;
}

StarPolynomial::StarPolynomial(std::shared_ptr<const VariableInvolution> vars, const GaussianRational& constant)
    : vars_(std::move(vars)) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

StarPolynomial StarPolynomial::variable(std::shared_ptr<const VariableInvolution> vars, std::uint32_t var) {
  if (!vars || var >= vars->size()) throw Error(ErrorKind::IndexOutOfRange, "unknown variable index");
  StarPolynomial p(std::move(vars));
  p.terms_.emplace(Monomial{{var, 1}}, GaussianRational(1));
  return p;
}

std::uint32_t StarPolynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

GaussianRational StarPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void StarPolynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

StarPolynomial StarPolynomial::star() const {
  StarPolynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial image;
    image.reserve(m.size());
    for (const auto& [var, e] : m) image.emplace_back(vars_->partner(var), e);
    std::sort(image.begin(), image.end());
    r.terms_.emplace(std::move(image), c.conj());
  }
  return r;
}

GaussianRational StarPolynomial::evaluate(const std::vector<GaussianRational>& point) const {
  GaussianRational total;
  for (const auto& [m, c] : terms_) {
    GaussianRational term = c;
    for (const auto& [var, e] : m) {
      if (var >= point.size()) throw Error(ErrorKind::DimensionMismatch, "evaluation point too short");
      for (std::uint32_t k = 0; k < e; ++k) term *= point[var];
    }
    total += term;
  }
  return total;
}

void StarPolynomial::adopt_vars(const StarPolynomial& o) {
  if (!o.vars_ || vars_ == o.vars_) return;
  if (!vars_) {
    vars_ = o.vars_;
    return;
  }
  if (!(*vars_ == *o.vars_)) throw Error(ErrorKind::RingMismatch, "polynomials over different variable sets");
}

StarPolynomial StarPolynomial::operator-() const {
  StarPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

StarPolynomial& StarPolynomial::operator+=(const StarPolynomial& o) {
  adopt_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

StarPolynomial& StarPolynomial::operator-=(const StarPolynomial& o) {
  adopt_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

StarPolynomial& StarPolynomial::scale(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b) {
  StarPolynomial r(a.vars_);
  r.adopt_vars(b);
  if (a.terms_.size() == 1 && a.terms_.begin()->first.empty()) {
    r.terms_ = b.terms_;
    return r.scale(a.terms_.begin()->second);
  }
  if (b.terms_.size() == 1 && b.terms_.begin()->first.empty()) {
    r.terms_ = a.terms_;
    return r.scale(b.terms_.begin()->second);
  }
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  }
  return r;
}

StarPolynomial& StarPolynomial::operator*=(const StarPolynomial& o) { return *this = *this * o; }

std::string StarPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string term;
    if (m.empty()) {
      term = c.str();
    } else {
      if (c == GaussianRational(1)) {
        term.clear();
      } else if (c == GaussianRational(-1)) {
        term = "-";
      } else if (!c.re.is_zero() && !c.im.is_zero()) {
        term = "(" + c.str() + ")*";
      } else {
        term = c.str() + "*";
      }
      bool first = true;
      for (const auto& [var, e] : m) {
        if (!first) term += "*";
        first = false;
        term += vars_ ? vars_->name(var) : "v" + std::to_string(var);
        if (e > 1) term += "^" + std::to_string(e);
      }
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::uint64_t StarPolynomial::hash() const {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, e] : m) h = (h ^ (static_cast<std::uint64_t>(var) << 20 ^ e)) * 1099511628211ULL;
    h = (h ^ c.hash()) * 1099511628211ULL;
  }
  return h;
}

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "polynomial '" + std::string(text) + "': " + why);
}

StarPolynomial parse_term(const std::shared_ptr<const VariableInvolution>& vars, std::string_view term,
                          std::string_view whole) {
  StarPolynomial result(vars, GaussianRational(1));
  if (!term.empty() && (term[0] == '-' || term[0] == '+')) {
    if (term[0] == '-') result = -result;
    term.remove_prefix(1);
  }
  if (term.empty()) parse_fail(whole, "empty term");
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= term.size(); ++k) {
    if (k < term.size()) {
      if (term[k] == '(') ++depth;
      if (term[k] == ')') --depth;
      if (depth != 0 || term[k] != '*') continue;
    }
    std::string_view factor = term.substr(start, k - start);
    start = k + 1;
    if (factor.empty()) parse_fail(whole, "empty factor");
    if (factor.front() == '(') {
      if (factor.back() != ')') parse_fail(whole, "unbalanced parenthesis");
      result.scale(GaussianRational::parse(factor.substr(1, factor.size() - 2)));
    } else if (factor == "i") {
      result.scale(GaussianRational::i());
    } else if (std::isdigit(static_cast<unsigned char>(factor.front())) || factor.front() == '-') {
      result.scale(GaussianRational(Rational::parse(factor)));
    } else {
      std::uint32_t exponent = 1;
      auto caret = factor.find('^');
      std::string_view name = factor.substr(0, caret);
      if (caret != std::string_view::npos) {
        std::string e(factor.substr(caret + 1));
        if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          parse_fail(whole, "bad exponent");
        }
        exponent = static_cast<std::uint32_t>(std::stoul(e));
      }
      if (!std::all_of(name.begin(), name.end(), is_name_char)) parse_fail(whole, "bad variable name");
      auto var = vars ? vars->find(name) : std::nullopt;
      if (!var) parse_fail(whole, "unknown variable '" + std::string(name) + "'");
      StarPolynomial x = StarPolynomial::variable(vars, *var);
      for (std::uint32_t e = 0; e < exponent; ++e) result *= x;
    }
  }
  if (depth != 0) parse_fail(whole, "unbalanced parenthesis");
  return result;
}

}  // namespace

StarPolynomial StarPolynomial::parse(std::shared_ptr<const VariableInvolution> vars, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) parse_fail(text, "empty input");
  StarPolynomial total(vars);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k < s.size()) {
      if (s[k] == '(') ++depth;
      if (s[k] == ')') --depth;
      const bool split = depth == 0 && k > start && (s[k] == '+' || s[k] == '-') &&
                         s[k - 1] != '*' && s[k - 1] != '^' && s[k - 1] != '(';
      if (!split) continue;
    }
    std::string_view term = std::string_view(s).substr(start, k - start);
    if (term != "0") total += parse_term(vars, term, text);
    start = k;
    if (k < s.size() && s[k] == '+') start = k + 1;
  }
  return total;
}

}  // namespace lieder
