#include "lieder/ring.hpp"

#include "lieder/error.hpp"

namespace lieder {

std::string_view to_string(RingKind kind) {
  switch (kind) {
    case RingKind::Gauss: return "gauss";
    case RingKind::Function: return "fnring";
    case RingKind::Polynomial: return "poly";
  }
  return "unknown";
}

namespace {

[[noreturn]] void mismatch(const RingElement& a, const RingElement& b) {
  throw Error(ErrorKind::RingMismatch, "operands from rings '" + std::string(to_string(a.kind())) + "' and '" +
                                           std::string(to_string(b.kind())) + "'");
}

template <class Op>
void combine(RingElement::Value& lhs, const RingElement::Value& rhs, Op op, const RingElement& a,
             const RingElement& b) {
  if (lhs.index() != rhs.index()) mismatch(a, b);
  std::visit(
      [&](auto& l) {
        using T = std::decay_t<decltype(l)>;
        op(l, std::get<T>(rhs));
      },
      lhs);
}

}  // namespace

const GaussianRational& RingElement::gauss() const {
  if (auto p = std::get_if<GaussianRational>(&v_)) return *p;
  throw Error(ErrorKind::UnsupportedRing, "element is not a Gaussian rational");
}

const FunctionValue& RingElement::function() const {
  if (auto p = std::get_if<FunctionValue>(&v_)) return *p;
  throw Error(ErrorKind::UnsupportedRing, "element is not a function-ring value");
}

const StarPolynomial& RingElement::polynomial() const {
  if (auto p = std::get_if<StarPolynomial>(&v_)) return *p;
  throw Error(ErrorKind::UnsupportedRing, "element is not a polynomial");
}

bool RingElement::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

RingElement RingElement::star() const {
  return std::visit(
      [](const auto& x) -> RingElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, StarPolynomial>) {
          return x.star();
        } else {
          return x.conj();
        }
      },
      v_);
}

RingElement RingElement::operator-() const {
  return std::visit([](const auto& x) -> RingElement { return -x; }, v_);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  combine(v_, o.v_, [](auto& l, const auto& r) { l += r; }, *this, o);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  combine(v_, o.v_, [](auto& l, const auto& r) { l -= r; }, *this, o);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  combine(v_, o.v_, [](auto& l, const auto& r) { l *= r; }, *this, o);
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b.v_);
      },
      a.v_);
}

std::string RingElement::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

std::uint64_t RingElement::hash() const {
  return std::visit([](const auto& x) { return x.hash(); }, v_);
}

Ring Ring::gauss() { return Ring(RingKind::Gauss, 0, nullptr); }

Ring Ring::function(std::size_t omega_size) {
  if (omega_size == 0) throw Error(ErrorKind::ConfigError, "function ring needs |Omega| >= 1");
  return Ring(RingKind::Function, omega_size, nullptr);
}

Ring Ring::polynomial(std::shared_ptr<const VariableInvolution> vars) {
  if (!vars) throw Error(ErrorKind::ConfigError, "polynomial ring needs a variable involution");
  return Ring(RingKind::Polynomial, 0, std::move(vars));
}

RingElement Ring::constant(const GaussianRational& c) const {
  switch (kind_) {
    case RingKind::Gauss: return c;
    case RingKind::Function: return FunctionValue::constant(omega_, c);
    case RingKind::Polynomial: return StarPolynomial(vars_, c);
  }
  throw Error(ErrorKind::UnsupportedRing, "unregistered ring");
}

RingElement Ring::zero() const { return constant(GaussianRational()); }
RingElement Ring::one() const { return constant(GaussianRational(1)); }
RingElement Ring::imaginary_unit() const { return constant(GaussianRational::i()); }

bool Ring::contains(const RingElement& x) const {
  if (x.kind() != kind_) return false;
  switch (kind_) {
    case RingKind::Gauss: return true;
    case RingKind::Function: return x.function().size() == omega_;
    case RingKind::Polynomial: {
      const auto& v = x.polynomial().vars();
      return !v || v == vars_ || *v == *vars_;
    }
  }
  return false;
}

void Ring::require(const RingElement& x) const {
  if (!contains(x)) throw Error(ErrorKind::RingMismatch, "element " + x.str() + " is not in ring " + name());
}

RingElement Ring::parse(std::string_view text) const {
  switch (kind_) {
    case RingKind::Gauss: return GaussianRational::parse(text);
    case RingKind::Function: {
      RingElement x = FunctionValue::parse(text);
      require(x);
      return x;
    }
    case RingKind::Polynomial: return StarPolynomial::parse(vars_, text);
  }
  throw Error(ErrorKind::UnsupportedRing, "unregistered ring");
}

namespace {

GaussianRational random_gauss(Rng& rng) { return {rng.rational(), rng.rational()}; }

}  // namespace

RingElement Ring::random(Rng& rng) const {
  switch (kind_) {
    case RingKind::Gauss: return random_gauss(rng);
    case RingKind::Function: {
      std::vector<GaussianRational> v;
      v.reserve(omega_);
      for (std::size_t t = 0; t < omega_; ++t) v.push_back(random_gauss(rng));
      return FunctionValue(std::move(v));
    }
    case RingKind::Polynomial: {
      StarPolynomial p(vars_);
      const auto terms = rng.uniform(0, 3);
      for (std::int64_t k = 0; k < terms; ++k) {
        Monomial m;
        const auto deg = rng.uniform(0, 2);
        for (std::int64_t d = 0; d < deg && vars_->size() > 0; ++d) {
          m = monomial_product(m, Monomial{{static_cast<std::uint32_t>(rng.uniform(0, vars_->size() - 1)), 1}});
        }
        p.add_term(m, random_gauss(rng));
      }
      return p;
    }
  }
  throw Error(ErrorKind::UnsupportedRing, "unregistered ring");
}

RingElement Ring::random_real_nonzero(Rng& rng) const {
  if (kind_ == RingKind::Function) {
    std::vector<GaussianRational> v;
    v.reserve(omega_);
    for (std::size_t t = 0; t < omega_; ++t) v.emplace_back(rng.nonzero_rational());
    return FunctionValue(std::move(v));
  }
  return constant(GaussianRational(rng.nonzero_rational()));
}

RingElement Ring::real_part(const RingElement& x) const {
  require(x);
  switch (kind_) {
    case RingKind::Gauss: return GaussianRational(x.gauss().re);
    case RingKind::Function: {
      std::vector<GaussianRational> v;
      for (const auto& g : x.function().values()) v.emplace_back(g.re);
      return FunctionValue(std::move(v));
    }
    case RingKind::Polynomial: break;
  }
  throw Error(ErrorKind::UnsupportedRing, "real part undefined over polynomial rings");
}

RingElement Ring::imag_part(const RingElement& x) const {
  require(x);
  switch (kind_) {
    case RingKind::Gauss: return GaussianRational(x.gauss().im);
    case RingKind::Function: {
      std::vector<GaussianRational> v;
      for (const auto& g : x.function().values()) v.emplace_back(g.im);
      return FunctionValue(std::move(v));
    }
    case RingKind::Polynomial: break;
  }
  throw Error(ErrorKind::UnsupportedRing, "imaginary part undefined over polynomial rings");
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Gauss: return "gauss";
    case RingKind::Function: return "fnring(" + std::to_string(omega_) + ")";
    case RingKind::Polynomial: return "poly(" + std::to_string(vars_->size()) + ")";
  }
  return "unknown";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.kind_ != b.kind_ || a.omega_ != b.omega_) return false;
  if (a.kind_ != RingKind::Polynomial) return true;
  return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
}

}  // namespace lieder
