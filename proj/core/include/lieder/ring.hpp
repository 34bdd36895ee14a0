#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "lieder/function_value.hpp"
#include "lieder/gaussian.hpp"
#include "lieder/random.hpp"
#include "lieder/star_polynomial.hpp"

namespace lieder {

enum class RingKind { Gauss, Function, Polynomial };

std::string_view to_string(RingKind kind);

/// Element of one of the three registered commutative unital *-rings.
/// Binary operations require both operands to come from the same ring.
class RingElement {
 public:
  using Value = std::variant<GaussianRational, FunctionValue, StarPolynomial>;

  RingElement() = default;
  RingElement(GaussianRational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  RingElement(FunctionValue v) : v_(std::move(v)) {}     // NOLINT(google-explicit-constructor)
  RingElement(StarPolynomial v) : v_(std::move(v)) {}    // NOLINT(google-explicit-constructor)

  RingKind kind() const { return static_cast<RingKind>(v_.index()); }
  const Value& value() const { return v_; }
  const GaussianRational& gauss() const;
  const FunctionValue& function() const;
  const StarPolynomial& polynomial() const;

  bool is_zero() const;
  RingElement star() const;
  /// Star-fixed elements; for polynomials, invariance under the involution.
  bool is_star_fixed() const { return star() == *this; }

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement& a, const RingElement& b);

  std::string str() const;
  std::uint64_t hash() const;

 private:
  Value v_;
};

/// Descriptor of a registered ring: produces constants, parses and samples
/// elements. Gauss and Function rings are "decomposable": every element splits
/// as re + I*im with star-fixed parts.
class Ring {
 public:
  static Ring gauss();
  static Ring function(std::size_t omega_size);
  static Ring polynomial(std::shared_ptr<const VariableInvolution> vars);

  RingKind kind() const { return kind_; }
  std::size_t omega_size() const { return omega_; }
  const std::shared_ptr<const VariableInvolution>& vars() const { return vars_; }
  bool decomposable() const { return kind_ != RingKind::Polynomial; }

  RingElement zero() const;
  RingElement one() const;
  RingElement imaginary_unit() const;
  /// Image of a Gaussian rational under the unital embedding.
  RingElement constant(const GaussianRational& c) const;
  bool contains(const RingElement& x) const;
  void require(const RingElement& x) const;

  RingElement parse(std::string_view text) const;
  RingElement random(Rng& rng) const;
  /// Random star-fixed element, nonzero at every point for function rings.
  RingElement random_real_nonzero(Rng& rng) const;

  /// Star-fixed parts of x = re + I*im. Requires a decomposable ring.
  RingElement real_part(const RingElement& x) const;
  RingElement imag_part(const RingElement& x) const;

  std::string name() const;
  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring(RingKind kind, std::size_t omega, std::shared_ptr<const VariableInvolution> vars)
      : kind_(kind), omega_(omega), vars_(std::move(vars)) {}

  RingKind kind_ = RingKind::Gauss;
  std::size_t omega_ = 0;
  std::shared_ptr<const VariableInvolution> vars_;
};

}  // namespace lieder
