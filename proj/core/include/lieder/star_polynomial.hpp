#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieder/gaussian.hpp"

namespace lieder {

/// An involutive permutation sigma of variable indices together with display
/// names. Variable k stands for an indeterminate whose star is variable
/// sigma(k); a variable with sigma(k) == k is star-fixed.
class VariableInvolution {
 public:
  VariableInvolution() = default;
  VariableInvolution(std::vector<std::uint32_t> partner, std::vector<std::string> names);

  /// `count` variables named z1..z{count}, paired (z1,z2), (z3,z4), ...; an odd
  /// trailing variable is star-fixed.
  static VariableInvolution paired(std::uint32_t count);

  /// Registers a new star-fixed variable; returns its index.
  std::uint32_t add_fixed(std::string name);
  /// Registers a pair (v, v*) and returns the index of v; v* is index + 1.
  std::uint32_t add_pair(std::string name, std::string star_name);

  std::uint32_t size() const { return static_cast<std::uint32_t>(partner_.size()); }
  std::uint32_t partner(std::uint32_t var) const { return partner_.at(var); }
  const std::string& name(std::uint32_t var) const { return names_.at(var); }
  std::optional<std::uint32_t> find(std::string_view name) const;

  friend bool operator==(const VariableInvolution&, const VariableInvolution&) = default;

 private:
  std::vector<std::uint32_t> partner_;
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
};

/// Sorted (variable, exponent) pairs with positive exponents; empty is the
/// constant monomial.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Monomial monomial_product(const Monomial& a, const Monomial& b);
std::uint32_t monomial_degree(const Monomial& m);

/// Polynomial with Gaussian-rational coefficients in the variables of a
/// VariableInvolution. No stored coefficient is zero.
class StarPolynomial {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  StarPolynomial() = default;
  explicit StarPolynomial(std::shared_ptr<const VariableInvolution> vars) : vars_(std::move(vars)) {}
  StarPolynomial(std::shared_ptr<const VariableInvolution> vars, const GaussianRational& constant);

  static StarPolynomial variable(std::shared_ptr<const VariableInvolution> vars, std::uint32_t var);
  static StarPolynomial parse(std::shared_ptr<const VariableInvolution> vars, std::string_view text);

  const Terms& terms() const { return terms_; }
  const std::shared_ptr<const VariableInvolution>& vars() const { return vars_; }

  bool is_zero() const { return terms_.empty(); }
  std::uint32_t degree() const;
  /// Coefficient of the monomial; zero if absent.
  GaussianRational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const GaussianRational& c);

  StarPolynomial star() const;
  /// Substitutes Gaussian-rational values for every variable.
  GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

  StarPolynomial operator-() const;
  StarPolynomial& operator+=(const StarPolynomial& o);
  StarPolynomial& operator-=(const StarPolynomial& o);
  StarPolynomial& operator*=(const StarPolynomial& o);
  StarPolynomial& scale(const GaussianRational& c);

  friend StarPolynomial operator+(StarPolynomial a, const StarPolynomial& b) { return a += b; }
  friend StarPolynomial operator-(StarPolynomial a, const StarPolynomial& b) { return a -= b; }
  friend StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b);
  friend bool operator==(const StarPolynomial& a, const StarPolynomial& b) { return a.terms_ == b.terms_; }

  std::string str() const;
  std::uint64_t hash() const;

 private:
  void adopt_vars(const StarPolynomial& o);

  std::shared_ptr<const VariableInvolution> vars_;
  Terms terms_;
};

}  // namespace lieder
