#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lieder/gaussian.hpp"

namespace lieder {

/// A map from a finite set Omega = {0..size-1} to the Gaussian rationals with
/// pointwise arithmetic and pointwise conjugation. Textual form `[e0,e1,...]`.
class FunctionValue {
 public:
  FunctionValue() = default;
  explicit FunctionValue(std::vector<GaussianRational> values);
  static FunctionValue constant(std::size_t omega_size, const GaussianRational& value);
  static FunctionValue parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  const GaussianRational& at(std::size_t t) const { return values_.at(t); }
  const std::vector<GaussianRational>& values() const { return values_; }

  bool is_zero() const;
  bool is_real() const;
  FunctionValue conj() const;
  FunctionValue inverse() const;

  FunctionValue operator-() const;
  FunctionValue& operator+=(const FunctionValue& o);
  FunctionValue& operator-=(const FunctionValue& o);
  FunctionValue& operator*=(const FunctionValue& o);

  friend FunctionValue operator+(FunctionValue a, const FunctionValue& b) { return a += b; }
  friend FunctionValue operator-(FunctionValue a, const FunctionValue& b) { return a -= b; }
  friend FunctionValue operator*(FunctionValue a, const FunctionValue& b) { return a *= b; }
  friend bool operator==(const FunctionValue&, const FunctionValue&) = default;

  std::string str() const;
  std::uint64_t hash() const;

 private:
  void require_same_size(const FunctionValue& o) const;

  std::vector<GaussianRational> values_;
};

}  // namespace lieder
