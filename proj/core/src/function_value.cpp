#include "lieder/function_value.hpp"

#include <cctype>

#include "lieder/error.hpp"

namespace lieder {

FunctionValue::FunctionValue(std::vector<GaussianRational> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::DimensionMismatch, "function value over an empty set");
}

FunctionValue FunctionValue::constant(std::size_t omega_size, const GaussianRational& value) {
  return FunctionValue(std::vector<GaussianRational>(omega_size, value));
}

FunctionValue FunctionValue::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(ErrorKind::ParseError, "function value must be bracketed: '" + std::string(text) + "'");
  }
  std::vector<GaussianRational> values;
  std::size_t start = 1;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] == ',' || k + 1 == s.size()) {
      values.push_back(GaussianRational::parse(std::string_view(s).substr(start, k - start)));
      start = k + 1;
    }
  }
  return FunctionValue(std::move(values));
}

bool FunctionValue::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool FunctionValue::is_real() const {
  for (const auto& v : values_) {
    if (!v.is_real()) return false;
  }
  return true;
}

FunctionValue FunctionValue::conj() const {
  FunctionValue r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

FunctionValue FunctionValue::inverse() const {
  FunctionValue r = *this;
  for (auto& v : r.values_) v = v.inverse();
  return r;
}

FunctionValue FunctionValue::operator-() const {
  FunctionValue r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

void FunctionValue::require_same_size(const FunctionValue& o) const {
  if (o.values_.size() != values_.size()) {
    throw Error(ErrorKind::RingMismatch, "function values over sets of sizes " + std::to_string(values_.size()) +
                                             " and " + std::to_string(o.values_.size()));
  }
}

FunctionValue& FunctionValue::operator+=(const FunctionValue& o) {
  require_same_size(o);
  for (std::size_t t = 0; t < values_.size(); ++t) values_[t] += o.values_[t];
  return *this;
}

FunctionValue& FunctionValue::operator-=(const FunctionValue& o) {
  require_same_size(o);
  for (std::size_t t = 0; t < values_.size(); ++t) values_[t] -= o.values_[t];
  return *this;
}

FunctionValue& FunctionValue::operator*=(const FunctionValue& o) {
  require_same_size(o);
  for (std::size_t t = 0; t < values_.size(); ++t) values_[t] *= o.values_[t];
  return *this;
}

std::string FunctionValue::str() const {
  std::string out = "[";
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (t) out += ",";
    out += values_[t].str();
  }
  return out + "]";
}

std::uint64_t FunctionValue::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& v : values_) h = (h ^ v.hash()) * 1099511628211ULL;
  return h;
}

}  // namespace lieder
