#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieder/ring.hpp"

namespace lieder {

/// Dense n x n matrix over a registered ring. Indices are 1-based: entry (i, j)
/// is a^{i,j}. The JSON form stores rows 0-based.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t n);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_json(const Ring& ring, const nlohmann::json& j);

  std::size_t n() const { return n_; }
  const Ring& ring() const { return ring_; }

  const RingElement& operator()(std::size_t i, std::size_t j) const { return e_[index(i, j)]; }
  /// Replaces entry (i, j); the value must belong to the matrix ring.
  void set(std::size_t i, std::size_t j, RingElement value);
  void add_to(std::size_t i, std::size_t j, const RingElement& value);

  bool is_zero() const;
  Matrix star_transpose() const;
  /// Plain transpose, no involution.
  Matrix transpose() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const RingElement& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const RingElement& s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, const RingElement& s) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b);

  nlohmann::json to_json() const;
  std::string str() const;
  std::uint64_t hash() const;

  const std::vector<RingElement>& raw() const { return e_; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  void require_compatible(const Matrix& o) const;

  Ring ring_;
  std::size_t n_;
  std::vector<RingElement> e_;
};

/// e_{i,j}: one at (i, j), zero elsewhere.
Matrix matrix_unit(const Ring& ring, std::size_t n, std::size_t i, std::size_t j);
Matrix bracket(const Matrix& a, const Matrix& b);
/// e_{i,i} a e_{j,j}, the matrix a^{i,j} e_{i,j}.
Matrix corner(const Matrix& a, std::size_t i, std::size_t j);
/// e a e with e the sum of e_{t,t} over t in `block`.
Matrix block_compress(const Matrix& a, const std::set<std::size_t>& block);

}  // namespace lieder
