#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieder/matrix.hpp"

namespace lieder {

/// (a^{i,j})* = -a^{j,i} for all i, j.
bool is_skew_adjoint(const Matrix& a);

/// Element of K_n over a registered ring.
class SkewMatrix {
 public:
  /// Throws NotSkewAdjoint.
  explicit SkewMatrix(Matrix m);
  SkewMatrix(const Ring& ring, std::size_t n) : m_(ring, n) {}

  /// For results that are skew-adjoint by closure (brackets, real-linear
  /// combinations of skew-adjoint matrices); skips the entrywise check.
  static SkewMatrix trusted(Matrix m) { return SkewMatrix(std::move(m), 0); }

  const Matrix& matrix() const { return m_; }
  std::size_t n() const { return m_.n(); }
  const Ring& ring() const { return m_.ring(); }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  bool is_zero() const { return m_.is_zero(); }

  SkewMatrix operator-() const { return trusted(-m_); }
  friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) { return trusted(a.m_ + b.m_); }
  friend SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b) { return trusted(a.m_ - b.m_); }
  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.m_ == b.m_; }

  std::string str() const { return m_.str(); }
  nlohmann::json to_json() const { return m_.to_json(); }

 private:
  SkewMatrix(Matrix m, int) : m_(std::move(m)) {}
  Matrix m_;
};

SkewMatrix bracket(const SkewMatrix& a, const SkewMatrix& b);
/// c * a for star-fixed c; throws NotSkewAdjoint otherwise.
SkewMatrix scale(const RingElement& c, const SkewMatrix& a);

/// s_{i,j} = e_{i,j} - e_{j,i}; either index order.
SkewMatrix s_elem(const Ring& ring, std::size_t n, std::size_t i, std::size_t j);
/// ebar_{i,j} = e_{i,j} + e_{j,i}, not skew-adjoint on its own.
Matrix ebar_elem(const Ring& ring, std::size_t n, std::size_t i, std::size_t j);
/// I * ebar_{i,j}.
SkewMatrix ebar_i_elem(const Ring& ring, std::size_t n, std::size_t i, std::size_t j);
/// I * e_{i,i}.
SkewMatrix ie_diag(const Ring& ring, std::size_t n, std::size_t i);

/// Weights lambda_1..lambda_{n-1} of the staircase element; empty means unit.
struct Weights {
  std::vector<GaussianRational> lambdas;

  static Weights unit() { return {}; }
  bool is_unit() const { return lambdas.empty(); }
  std::string str() const;
};

/// sum_k lambda_k s_{k,k+1}. Throws ZeroWeight, ComplexWeight (a non-real
/// weight breaks skew-adjointness) and DimensionMismatch.
SkewMatrix x_o(const Ring& ring, std::size_t n, const Weights& weights = Weights::unit());

/// Basis elements in the order: s_{i,j} (i<j), I*ebar_{i,j} (i<j), I*e_{i,i};
/// each block lexicographic. n^2 elements in total.
class CanonicalBasis {
 public:
  enum class Kind { S, IEbar, IDiag };
  struct Label {
    Kind kind;
    std::size_t i;
    std::size_t j;
  };

  CanonicalBasis(const Ring& ring, std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const SkewMatrix& operator[](std::size_t k) const { return elements_.at(k); }
  const std::vector<SkewMatrix>& elements() const { return elements_; }
  const Label& label(std::size_t k) const { return labels_.at(k); }
  std::string label_str(std::size_t k) const;

  static std::size_t index_s(std::size_t n, std::size_t i, std::size_t j);
  static std::size_t index_iebar(std::size_t n, std::size_t i, std::size_t j);
  static std::size_t index_idiag(std::size_t n, std::size_t i);
  static std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j);
  /// True if the basis element lies in the block spanned by e_{t,t}, t in block.
  static bool supported_in(const Label& label, const std::vector<bool>& in_block);

 private:
  std::size_t n_;
  std::vector<SkewMatrix> elements_;
  std::vector<Label> labels_;
};

/// Star-fixed coordinates of x in the canonical basis: x1^{i,j}, x2^{i,j},
/// x^{i,i}. Requires a decomposable ring (UnsupportedRing otherwise).
std::vector<RingElement> decompose(const SkewMatrix& x);
SkewMatrix recompose(const Ring& ring, std::size_t n, const std::vector<RingElement>& coefficients);

/// Rational coordinates of x at point t of Omega (t ignored for Gauss).
std::vector<Rational> rational_coordinates(const SkewMatrix& x, std::size_t t = 0);
/// Value of a function-ring matrix at point t as a Gaussian-rational matrix.
Matrix project(const Matrix& a, std::size_t t);
SkewMatrix project(const SkewMatrix& a, std::size_t t);
/// Function-ring matrix whose value at point t is points[t].
Matrix lift(const std::vector<Matrix>& points);
SkewMatrix lift(const std::vector<SkewMatrix>& points);

/// Number of independent coordinate systems to solve over: |Omega| for
/// function rings, 1 for Gauss.
std::size_t solve_points(const Ring& ring);

/// R_a(x) = [a, x].
class InnerDerivation {
 public:
  explicit InnerDerivation(Matrix a) : a_(std::move(a)) {}
  explicit InnerDerivation(const SkewMatrix& a) : a_(a.matrix()) {}

  const Matrix& generator() const { return a_; }
  Matrix apply(const Matrix& x) const { return bracket(a_, x); }
  SkewMatrix apply(const SkewMatrix& x) const;

 private:
  Matrix a_;
};

/// Linear map on K_n given by its images of the canonical basis; evaluated by
/// decomposition. Decomposable rings only.
class LinearLieMap {
 public:
  LinearLieMap(Ring ring, std::size_t n, std::vector<SkewMatrix> images);

  static LinearLieMap zero(const Ring& ring, std::size_t n);
  static LinearLieMap of_inner(const SkewMatrix& a);
  static LinearLieMap from_json(const Ring& ring, const nlohmann::json& j);

  std::size_t n() const { return n_; }
  const Ring& ring() const { return ring_; }
  const std::vector<SkewMatrix>& images() const { return images_; }
  const SkewMatrix& image(std::size_t k) const { return images_.at(k); }

  SkewMatrix apply(const SkewMatrix& x) const;
  /// Copy with one image replaced.
  LinearLieMap with_image(std::size_t k, SkewMatrix image) const;

  nlohmann::json to_json() const;

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<SkewMatrix> images_;
};

/// lambda * I * 1 with lambda a random nonzero star-fixed scalar drawn from
/// `seed`. Central, so R_{a + gauge} = R_a.
SkewMatrix centralizer_gauge(const Ring& ring, std::size_t n, std::uint64_t seed);

/// Random element of K_n.
SkewMatrix random_skew(const Ring& ring, std::size_t n, Rng& rng);

struct SpanResult {
  bool contained = false;
  /// Star-fixed combination coefficients, one per generator, when contained.
  std::vector<RingElement> coefficients;
};

/// Membership of x in the star-fixed linear span of the generators.
SpanResult span_contains(const std::vector<SkewMatrix>& generators, const SkewMatrix& x);

}  // namespace lieder
