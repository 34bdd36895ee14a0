#include "lieder/lie.hpp"

#include "lieder/error.hpp"
#include "lieder/linear_solve.hpp"

namespace lieder {

bool is_skew_adjoint(const Matrix& a) {
  for (std::size_t i = 1; i <= a.n(); ++i) {
    for (std::size_t j = i; j <= a.n(); ++j) {
      if (!(a(i, j).star() == -a(j, i))) return false;
    }
  }
  return true;
}

SkewMatrix::SkewMatrix(Matrix m) : m_(std::move(m)) {
  if (!is_skew_adjoint(m_)) throw Error(ErrorKind::NotSkewAdjoint, "matrix " + m_.str() + " is not skew-adjoint");
}

SkewMatrix bracket(const SkewMatrix& a, const SkewMatrix& b) {
  return SkewMatrix::trusted(bracket(a.matrix(), b.matrix()));
}

SkewMatrix scale(const RingElement& c, const SkewMatrix& a) {
  if (!c.is_star_fixed()) throw Error(ErrorKind::NotSkewAdjoint, "scaling by non-star-fixed " + c.str());
  return SkewMatrix::trusted(c * a.matrix());
}

namespace {

void check_pair(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "indices (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." + std::to_string(n));
  }
  if (i == j) throw Error(ErrorKind::EqualIndices, "generator needs distinct indices, got " + std::to_string(i) + " twice");
}

}  // namespace

SkewMatrix s_elem(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
  check_pair(n, i, j);
  Matrix m(ring, n);
  m.set(i, j, ring.one());
  m.set(j, i, -ring.one());
  return SkewMatrix::trusted(std::move(m));
}

Matrix ebar_elem(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
  check_pair(n, i, j);
  Matrix m(ring, n);
  m.set(i, j, ring.one());
  m.set(j, i, ring.one());
  return m;
}

SkewMatrix ebar_i_elem(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
  check_pair(n, i, j);
  Matrix m(ring, n);
  m.set(i, j, ring.imaginary_unit());
  m.set(j, i, ring.imaginary_unit());
  return SkewMatrix::trusted(std::move(m));
}

SkewMatrix ie_diag(const Ring& ring, std::size_t n, std::size_t i) {
  Matrix m(ring, n);
  m.set(i, i, ring.imaginary_unit());
  return SkewMatrix::trusted(std::move(m));
}

std::string Weights::str() const {
  if (is_unit()) return "unit";
  std::string out = "[";
  for (std::size_t k = 0; k < lambdas.size(); ++k) out += (k ? "," : "") + lambdas[k].str();
  return out + "]";
}

SkewMatrix x_o(const Ring& ring, std::size_t n, const Weights& weights) {
  if (!weights.is_unit() && weights.lambdas.size() + 1 != n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n - 1) + " weights, got " +
                                                  std::to_string(weights.lambdas.size()));
  }
  Matrix m(ring, n);
  for (std::size_t k = 1; k < n; ++k) {
    GaussianRational lambda(1);
    if (!weights.is_unit()) {
      lambda = weights.lambdas[k - 1];
      if (lambda.is_zero()) throw Error(ErrorKind::ZeroWeight, "weight lambda_" + std::to_string(k) + " is zero");
      if (!lambda.is_real()) {
        throw Error(ErrorKind::ComplexWeight,
                    "weight lambda_" + std::to_string(k) + " = " + lambda.str() + " is not real");
      }
    }
    m.set(k, k + 1, ring.constant(lambda));
    m.set(k + 1, k, ring.constant(-lambda));
  }
  return SkewMatrix::trusted(std::move(m));
}

std::size_t CanonicalBasis::pair_rank(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

std::size_t CanonicalBasis::index_s(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return pair_rank(n, i, j);
}

std::size_t CanonicalBasis::index_iebar(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return n * (n - 1) / 2 + pair_rank(n, i, j);
}

std::size_t CanonicalBasis::index_idiag(std::size_t n, std::size_t i) { return n * (n - 1) + i - 1; }

bool CanonicalBasis::supported_in(const Label& label, const std::vector<bool>& in_block) {
  return in_block.at(label.i) && in_block.at(label.j);
}

CanonicalBasis::CanonicalBasis(const Ring& ring, std::size_t n) : n_(n) {
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      elements_.push_back(s_elem(ring, n, i, j));
      labels_.push_back({Kind::S, i, j});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      elements_.push_back(ebar_i_elem(ring, n, i, j));
      labels_.push_back({Kind::IEbar, i, j});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    elements_.push_back(ie_diag(ring, n, i));
    labels_.push_back({Kind::IDiag, i, i});
  }
}

std::string CanonicalBasis::label_str(std::size_t k) const {
  const auto& l = label(k);
  const std::string ij = std::to_string(l.i) + "," + std::to_string(l.j);
  switch (l.kind) {
    case Kind::S: return "s_{" + ij + "}";
    case Kind::IEbar: return "I*ebar_{" + ij + "}";
    case Kind::IDiag: return "I*e_{" + ij + "}";
  }
  return "?";
}

std::vector<RingElement> decompose(const SkewMatrix& x) {
  const Ring& ring = x.ring();
  if (!ring.decomposable()) throw Error(ErrorKind::UnsupportedRing, "decomposition needs a decomposable ring, got " + ring.name());
  const std::size_t n = x.n();
  std::vector<RingElement> c(n * n, ring.zero());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto& e = x(i, j);
      if (e.is_zero()) continue;
      c[CanonicalBasis::index_s(n, i, j)] = ring.real_part(e);
      c[CanonicalBasis::index_iebar(n, i, j)] = ring.imag_part(e);
    }
    if (!x(i, i).is_zero()) c[CanonicalBasis::index_idiag(n, i)] = ring.imag_part(x(i, i));
  }
  return c;
}

SkewMatrix recompose(const Ring& ring, std::size_t n, const std::vector<RingElement>& coefficients) {
  if (coefficients.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n * n) + " coefficients");
  }
  const RingElement I = ring.imaginary_unit();
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto& x1 = coefficients[CanonicalBasis::index_s(n, i, j)];
      const auto& x2 = coefficients[CanonicalBasis::index_iebar(n, i, j)];
      m.set(i, j, x1 + I * x2);
      m.set(j, i, -x1 + I * x2);
    }
    m.set(i, i, I * coefficients[CanonicalBasis::index_idiag(n, i)]);
  }
  return SkewMatrix(std::move(m));
}

namespace {

const GaussianRational& value_at(const RingElement& e, std::size_t t) {
  if (e.kind() == RingKind::Gauss) return e.gauss();
  if (e.kind() == RingKind::Function) return e.function().at(t);
  throw Error(ErrorKind::UnsupportedRing, "coordinates need a decomposable ring");
}

}  // namespace

std::vector<Rational> rational_coordinates(const SkewMatrix& x, std::size_t t) {
  const std::size_t n = x.n();
  std::vector<Rational> c(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto& e = value_at(x(i, j), t);
      c[CanonicalBasis::index_s(n, i, j)] = e.re;
      c[CanonicalBasis::index_iebar(n, i, j)] = e.im;
    }
    c[CanonicalBasis::index_idiag(n, i)] = value_at(x(i, i), t).im;
  }
  return c;
}

Matrix project(const Matrix& a, std::size_t t) {
  if (a.ring().kind() == RingKind::Gauss) {
    if (t != 0) throw Error(ErrorKind::IndexOutOfRange, "Gaussian matrices have a single point");
    return a;
  }
  if (a.ring().kind() != RingKind::Function) throw Error(ErrorKind::UnsupportedRing, "projection needs a function ring");
  if (t >= a.ring().omega_size()) throw Error(ErrorKind::IndexOutOfRange, "point outside Omega");
  Matrix r(Ring::gauss(), a.n());
  for (std::size_t i = 1; i <= a.n(); ++i) {
    for (std::size_t j = 1; j <= a.n(); ++j) r.set(i, j, a(i, j).function().at(t));
  }
  return r;
}

SkewMatrix project(const SkewMatrix& a, std::size_t t) { return SkewMatrix::trusted(project(a.matrix(), t)); }

Matrix lift(const std::vector<Matrix>& points) {
  if (points.empty()) throw Error(ErrorKind::DimensionMismatch, "lift needs at least one point");
  const std::size_t n = points.front().n();
  Matrix r(Ring::function(points.size()), n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<GaussianRational> v;
      v.reserve(points.size());
      for (const auto& p : points) {
        if (p.n() != n) throw Error(ErrorKind::DimensionMismatch, "points of different sizes");
        v.push_back(p(i, j).gauss());
      }
      r.set(i, j, FunctionValue(std::move(v)));
    }
  }
  return r;
}

SkewMatrix lift(const std::vector<SkewMatrix>& points) {
  std::vector<Matrix> m;
  m.reserve(points.size());
  for (const auto& p : points) m.push_back(p.matrix());
  return SkewMatrix::trusted(lift(m));
}

std::size_t solve_points(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Gauss: return 1;
    case RingKind::Function: return ring.omega_size();
    case RingKind::Polynomial: break;
  }
  throw Error(ErrorKind::UnsupportedRing, "exact solves need a decomposable ring, got " + ring.name());
}

SkewMatrix InnerDerivation::apply(const SkewMatrix& x) const { return SkewMatrix::trusted(bracket(a_, x.matrix())); }

LinearLieMap::LinearLieMap(Ring ring, std::size_t n, std::vector<SkewMatrix> images)
    : ring_(std::move(ring)), n_(n), images_(std::move(images)) {
  if (!ring_.decomposable()) throw Error(ErrorKind::UnsupportedRing, "linear maps need a decomposable ring");
  if (images_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n * n) + " basis images");
  }
  for (const auto& im : images_) {
    if (im.n() != n) throw Error(ErrorKind::DimensionMismatch, "image of wrong size");
    if (!(im.ring() == ring_)) throw Error(ErrorKind::RingMismatch, "image over a different ring");
  }
}

LinearLieMap LinearLieMap::zero(const Ring& ring, std::size_t n) {
  return LinearLieMap(ring, n, std::vector<SkewMatrix>(n * n, SkewMatrix(ring, n)));
}

LinearLieMap LinearLieMap::of_inner(const SkewMatrix& a) {
  CanonicalBasis basis(a.ring(), a.n());
  std::vector<SkewMatrix> images;
  images.reserve(basis.size());
  for (const auto& b : basis.elements()) images.push_back(bracket(a, b));
  return LinearLieMap(a.ring(), a.n(), std::move(images));
}

LinearLieMap LinearLieMap::from_json(const Ring& ring, const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "linear map JSON must be a nonempty list of images");
  std::vector<SkewMatrix> images;
  for (const auto& im : j) images.emplace_back(Matrix::from_json(ring, im));
  const std::size_t n = images.front().n();
  return LinearLieMap(ring, n, std::move(images));
}

SkewMatrix LinearLieMap::apply(const SkewMatrix& x) const {
  if (x.n() != n_) throw Error(ErrorKind::DimensionMismatch, "argument of size " + std::to_string(x.n()));
  if (!(x.ring() == ring_)) throw Error(ErrorKind::RingMismatch, "argument over a different ring");
  const auto c = decompose(x);
  Matrix sum(ring_, n_);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) sum += c[k] * images_[k].matrix();
  }
  return SkewMatrix::trusted(std::move(sum));
}

LinearLieMap LinearLieMap::with_image(std::size_t k, SkewMatrix image) const {
  LinearLieMap copy = *this;
  copy.images_.at(k) = std::move(image);
  return copy;
}

nlohmann::json LinearLieMap::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& im : images_) out.push_back(im.to_json());
  return out;
}

SkewMatrix centralizer_gauge(const Ring& ring, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const RingElement lambda = ring.random_real_nonzero(rng);
  return SkewMatrix::trusted((ring.imaginary_unit() * lambda) * Matrix::identity(ring, n));
}

SkewMatrix random_skew(const Ring& ring, std::size_t n, Rng& rng) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) {
    const RingElement d = ring.random(rng);
    m.set(i, i, d - d.star());
    for (std::size_t j = i + 1; j <= n; ++j) {
      const RingElement r = ring.random(rng);
      m.set(i, j, r);
      m.set(j, i, -r.star());
    }
  }
  return SkewMatrix::trusted(std::move(m));
}

SpanResult span_contains(const std::vector<SkewMatrix>& generators, const SkewMatrix& x) {
  const Ring& ring = x.ring();
  const std::size_t points = solve_points(ring);
  const std::size_t g = generators.size();
  std::vector<std::vector<Rational>> per_point(points, std::vector<Rational>(g));
  for (std::size_t t = 0; t < points; ++t) {
    std::vector<std::vector<Rational>> cols;
    cols.reserve(g);
    for (const auto& gen : generators) cols.push_back(rational_coordinates(gen, t));
    const auto target = rational_coordinates(x, t);
    Echelon<Rational> system;
    for (std::size_t m = 0; m < target.size(); ++m) {
      SparseVector<Rational> row;
      for (std::size_t k = 0; k < g; ++k) {
        if (!cols[k][m].is_zero()) row.emplace(k, cols[k][m]);
      }
      if (!target[m].is_zero()) row.emplace(g, target[m]);
      if (!row.empty()) system.insert(std::move(row));
    }
    auto sol = system.solve(g);
    if (!sol) return {};
    for (const auto& [k, v] : *sol) per_point[t][k] = v;
  }
  SpanResult result{true, {}};
  for (std::size_t k = 0; k < g; ++k) {
    if (ring.kind() == RingKind::Gauss) {
      result.coefficients.emplace_back(GaussianRational(per_point[0][k]));
    } else {
      std::vector<GaussianRational> v;
      for (std::size_t t = 0; t < points; ++t) v.emplace_back(per_point[t][k]);
      result.coefficients.emplace_back(FunctionValue(std::move(v)));
    }
  }
  return result;
}

}  // namespace lieder
