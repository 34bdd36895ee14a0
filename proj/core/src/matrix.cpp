#include "lieder/matrix.hpp"

#include "lieder/error.hpp"

namespace lieder {

namespace {

void check_index(std::size_t n, std::size_t i, const char* what) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "matrix side length must be positive");
  e_.assign(n * n, ring_.zero());
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) m.set(i, i, ring.one());
  return m;
}

std::size_t Matrix::index(std::size_t i, std::size_t j) const {
  check_index(n_, i, "row");
  check_index(n_, j, "column");
  return (i - 1) * n_ + (j - 1);
}

void Matrix::set(std::size_t i, std::size_t j, RingElement value) {
  ring_.require(value);
  e_[index(i, j)] = std::move(value);
}

void Matrix::add_to(std::size_t i, std::size_t j, const RingElement& value) { e_[index(i, j)] += value; }

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::star_transpose() const {
  Matrix r(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r.e_[j * n_ + i] = e_[i * n_ + j].star();
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r.e_[j * n_ + i] = e_[i * n_ + j];
  }
  return r;
}

void Matrix::require_compatible(const Matrix& o) const {
  if (o.n_ != n_) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrices of sizes " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }
  if (!(o.ring_ == ring_)) throw Error(ErrorKind::RingMismatch, "matrices over " + ring_.name() + " and " + o.ring_.name());
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (!o.e_[k].is_zero()) e_[k] += o.e_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (!o.e_[k].is_zero()) e_[k] -= o.e_[k];
  }
  return *this;
}

Matrix& Matrix::operator*=(const RingElement& scalar) {
  ring_.require(scalar);
  for (auto& x : e_) {
    if (!x.is_zero()) x *= scalar;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  const std::size_t n = a.n_;
  Matrix r(a.ring_, n);
  if (a.ring_.kind() == RingKind::Gauss) {
    // Accumulate in place; avoids one temporary per multiply-add.
    mpq_class re;
    mpq_class im;
    mpq_class t;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        re = 0;
        im = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& x = a.e_[i * n + k].gauss();
          const auto& y = b.e_[k * n + j].gauss();
          if (x.is_zero() || y.is_zero()) continue;
          const mpq_class& xr = x.re.raw();
          const mpq_class& xi = x.im.raw();
          const mpq_class& yr = y.re.raw();
          const mpq_class& yi = y.im.raw();
          if (sgn(xr) != 0 && sgn(yr) != 0) re += (t = xr * yr);
          if (sgn(xi) != 0 && sgn(yi) != 0) re -= (t = xi * yi);
          if (sgn(xr) != 0 && sgn(yi) != 0) im += (t = xr * yi);
          if (sgn(xi) != 0 && sgn(yr) != 0) im += (t = xi * yr);
        }
        r.e_[i * n + j] = GaussianRational(Rational(re), Rational(im));
      }
    }
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a.e_[i * n + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& bkj = b.e_[k * n + j];
        if (!bkj.is_zero()) r.e_[i * n + j] += aik * bkj;
      }
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.n_ == b.n_ && a.ring_ == b.ring_ && a.e_ == b.e_;
}

nlohmann::json Matrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n_; ++j) row.push_back(e_[i * n_ + j].str());
    rows.push_back(std::move(row));
  }
  return {{"n", n_}, {"entries", std::move(rows)}};
}

Matrix Matrix::from_json(const Ring& ring, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw Error(ErrorKind::ParseError, "matrix JSON needs fields 'n' and 'entries'");
  }
  const auto n = j.at("n").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix JSON row count differs from n");
  Matrix m(ring, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "matrix JSON row " + std::to_string(r) + " has wrong length");
    }
    for (std::size_t c = 0; c < n; ++c) m.set(r + 1, c + 1, ring.parse(rows[r][c].get<std::string>()));
  }
  return m;
}

std::string Matrix::str() const { return to_json().dump(); }

std::uint64_t Matrix::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (const auto& x : e_) h = (h ^ x.hash()) * 1099511628211ULL;
  return h;
}

Matrix matrix_unit(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
  check_index(n, i, "row");
  check_index(n, j, "column");
  Matrix m(ring, n);
  m.set(i, j, ring.one());
  return m;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix corner(const Matrix& a, std::size_t i, std::size_t j) {
  Matrix r(a.ring(), a.n());
  r.set(i, j, a(i, j));
  return r;
}

Matrix block_compress(const Matrix& a, const std::set<std::size_t>& block) {
  if (block.empty()) throw Error(ErrorKind::IndexOutOfRange, "empty index set");
  for (auto t : block) check_index(a.n(), t, "block");
  Matrix r(a.ring(), a.n());
  for (auto i : block) {
    for (auto j : block) r.set(i, j, a(i, j));
  }
  return r;
}

}  // namespace lieder
