#include <gtest/gtest.h>

#include "lieder/error.hpp"
#include "lieder/lie.hpp"
#include "lieder/matrix.hpp"

namespace lieder {
namespace {

const Ring kGauss = Ring::gauss();

Matrix random_matrix(const Ring& ring, std::size_t n, Rng& rng) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) m.set(i, j, ring.random(rng));
  }
  return m;
}

TEST(MatrixUnit, Definition) {
  const Matrix e = matrix_unit(kGauss, 2, 1, 1);
  EXPECT_EQ(e(1, 1), kGauss.one());
  EXPECT_TRUE(e(1, 2).is_zero());
  EXPECT_TRUE(e(2, 1).is_zero());
  EXPECT_TRUE(e(2, 2).is_zero());
  EXPECT_THROW(matrix_unit(kGauss, 2, 0, 1), Error);
  EXPECT_THROW(matrix_unit(kGauss, 2, 1, 3), Error);
}

TEST(MatrixUnit, Products) {
  EXPECT_EQ(matrix_unit(kGauss, 3, 1, 2) * matrix_unit(kGauss, 3, 2, 3), matrix_unit(kGauss, 3, 1, 3));
  EXPECT_TRUE((matrix_unit(kGauss, 3, 1, 2) * matrix_unit(kGauss, 3, 3, 1)).is_zero());
}

TEST(StarTranspose, Examples) {
  EXPECT_EQ(matrix_unit(kGauss, 3, 1, 2).star_transpose(), matrix_unit(kGauss, 3, 2, 1));
  const Matrix ie = kGauss.imaginary_unit() * matrix_unit(kGauss, 3, 1, 1);
  EXPECT_EQ(ie.star_transpose(), -ie);
  const Matrix s = s_elem(kGauss, 3, 1, 2).matrix();
  EXPECT_EQ(s.star_transpose(), -s);
}

TEST(StarTranspose, InvolutiveAntiAutomorphism) {
  Rng rng(21);
  for (const Ring& r : {Ring::gauss(), Ring::function(2)}) {
    for (int k = 0; k < 20; ++k) {
      const Matrix a = random_matrix(r, 3, rng);
      const Matrix b = random_matrix(r, 3, rng);
      EXPECT_EQ(a.star_transpose().star_transpose(), a);
      EXPECT_EQ((a * b).star_transpose(), b.star_transpose() * a.star_transpose());
    }
  }
}

TEST(Bracket, Examples) {
  const SkewMatrix s12 = s_elem(kGauss, 3, 1, 2);
  const SkewMatrix s23 = s_elem(kGauss, 3, 2, 3);
  EXPECT_EQ(bracket(s12, s23), s_elem(kGauss, 3, 1, 3));
  EXPECT_TRUE(bracket(s12, s12).is_zero());
  EXPECT_EQ(bracket(ie_diag(kGauss, 3, 1), s12), ebar_i_elem(kGauss, 3, 1, 2));
  EXPECT_THROW(bracket(Matrix(kGauss, 2), Matrix(kGauss, 3)), Error);
  EXPECT_THROW(bracket(Matrix(kGauss, 2), Matrix(Ring::function(2), 2)), Error);
}

TEST(Bracket, JacobiAndAntisymmetryAllRings) {
  Rng rng(31);
  auto vars = std::make_shared<const VariableInvolution>(VariableInvolution::paired(4));
  for (const Ring& r : {Ring::gauss(), Ring::function(3), Ring::polynomial(vars)}) {
    for (int k = 0; k < 10; ++k) {
      const Matrix a = random_matrix(r, 3, rng);
      const Matrix b = random_matrix(r, 3, rng);
      const Matrix c = random_matrix(r, 3, rng);
      const Matrix jacobi = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
      EXPECT_TRUE(jacobi.is_zero()) << r.name();
      EXPECT_EQ(bracket(a, b), -bracket(b, a));
    }
  }
}

TEST(Bracket, ClosedOnSkewAdjoint) {
  Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    const SkewMatrix a = random_skew(kGauss, 4, rng);
    const SkewMatrix b = random_skew(kGauss, 4, rng);
    EXPECT_TRUE(is_skew_adjoint(bracket(a.matrix(), b.matrix())));
  }
}

TEST(Corner, Examples) {
  const Matrix s12 = s_elem(kGauss, 3, 1, 2).matrix();
  EXPECT_EQ(corner(s12, 1, 2), matrix_unit(kGauss, 3, 1, 2));
  EXPECT_TRUE(corner(s12, 1, 1).is_zero());
  EXPECT_EQ(corner(x_o(kGauss, 3).matrix(), 2, 3), matrix_unit(kGauss, 3, 2, 3));
  EXPECT_EQ(corner(x_o(kGauss, 5).matrix(), 2, 3), matrix_unit(kGauss, 5, 2, 3));
  EXPECT_THROW(corner(s12, 4, 1), Error);
}

TEST(Corner, ReassemblesMatrix) {
  Rng rng(51);
  const Matrix a = random_matrix(Ring::function(2), 4, rng);
  Matrix sum(a.ring(), 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) sum += corner(a, i, j);
  }
  EXPECT_EQ(sum, a);
}

TEST(BlockCompress, Examples) {
  Rng rng(61);
  const Matrix a = random_matrix(kGauss, 3, rng);
  EXPECT_EQ(block_compress(a, {1, 2, 3}), a);
  const Matrix s12 = s_elem(kGauss, 3, 1, 2).matrix();
  EXPECT_EQ(block_compress(s12, {1, 2}), s12);
  EXPECT_TRUE(block_compress(s_elem(kGauss, 3, 1, 3).matrix(), {1, 2}).is_zero());
  EXPECT_THROW(block_compress(a, {}), Error);
  EXPECT_THROW(block_compress(a, {4}), Error);
}

TEST(BlockCompress, Idempotent) {
  Rng rng(71);
  const Matrix a = random_matrix(kGauss, 4, rng);
  const Matrix once = block_compress(a, {1, 3});
  EXPECT_EQ(block_compress(once, {1, 3}), once);
  EXPECT_EQ(once(1, 3), a(1, 3));
  EXPECT_TRUE(once(2, 2).is_zero());
}

TEST(Matrix, JsonRoundTrip) {
  Rng rng(81);
  for (const Ring& r : {Ring::gauss(), Ring::function(2)}) {
    const Matrix a = random_matrix(r, 3, rng);
    const auto j = a.to_json();
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["entries"].size(), 3U);
    EXPECT_EQ(Matrix::from_json(r, j), a);
  }
}

TEST(Matrix, JsonLayoutIsRowMajorZeroBased) {
  const auto j = matrix_unit(kGauss, 2, 1, 2).to_json();
  EXPECT_EQ(j["entries"][0][1], "1");
  EXPECT_EQ(j["entries"][1][0], "0");
}

}  // namespace
}  // namespace lieder
