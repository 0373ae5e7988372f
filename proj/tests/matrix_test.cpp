#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ringstar/errors.hpp"
#include "ringstar/matrix.hpp"

using namespace ringstar;

namespace {
Matrix m2(const FiniteRing& R, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return Matrix::from_rows(R, {{Element{a}, Element{b}}, {Element{c}, Element{d}}});
}

Quotient mod(const FiniteRing& R, std::uint32_t g) {
  const Element e{g};
  return quotient_ring(R, ideal_closure(R, std::span<const Element>(&e, 1)));
}
}  // namespace

TEST(Matrix, DeterminantExamples) {
  const FiniteRing z4 = make_ring("Z/4");
  EXPECT_EQ(det(Matrix::identity(z4, 3)), z4.one());
  EXPECT_EQ(det(m2(z4, 3, 1, 2, 1)), Element{1});
  EXPECT_EQ(det(m2(z4, 2, 0, 0, 2)), Element{0});
}

TEST(Matrix, InverseExamples) {
  const FiniteRing z4 = make_ring("Z/4");
  EXPECT_EQ(*matrix_inverse(Matrix::identity(z4, 2)), Matrix::identity(z4, 2));
  const auto inv = matrix_inverse(m2(z4, 3, 1, 2, 1));
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, m2(z4, 1, 3, 2, 3));
  EXPECT_FALSE(matrix_inverse(m2(z4, 2, 0, 0, 2)).has_value());
  EXPECT_FALSE(is_invertible(m2(z4, 2, 0, 0, 2)));
}

TEST(Matrix, ThreeByThreeDeterminant) {
  const FiniteRing z7 = make_ring("Z/7");
  const Matrix a = Matrix::from_rows(
      z7, {{Element{2}, Element{0}, Element{1}}, {Element{1}, Element{3}, Element{2}}, {Element{1}, Element{1}, Element{1}}});
  // 2(3-2) - 0 + 1(1-3) = 0
  EXPECT_EQ(det(a), Element{0});
  EXPECT_EQ(a * adjugate(a), Matrix(z7, 3));
}

TEST(GlLift, Examples) {
  const FiniteRing z4 = make_ring("Z/4");
  const Spectrum spec = spectrum(z4);
  const Quotient q = mod(z4, 2);
  EXPECT_EQ(gl_lift(spec, q.projection, Matrix::identity(q.ring, 2)), Matrix::identity(z4, 2));
  const Matrix b = m2(q.ring, 1, 1, 0, 1);
  const Matrix lift = gl_lift(spec, q.projection, b);
  EXPECT_EQ(lift, m2(z4, 1, 1, 0, 1));
  EXPECT_EQ(det(lift), Element{1});
  const Matrix adversarial = m2(z4, 3, 1, 2, 1);
  EXPECT_EQ(adversarial.map(q.projection), b);
  EXPECT_TRUE(is_invertible(adversarial));
}

TEST(GlLift, Preconditions) {
  const FiniteRing z6 = make_ring("Z/6");
  const Quotient q = mod(z6, 2);
  EXPECT_THROW(gl_lift(spectrum(z6), q.projection, Matrix::identity(q.ring, 2)), PreconditionError);
  const FiniteRing z4 = make_ring("Z/4");
  const Quotient q4 = mod(z4, 2);
  EXPECT_THROW(gl_lift(spectrum(z4), q4.projection, m2(q4.ring, 1, 1, 1, 1)), PreconditionError);
}

TEST(TwoSidedSaturate, Examples) {
  const MatrixSpace space(make_ring("Z/2"), 2);
  const Matrix id = Matrix::identity(space.ring(), 2);
  const auto gl = two_sided_saturate(space, std::span<const Matrix>(&id, 1));
  EXPECT_EQ(gl.size(), 6u);
  for (const Matrix& m : gl) EXPECT_TRUE(is_invertible(m));
  EXPECT_TRUE(two_sided_saturate(space, {}).empty());
  std::vector<Matrix> everything;
  for (std::size_t i = 0; i < space.size(); ++i) everything.push_back(space.at(i));
  EXPECT_EQ(two_sided_saturate(space, everything).size(), space.size());
}

// W = {X} with X^2 = 1: W~ = {1, X}, and the swap matrix P has P*P = 1 in W~,
// yet no Y has PY = YP = X. Two-sided saturation is not idempotent in general.
TEST(TwoSidedSaturate, NotIdempotentForArbitrarySets) {
  const FiniteRing z2 = make_ring("Z/2");
  const MatrixSpace space(z2, 2);
  const Matrix x = m2(z2, 1, 1, 0, 1);
  const auto once = two_sided_saturate(space, std::span<const Matrix>(&x, 1));
  EXPECT_EQ(once, (std::vector<Matrix>{Matrix::identity(z2, 2), x}));
  const auto twice = two_sided_saturate(space, once);
  const Matrix swap = m2(z2, 0, 1, 1, 0);
  EXPECT_NE(std::find(twice.begin(), twice.end(), swap), twice.end());
  EXPECT_EQ(std::find(once.begin(), once.end(), swap), once.end());
}

TEST(DedekindFinite, Examples) {
  EXPECT_TRUE(dedekind_finite_check(MatrixSpace(make_ring("Z/2"), 2)));
  EXPECT_TRUE(dedekind_finite_check(MatrixSpace(make_ring("Z/3"), 2)));
  EXPECT_TRUE(dedekind_finite_check(MatrixSpace(make_ring("Z/6"), 1)));
}

TEST(MatrixSpace, GuardAndIndexing) {
  EXPECT_THROW(MatrixSpace(make_ring("Z/5"), 3), GuardError);
  const MatrixSpace space(make_ring("Z/3"), 2);
  EXPECT_EQ(space.size(), 81u);
  for (std::size_t i = 0; i < space.size(); ++i) EXPECT_EQ(space.index_of(space.at(i)), i);
}

TEST(MatrixProperty, DeterminantIsMultiplicativeOnM2Z2) {
  const MatrixSpace space(make_ring("Z/2"), 2);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      const Matrix a = space.at(i), b = space.at(j);
      EXPECT_EQ(det(a * b), space.ring().mul(det(a), det(b)));
    }
  }
}

TEST(MatrixProperty, SampledMultiplicativityAndHomCompatibility) {
  std::mt19937 rng(5);
  for (const auto& [text, gen] : {std::pair{"Z/12", 4u}, std::pair{"Z/9", 3u}, std::pair{"prod(Z/4,Z/3)", 2u}}) {
    const FiniteRing R = make_ring(text);
    const Quotient q = mod(R, gen);
    std::uniform_int_distribution<std::uint32_t> entry(0, static_cast<std::uint32_t>(R.size() - 1));
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int s = 0; s < 200; ++s) {
        Matrix a(R, n), b(R, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            a.set(i, j, Element{entry(rng)});
            b.set(i, j, Element{entry(rng)});
          }
        }
        EXPECT_EQ(det(a * b), R.mul(det(a), det(b))) << text;
        EXPECT_EQ(q.projection(det(a)), det(a.map(q.projection))) << text;
        EXPECT_EQ(is_invertible(a), R.is_unit(det(a)));
        if (auto inv = matrix_inverse(a)) {
          EXPECT_EQ(a * *inv, Matrix::identity(R, n));
          EXPECT_EQ(*inv * a, Matrix::identity(R, n));
        }
      }
    }
  }
}

TEST(MatrixProperty, EveryLiftIsInvertibleZ8ToZ2Dim3) {
  const FiniteRing z8 = make_ring("Z/8");
  const Quotient q = mod(z8, 2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint32_t> bit(0, 1), pick(0, 3);
  int done = 0;
  while (done < 300) {
    Matrix b(q.ring, 3);
    for (std::size_t k = 0; k < 9; ++k) b.set(k / 3, k % 3, Element{bit(rng)});
    if (!is_invertible(b)) continue;
    ++done;
    Matrix lift(z8, 3);
    for (std::size_t k = 0; k < 9; ++k) lift.set(k / 3, k % 3, q.projection.preimages(b(k / 3, k % 3))[pick(rng)]);
    EXPECT_TRUE(is_invertible(lift));
  }
}
