#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ringstar/hom.hpp"
#include "ringstar/spectrum.hpp"

namespace ringstar {

/// Square matrix over a FiniteRing, row-major.
class Matrix {
 public:
  Matrix(FiniteRing ring, std::size_t dim);

  static Matrix identity(const FiniteRing& ring, std::size_t dim);
  static Matrix from_rows(const FiniteRing& ring,
                          const std::vector<std::vector<Element>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const FiniteRing& ring() const noexcept { return ring_; }

  Element operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  void set(std::size_t row, std::size_t col, Element value) { entries_[row * dim_ + col] = value; }
  std::span<const Element> entries() const noexcept { return entries_; }

  /// Entrywise image under a homomorphism out of this matrix's ring.
  Matrix map(const SurjectiveHom& hom) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  FiniteRing ring_;
  std::size_t dim_;
  std::vector<Element> entries_;
};

/// Cofactor expansion along the first row.
Element det(const Matrix& a);
Matrix adjugate(const Matrix& a);

/// (det A)^{-1} adj(A) when det A is a unit, certified as a two-sided inverse.
std::optional<Matrix> matrix_inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Entrywise minimal-index lift of B along p, whose kernel must lie in rad(source).
/// Every lift of an invertible matrix is invertible in that situation; a non-invertible
/// lift raises DefectError.
Matrix gl_lift(const Spectrum& source, const SurjectiveHom& projection, const Matrix& b,
               const Limits& limits = {});

/// M_n(R) enumerated by base-|R| digits of the entries, first entry least significant.
class MatrixSpace {
 public:
  MatrixSpace(FiniteRing ring, std::size_t dim, const Limits& limits = {});

  const FiniteRing& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return size_; }

  Matrix at(std::size_t index) const;
  std::size_t index_of(const Matrix& m) const;

 private:
  FiniteRing ring_;
  std::size_t dim_;
  std::size_t size_;
};

/// {X : XY and YX in W for some Y}.
std::vector<Matrix> two_sided_saturate(const MatrixSpace& space, std::span<const Matrix> w);

/// XY = 1 implies YX = 1, exhaustively.
bool dedekind_finite_check(const MatrixSpace& space);

}  // namespace ringstar
