#include "ringstar/matrix.hpp"

#include "ringstar/errors.hpp"

namespace ringstar {

Matrix::Matrix(FiniteRing ring, std::size_t dim)
    : ring_(std::move(ring)), dim_(dim), entries_(dim * dim, Element{0}) {
  if (dim == 0) throw PreconditionError("matrix dimension must be at least 1");
}

Matrix Matrix::identity(const FiniteRing& ring, std::size_t dim) {
  Matrix m(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, ring.one());
  return m;
}

Matrix Matrix::from_rows(const FiniteRing& ring, const std::vector<std::vector<Element>>& rows) {
  Matrix m(ring, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw PreconditionError("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::map(const SurjectiveHom& hom) const {
  if (!hom.source().same_as(ring_)) throw PreconditionError("homomorphism source mismatch");
  Matrix out(hom.target(), dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = hom(entries_[k]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_ || !a.ring_.same_as(b.ring_)) {
    throw PreconditionError("matrix product of incompatible operands");
  }
  const FiniteRing& R = a.ring_;
  Matrix out(R, a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) {
      Element acc = R.zero();
      for (std::size_t k = 0; k < a.dim_; ++k) acc = R.add(acc, R.mul(a(i, k), b(k, j)));
      out.set(i, j, acc);
    }
  }
  return out;
}

namespace {

Matrix minor_of(const Matrix& a, std::size_t skip_row, std::size_t skip_col) {
  Matrix m(a.ring(), a.dim() - 1);
  for (std::size_t i = 0, r = 0; i < a.dim(); ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < a.dim(); ++j) {
      if (j == skip_col) continue;
      m.set(r, c++, a(i, j));
    }
    ++r;
  }
  return m;
}

}  // namespace

Element det(const Matrix& a) {
  const FiniteRing& R = a.ring();
  if (a.dim() == 1) return a(0, 0);
  Element acc = R.zero();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Element term = R.mul(a(0, j), det(minor_of(a, 0, j)));
    acc = j % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

Matrix adjugate(const Matrix& a) {
  const FiniteRing& R = a.ring();
  Matrix out(R, a.dim());
  if (a.dim() == 1) {
    out.set(0, 0, R.one());
    return out;
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Element cofactor = det(minor_of(a, j, i));
      out.set(i, j, (i + j) % 2 == 0 ? cofactor : R.neg(cofactor));
    }
  }
  return out;
}

std::optional<Matrix> matrix_inverse(const Matrix& a) {
  const FiniteRing& R = a.ring();
  const auto d_inv = R.inverse(det(a));
  if (!d_inv) return std::nullopt;
  Matrix inv = adjugate(a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) inv.set(i, j, R.mul(*d_inv, inv(i, j)));
  }
  const Matrix id = Matrix::identity(R, a.dim());
  if (!(a * inv == id) || !(inv * a == id)) {
    throw DefectError("adjugate inverse failed certification over " + R.spec().to_string());
  }
  return inv;
}

bool is_invertible(const Matrix& a) { return matrix_inverse(a).has_value(); }

Matrix gl_lift(const Spectrum& source, const SurjectiveHom& projection, const Matrix& b,
               const Limits& limits) {
  if (!projection.source().same_as(source.ring)) throw PreconditionError("projection source mismatch");
  if (!b.ring().same_as(projection.target())) throw PreconditionError("matrix is not over the target");
  if (b.dim() > limits.max_matrix_dim) {
    throw GuardError("matrix dimension " + std::to_string(b.dim()) + " exceeds guard");
  }
  if (!projection.kernel().is_subset_of(source.radical)) {
    throw PreconditionError("kernel is not contained in the Jacobson radical");
  }
  if (!projection.target().is_unit(det(b))) throw PreconditionError("matrix is not invertible");

  Matrix lift(source.ring, b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) lift.set(i, j, projection.min_preimage(b(i, j)));
  }
  if (!is_invertible(lift)) {
    throw DefectError("lift of an invertible matrix along a radical kernel is not invertible");
  }
  return lift;
}

MatrixSpace::MatrixSpace(FiniteRing ring, std::size_t dim, const Limits& limits)
    : ring_(std::move(ring)), dim_(dim), size_(1) {
  if (dim == 0 || dim > limits.max_matrix_dim) {
    throw GuardError("matrix dimension " + std::to_string(dim) + " outside guard");
  }
  for (std::size_t k = 0; k < dim * dim; ++k) {
    size_ *= ring_.size();
    if (size_ > limits.max_matrix_space) {
      throw GuardError("matrix space exceeds scan guard " + std::to_string(limits.max_matrix_space));
    }
  }
}

Matrix MatrixSpace::at(std::size_t index) const {
  Matrix m(ring_, dim_);
  for (std::size_t k = 0; k < dim_ * dim_; ++k) {
    m.set(k / dim_, k % dim_, Element{static_cast<std::uint32_t>(index % ring_.size())});
    index /= ring_.size();
  }
  return m;
}

std::size_t MatrixSpace::index_of(const Matrix& m) const {
  std::size_t index = 0;
  const auto entries = m.entries();
  for (std::size_t k = entries.size(); k-- > 0;) index = index * ring_.size() + entries[k].index;
  return index;
}

namespace {

/// Entry arrays for every matrix in the space, with a product that stays off the heap
/// in the inner loops.
class FlatSpace {
 public:
  explicit FlatSpace(const MatrixSpace& space)
      : ring_(space.ring()), n_(space.dim()), cells_(n_ * n_) {
    flat_.reserve(space.size() * cells_);
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t k = 0; k < cells_; ++k) {
        flat_.push_back(Element{static_cast<std::uint32_t>(rest % ring_.size())});
        rest /= ring_.size();
      }
    }
    identity_ = space.index_of(Matrix::identity(ring_, n_));
  }

  std::size_t identity() const noexcept { return identity_; }

  std::size_t product(std::size_t x, std::size_t y) const {
    const Element* a = &flat_[x * cells_];
    const Element* b = &flat_[y * cells_];
    std::size_t index = 0;
    for (std::size_t k = cells_; k-- > 0;) {
      const std::size_t i = k / n_;
      const std::size_t j = k % n_;
      Element acc = ring_.zero();
      for (std::size_t t = 0; t < n_; ++t) acc = ring_.add(acc, ring_.mul(a[i * n_ + t], b[t * n_ + j]));
      index = index * ring_.size() + acc.index;
    }
    return index;
  }

 private:
  const FiniteRing& ring_;
  std::size_t n_;
  std::size_t cells_;
  std::vector<Element> flat_;
  std::size_t identity_ = 0;
};

}  // namespace

std::vector<Matrix> two_sided_saturate(const MatrixSpace& space, std::span<const Matrix> w) {
  std::vector<bool> in_w(space.size(), false);
  for (const Matrix& m : w) in_w[space.index_of(m)] = true;
  std::vector<Matrix> out;
  if (w.empty()) return out;
  const FlatSpace flat(space);
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (in_w[flat.product(x, y)] && in_w[flat.product(y, x)]) {
        out.push_back(space.at(x));
        break;
      }
    }
  }
  return out;
}

bool dedekind_finite_check(const MatrixSpace& space) {
  const FlatSpace flat(space);
  const std::size_t id = flat.identity();
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (flat.product(x, y) == id && flat.product(y, x) != id) return false;
    }
  }
  return true;
}

}  // namespace ringstar
