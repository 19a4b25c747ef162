#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hf/scalar.hpp"

namespace hf {

using Index = std::int64_t;

// Tensor basis convention, fixed globally: the first factor is the slow index.
inline Index tensor_index(Index i, Index j, Index dim_second) {
  return i * dim_second + j;
}
inline std::pair<Index, Index> tensor_split(Index k, Index dim_second) {
  return {k / dim_second, k % dim_second};
}

// Sparse vector: sorted (index, coefficient) pairs, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<Index, Scalar>;

  SparseVec() : dim_(0) {}
  explicit SparseVec(Index dim) : dim_(dim) {}
  static SparseVec basis(Index dim, Index i, Scalar c = Scalar(1));

  Index dim() const { return dim_; }
  size_t nnz() const { return ents_.size(); }
  bool is_zero() const { return ents_.empty(); }
  const std::vector<Entry>& entries() const { return ents_; }

  Scalar get(Index i) const;
  void set(Index i, const Scalar& c);
  void add(Index i, const Scalar& c);
  // this += c * v
  void add_scaled(const SparseVec& v, const Scalar& c);
  SparseVec scaled(const Scalar& c) const;
  SparseVec conjugated() const;

  SparseVec& operator+=(const SparseVec& v);
  SparseVec& operator-=(const SparseVec& v);
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }

  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    return a.dim_ == b.dim_ && a.ents_ == b.ents_;
  }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

  // u in A, v in B -> u (x) v in A (x) B.
  static SparseVec tensor(const SparseVec& u, const SparseVec& v);

 private:
  Index dim_;
  std::vector<Entry> ents_;
  friend class VecBuilder;
};

// Accumulator that tolerates out-of-order, repeated indices; emits a canonical
// SparseVec at the end.
class VecBuilder {
 public:
  explicit VecBuilder(Index dim) : dim_(dim) {}
  void add(Index i, const Scalar& c) {
    if (!c.is_zero()) ents_.emplace_back(i, c);
  }
  void add_scaled(const SparseVec& v, const Scalar& c);
  SparseVec take();

 private:
  Index dim_;
  std::vector<SparseVec::Entry> ents_;
};

// Sparse matrix stored by columns; the column j is the image of basis vector j.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), col_(cols, SparseVec(rows)) {}
  static SparseMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const SparseVec& column(Index j) const { return col_[j]; }
  void set_column(Index j, SparseVec v);
  void set(Index r, Index c, const Scalar& x) { col_[c].set(r, x); }
  Scalar get(Index r, Index c) const { return col_[c].get(r); }
  size_t nnz() const;

  SparseVec apply(const SparseVec& v) const;
  // this . inner (i.e. apply inner first).
  SparseMatrix compose(const SparseMatrix& inner) const;
  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

 private:
  Index rows_, cols_;
  std::vector<SparseVec> col_;
};

// Bilinear pairing sum_i a_i b_i (no conjugation).
Scalar dot(const SparseVec& a, const SparseVec& b);

// Row space in reduced echelon form. Insertion keeps the unique RREF of the
// span, so reduce() and the pivot set are canonical regardless of insertion
// order.
class RowSpace {
 public:
  void insert(SparseVec r);
  // Canonical representative of r modulo the span (zero iff r is in the span).
  SparseVec reduce(SparseVec r) const;
  bool contains(const SparseVec& r) const { return reduce(r).is_zero(); }
  Index rank() const { return static_cast<Index>(pivots_.size()); }
  std::vector<Index> pivot_columns() const;
  const std::vector<std::pair<Index, SparseVec>>& pivots() const { return pivots_; }

 private:
  const SparseVec* row_for(Index col) const;
  std::vector<std::pair<Index, SparseVec>> pivots_;  // sorted by pivot column
};

// (f (x) g) v without materialising the Kronecker product. v lives in A (x) B
// where f: A -> A', g: B -> B'.
SparseVec apply_kron(const SparseMatrix& f, const SparseMatrix& g, const SparseVec& v);

// Explicit Kronecker product (for small maps).
SparseMatrix kron(const SparseMatrix& f, const SparseMatrix& g);

// Exact rank over Q(i). Dense fraction-free elimination for small matrices,
// sparse elimination for large ones; both paths are exposed for testing.
Index rank(const SparseMatrix& m);
namespace detail {
Index rank_dense(const SparseMatrix& m);
Index rank_sparse(const SparseMatrix& m);
}  // namespace detail

// Deterministic basis of the right null space {x : m x = 0}, one vector per
// free column of the reduced echelon form, in ascending column order.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

// Unique solution of m x = b, if it exists and is unique.
std::optional<SparseVec> solve_unique(const SparseMatrix& m, const SparseVec& b);

// Rank of the span of a list of vectors (all of the same dimension).
Index span_rank(const std::vector<SparseVec>& vecs);

}  // namespace hf
