#include "hf/sparse.hpp"

#include <algorithm>

#include "hf/gaussian_int.hpp"

namespace hf {

SparseVec SparseVec::basis(Index dim, Index i, Scalar c) {
  SparseVec v(dim);
  v.set(i, c);
  return v;
}

Scalar SparseVec::get(Index i) const {
  auto it = std::lower_bound(ents_.begin(), ents_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != ents_.end() && it->first == i) return it->second;
  return Scalar();
}

void SparseVec::set(Index i, const Scalar& c) {
  auto it = std::lower_bound(ents_.begin(), ents_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != ents_.end() && it->first == i) {
    if (c.is_zero())
      ents_.erase(it);
    else
      it->second = c;
  } else if (!c.is_zero()) {
    ents_.insert(it, {i, c});
  }
}

void SparseVec::add(Index i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(ents_.begin(), ents_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != ents_.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) ents_.erase(it);
  } else {
    ents_.insert(it, {i, c});
  }
}

void SparseVec::add_scaled(const SparseVec& v, const Scalar& c) {
  if (c.is_zero() || v.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(ents_.size() + v.ents_.size());
  auto a = ents_.begin();
  auto b = v.ents_.begin();
  while (a != ents_.end() || b != v.ents_.end()) {
    if (b == v.ents_.end() || (a != ents_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == ents_.end() || b->first < a->first) {
      Scalar x = c * b->second;
      if (!x.is_zero()) out.emplace_back(b->first, std::move(x));
      ++b;
    } else {
      Scalar x = a->second + c * b->second;
      if (!x.is_zero()) out.emplace_back(a->first, std::move(x));
      ++a;
      ++b;
    }
  }
  ents_ = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec out(dim_);
  if (c.is_zero()) return out;
  out.ents_.reserve(ents_.size());
  for (const auto& [i, x] : ents_) {
    Scalar y = c * x;
    if (!y.is_zero()) out.ents_.emplace_back(i, std::move(y));
  }
  return out;
}

SparseVec SparseVec::conjugated() const {
  SparseVec out(dim_);
  out.ents_.reserve(ents_.size());
  for (const auto& [i, x] : ents_) out.ents_.emplace_back(i, x.conj());
  return out;
}

SparseVec& SparseVec::operator+=(const SparseVec& v) {
  add_scaled(v, Scalar(1));
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& v) {
  add_scaled(v, Scalar(-1));
  return *this;
}

SparseVec SparseVec::tensor(const SparseVec& u, const SparseVec& v) {
  SparseVec out(u.dim() * v.dim());
  out.ents_.reserve(u.nnz() * v.nnz());
  for (const auto& [i, a] : u.entries())
    for (const auto& [j, b] : v.entries()) {
      Scalar c = a * b;
      if (!c.is_zero()) out.ents_.emplace_back(tensor_index(i, j, v.dim()), std::move(c));
    }
  // u's entries are sorted and the j-block is contiguous, so out is sorted.
  return out;
}

void VecBuilder::add_scaled(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v.entries()) {
    Scalar y = c * x;
    if (!y.is_zero()) ents_.emplace_back(i, std::move(y));
  }
}

SparseVec VecBuilder::take() {
  std::sort(ents_.begin(), ents_.end(),
            [](const SparseVec::Entry& a, const SparseVec::Entry& b) { return a.first < b.first; });
  SparseVec out(dim_);
  out.ents_.reserve(ents_.size());
  for (auto& [i, c] : ents_) {
    if (!out.ents_.empty() && out.ents_.back().first == i) {
      out.ents_.back().second += c;
      if (out.ents_.back().second.is_zero()) out.ents_.pop_back();
    } else if (!c.is_zero()) {
      out.ents_.emplace_back(i, std::move(c));
    }
  }
  ents_.clear();
  return out;
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.col_[i].set(i, Scalar(1));
  return m;
}

void SparseMatrix::set_column(Index j, SparseVec v) {
  if (v.dim() != rows_) throw Error("SparseMatrix: column dimension mismatch");
  col_[j] = std::move(v);
}

size_t SparseMatrix::nnz() const {
  size_t n = 0;
  for (const auto& c : col_) n += c.nnz();
  return n;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  if (v.dim() != cols_) throw Error("SparseMatrix: apply dimension mismatch");
  VecBuilder out(rows_);
  for (const auto& [j, c] : v.entries()) out.add_scaled(col_[j], c);
  return out.take();
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& inner) const {
  if (inner.rows() != cols_) throw Error("SparseMatrix: compose dimension mismatch");
  SparseMatrix out(rows_, inner.cols());
  for (Index j = 0; j < inner.cols(); ++j) out.col_[j] = apply(inner.column(j));
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows_);
  std::vector<VecBuilder> rows;
  rows.reserve(rows_);
  for (Index r = 0; r < rows_; ++r) rows.emplace_back(cols_);
  for (Index j = 0; j < cols_; ++j)
    for (const auto& [i, c] : col_[j].entries()) rows[i].add(j, c);
  for (Index r = 0; r < rows_; ++r) out.col_[r] = rows[r].take();
  return out;
}

SparseVec apply_kron(const SparseMatrix& f, const SparseMatrix& g, const SparseVec& v) {
  if (v.dim() != f.cols() * g.cols()) throw Error("apply_kron: dimension mismatch");
  VecBuilder out(f.rows() * g.rows());
  for (const auto& [k, c] : v.entries()) {
    auto [i, j] = tensor_split(k, g.cols());
    for (const auto& [r, a] : f.column(i).entries())
      for (const auto& [s, b] : g.column(j).entries())
        out.add(tensor_index(r, s, g.rows()), c * a * b);
  }
  return out.take();
}

SparseMatrix kron(const SparseMatrix& f, const SparseMatrix& g) {
  SparseMatrix out(f.rows() * g.rows(), f.cols() * g.cols());
  for (Index i = 0; i < f.cols(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      out.set_column(tensor_index(i, j, g.cols()),
                     SparseVec::tensor(f.column(i), g.column(j)));
  return out;
}

namespace {

// Rows of m as sparse vectors (row r has dimension cols).
std::vector<SparseVec> row_view(const SparseMatrix& m) {
  std::vector<VecBuilder> rows;
  rows.reserve(m.rows());
  for (Index r = 0; r < m.rows(); ++r) rows.emplace_back(m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.column(j).entries()) rows[i].add(j, c);
  std::vector<SparseVec> out;
  out.reserve(m.rows());
  for (auto& b : rows) out.push_back(b.take());
  return out;
}

}  // namespace

Scalar dot(const SparseVec& a, const SparseVec& b) {
  Scalar acc;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

const SparseVec* RowSpace::row_for(Index col) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col,
                             [](const auto& p, Index c) { return p.first < c; });
  if (it != pivots_.end() && it->first == col) return &it->second;
  return nullptr;
}

SparseVec RowSpace::reduce(SparseVec r) const {
  // Single pass suffices: pivot rows vanish on the other pivot columns.
  VecBuilder acc(r.dim());
  acc.add_scaled(r, Scalar(1));
  bool touched = false;
  for (const auto& [c, v] : r.entries()) {
    if (const SparseVec* p = row_for(c)) {
      acc.add_scaled(*p, -v);
      touched = true;
    }
  }
  return touched ? acc.take() : r;
}

void RowSpace::insert(SparseVec r) {
  r = reduce(std::move(r));
  if (r.is_zero()) return;
  Index lead = r.entries().front().first;
  Scalar inv = r.entries().front().second.inv();
  r = r.scaled(inv);
  for (auto& [c, p] : pivots_) {
    (void)c;
    Scalar at = p.get(lead);
    if (!at.is_zero()) p.add_scaled(r, -at);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                             [](const auto& p, Index c) { return p.first < c; });
  pivots_.insert(it, {lead, std::move(r)});
}

std::vector<Index> RowSpace::pivot_columns() const {
  std::vector<Index> out;
  out.reserve(pivots_.size());
  for (const auto& p : pivots_) out.push_back(p.first);
  return out;
}

namespace {

RowSpace rref_of_rows(const std::vector<SparseVec>& rows) {
  RowSpace r;
  for (const auto& row : rows) r.insert(row);
  return r;
}

}  // namespace

namespace detail {

// Fraction-free Bareiss elimination over Z[i]: rows are scaled to Gaussian
// integer entries first, then the two-term update keeps every intermediate
// value an exact minor.
Index rank_dense(const SparseMatrix& m) {
  const Index R = m.rows(), C = m.cols();
  std::vector<std::vector<Scalar>> q(R, std::vector<Scalar>(C));
  for (Index j = 0; j < C; ++j)
    for (const auto& [i, c] : m.column(j).entries()) q[i][j] = c;

  // Scale each row by the lcm of its denominators so entries lie in Z[i].
  std::vector<std::vector<Gint>> a(R, std::vector<Gint>(C));
  for (Index i = 0; i < R; ++i) {
    mpz_class lcm(1);
    for (Index j = 0; j < C; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q[i][j].re().get_den().get_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q[i][j].im().get_den().get_mpz_t());
    }
    for (Index j = 0; j < C; ++j) {
      mpq_class re = q[i][j].re() * lcm, im = q[i][j].im() * lcm;
      a[i][j] = Gint(re.get_num(), im.get_num());
    }
  }

  Index rank = 0;
  Gint prev(1, 0);
  for (Index col = 0; col < C && rank < R; ++col) {
    Index piv = -1;
    for (Index i = rank; i < R; ++i)
      if (!a[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    const Gint p = a[rank][col];
    for (Index i = rank + 1; i < R; ++i) {
      for (Index j = col + 1; j < C; ++j)
        a[i][j] = gint_exact_div(a[i][j] * p - a[i][col] * a[rank][j], prev);
      a[i][col] = Gint(0, 0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

Index rank_sparse(const SparseMatrix& m) {
  // Forward echelon on the columns (rank of the transpose equals the rank).
  std::vector<std::pair<Index, SparseVec>> pivots;  // sorted by leading index
  auto find = [&](Index lead) -> SparseVec* {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), lead,
                               [](const auto& p, Index c) { return p.first < c; });
    if (it != pivots.end() && it->first == lead) return &it->second;
    return nullptr;
  };
  for (Index j = 0; j < m.cols(); ++j) {
    SparseVec r = m.column(j);
    while (!r.is_zero()) {
      Index lead = r.entries().front().first;
      SparseVec* p = find(lead);
      if (!p) {
        auto it = std::lower_bound(pivots.begin(), pivots.end(), lead,
                                   [](const auto& q, Index c) { return q.first < c; });
        pivots.insert(it, {lead, std::move(r)});
        break;
      }
      Scalar f = r.entries().front().second / p->entries().front().second;
      r.add_scaled(*p, -f);
    }
  }
  return static_cast<Index>(pivots.size());
}

}  // namespace detail

Index rank(const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() <= 512 && m.cols() <= 512) return detail::rank_dense(m);
  return detail::rank_sparse(m);
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  RowSpace r = rref_of_rows(row_view(m));
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& p : r.pivots()) is_pivot[p.first] = true;
  std::vector<SparseVec> out;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v(m.cols());
    v.set(f, Scalar(1));
    for (const auto& [c, row] : r.pivots()) {
      Scalar x = row.get(f);
      if (!x.is_zero()) v.set(c, -x);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<SparseVec> solve_unique(const SparseMatrix& m, const SparseVec& b) {
  if (b.dim() != m.rows()) throw Error("solve_unique: dimension mismatch");
  const Index C = m.cols();
  std::vector<SparseVec> rows = row_view(m);
  for (Index i = 0; i < m.rows(); ++i) {
    SparseVec aug(C + 1);
    for (const auto& [j, c] : rows[i].entries()) aug.set(j, c);
    Scalar bi = b.get(i);
    if (!bi.is_zero()) aug.set(C, bi);
    rows[i] = std::move(aug);
  }
  RowSpace r = rref_of_rows(rows);
  for (const auto& p : r.pivots())
    if (p.first == C) return std::nullopt;  // inconsistent
  if (static_cast<Index>(r.pivots().size()) != C) return std::nullopt;  // not unique
  SparseVec x(C);
  for (const auto& [c, row] : r.pivots()) {
    Scalar v = row.get(C);
    if (!v.is_zero()) x.set(c, v);
  }
  return x;
}

Index span_rank(const std::vector<SparseVec>& vecs) {
  RowSpace r = rref_of_rows(vecs);
  return static_cast<Index>(r.pivots().size());
}

}  // namespace hf
