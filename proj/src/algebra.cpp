#include "hf/algebra.hpp"

#include <algorithm>
#include <map>

namespace hf {

SparseVec StarAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
  VecBuilder out(dim);
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries()) out.add_scaled(mul_basis(i, j), a * b);
  return out.take();
}

Index StarAlgebra::label_index(const std::string& label) const {
  for (Index i = 0; i < dim; ++i)
    if (labels[i] == label) return i;
  throw Error("StarAlgebra: no basis element labelled '" + label + "'");
}

SparseMatrix StarAlgebra::left_mult_matrix(const SparseVec& x) const {
  SparseMatrix m(dim, dim);
  for (Index j = 0; j < dim; ++j) m.set_column(j, mul(x, basis(j)));
  return m;
}

SparseMatrix StarAlgebra::multiplication_matrix() const {
  SparseMatrix m(dim, dim * dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) m.set_column(tensor_index(i, j, dim), mul_basis(i, j));
  return m;
}

namespace {

// Associativity of (e_i e_j) e_k vs e_i (e_j e_k) with an allocation-free path
// for the dominant case of single-term products with coefficient one.
bool assoc_triple(const StarAlgebra& A, Index i, Index j, Index k) {
  const SparseVec& ij = A.mul_basis(i, j);
  const SparseVec& jk = A.mul_basis(j, k);
  if (ij.nnz() == 1 && jk.nnz() == 1) {
    const auto& [a, c] = ij.entries()[0];
    const auto& [b, d] = jk.entries()[0];
    if (c.is_one() && d.is_one()) return A.mul_basis(a, k) == A.mul_basis(i, b);
  }
  VecBuilder lhs(A.dim), rhs(A.dim);
  for (const auto& [a, c] : ij.entries()) lhs.add_scaled(A.mul_basis(a, k), c);
  for (const auto& [b, d] : jk.entries()) rhs.add_scaled(A.mul_basis(i, b), d);
  return lhs.take() == rhs.take();
}

}  // namespace

Report StarAlgebra::validate() const {
  Report rep;
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < dim && ok; ++i)
      for (Index j = 0; j < dim && ok; ++j)
        for (Index k = 0; k < dim; ++k)
          if (!assoc_triple(*this, i, j, k)) {
            ok = false;
            w = labels[i] + ", " + labels[j] + ", " + labels[k];
            break;
          }
    rep.add("algebra_assoc", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < dim; ++i) {
      SparseVec e = basis(i);
      if (mul(unit, e) != e || mul(e, unit) != e) {
        ok = false;
        w = labels[i];
        break;
      }
    }
    rep.add("algebra_unit", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < dim; ++i)
      if (star_of(star_of(basis(i))) != basis(i)) {
        ok = false;
        w = labels[i];
        break;
      }
    rep.add("star_involution", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < dim && ok; ++i)
      for (Index j = 0; j < dim; ++j)
        if (star_of(mul_basis(i, j)) != mul(star_of(basis(j)), star_of(basis(i)))) {
          ok = false;
          w = labels[i] + ", " + labels[j];
          break;
        }
    rep.add("star_antimult", ok, w);
  }
  return rep;
}

SparseVec tensor_mul(const StarAlgebra& a, const StarAlgebra& b, const SparseVec& x,
                     const SparseVec& y) {
  VecBuilder out(a.dim * b.dim);
  for (const auto& [p, c] : x.entries()) {
    auto [i1, j1] = tensor_split(p, b.dim);
    for (const auto& [q, d] : y.entries()) {
      auto [i2, j2] = tensor_split(q, b.dim);
      const SparseVec& u = a.mul_basis(i1, i2);
      const SparseVec& v = b.mul_basis(j1, j2);
      if (u.is_zero() || v.is_zero()) continue;
      Scalar cd = c * d;
      for (const auto& [r, cu] : u.entries())
        for (const auto& [s, cv] : v.entries())
          out.add(tensor_index(r, s, b.dim), cd * cu * cv);
    }
  }
  return out.take();
}

SparseVec tensor_star(const StarAlgebra& a, const StarAlgebra& b, const SparseVec& x) {
  VecBuilder out(a.dim * b.dim);
  for (const auto& [p, c] : x.entries()) {
    auto [i, j] = tensor_split(p, b.dim);
    const SparseVec u = a.star_of(a.basis(i));
    const SparseVec v = b.star_of(b.basis(j));
    for (const auto& [r, cu] : u.entries())
      for (const auto& [s, cv] : v.entries())
        out.add(tensor_index(r, s, b.dim), c.conj() * cu * cv);
  }
  return out.take();
}

std::string pretty(const SparseVec& v, const std::vector<std::string>& labels) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : v.entries()) {
    if (!s.empty()) s += " + ";
    if (c.is_one())
      s += labels[i];
    else
      s += "(" + c.str() + ")" + labels[i];
  }
  return s;
}

std::string pretty_tensor(const SparseVec& v, const std::vector<std::string>& la,
                          const std::vector<std::string>& lb) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v.entries()) {
    auto [i, j] = tensor_split(k, static_cast<Index>(lb.size()));
    if (!s.empty()) s += " + ";
    if (!c.is_one()) s += "(" + c.str() + ")";
    s += la[i] + "(x)" + lb[j];
  }
  return s;
}

StarAlgebra group_algebra(const FiniteGroup& g) {
  StarAlgebra a;
  a.dim = g.order;
  a.labels = g.labels;
  a.mult.reserve(a.dim * a.dim);
  for (Elt x = 0; x < g.order; ++x)
    for (Elt y = 0; y < g.order; ++y) a.mult.push_back(SparseVec::basis(a.dim, g.mul(x, y)));
  a.unit = SparseVec::basis(a.dim, g.identity);
  a.star = SparseMatrix(a.dim, a.dim);
  for (Elt x = 0; x < g.order; ++x) a.star.set(g.inv(x), x, Scalar(1));
  return a;
}

StarAlgebra function_algebra(const FiniteGroup& g) {
  StarAlgebra a;
  a.dim = g.order;
  a.labels.reserve(g.order);
  for (Elt x = 0; x < g.order; ++x) a.labels.push_back("d:" + g.labels[x]);
  a.mult.reserve(a.dim * a.dim);
  for (Elt x = 0; x < g.order; ++x)
    for (Elt y = 0; y < g.order; ++y)
      a.mult.push_back(x == y ? SparseVec::basis(a.dim, x) : SparseVec(a.dim));
  a.unit = SparseVec(a.dim);
  for (Elt x = 0; x < g.order; ++x) a.unit.set(x, Scalar(1));
  a.star = SparseMatrix::identity(a.dim);
  return a;
}

StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b) {
  StarAlgebra s;
  s.dim = a.dim + b.dim;
  for (const auto& l : a.labels) s.labels.push_back("L:" + l);
  for (const auto& l : b.labels) s.labels.push_back("R:" + l);

  auto embed = [&](const SparseVec& v, Index offset) {
    SparseVec out(s.dim);
    for (const auto& [i, c] : v.entries()) out.set(i + offset, c);
    return out;
  };

  s.mult.reserve(s.dim * s.dim);
  for (Index i = 0; i < s.dim; ++i)
    for (Index j = 0; j < s.dim; ++j) {
      if (i < a.dim && j < a.dim)
        s.mult.push_back(embed(a.mul_basis(i, j), 0));
      else if (i >= a.dim && j >= a.dim)
        s.mult.push_back(embed(b.mul_basis(i - a.dim, j - a.dim), a.dim));
      else
        s.mult.push_back(SparseVec(s.dim));
    }
  s.unit = embed(a.unit, 0) + embed(b.unit, a.dim);
  s.star = SparseMatrix(s.dim, s.dim);
  for (Index j = 0; j < a.dim; ++j) s.star.set_column(j, embed(a.star.column(j), 0));
  for (Index j = 0; j < b.dim; ++j) s.star.set_column(a.dim + j, embed(b.star.column(j), a.dim));
  return s;
}

Report verify_algebra_map(const AlgebraMap& f, MapMode mode) {
  const StarAlgebra& src = *f.source;
  const StarAlgebra& dst = *f.target;
  if (f.matrix.cols() != src.dim || f.matrix.rows() != dst.dim)
    throw Error("verify_algebra_map: dimension mismatch");
  Report rep;
  rep.add("map_unital", f.matrix.apply(src.unit) == dst.unit);
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < src.dim && ok; ++i)
      for (Index j = 0; j < src.dim; ++j) {
        SparseVec lhs = f.matrix.apply(src.mul_basis(i, j));
        SparseVec rhs = dst.mul(f.matrix.apply(src.basis(i)), f.matrix.apply(src.basis(j)));
        if (lhs != rhs) {
          ok = false;
          w = src.labels[i] + ", " + src.labels[j];
          break;
        }
      }
    rep.add("map_multiplicative", ok, w);
  }
  if (mode == MapMode::star_homomorphism) {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < src.dim; ++i)
      if (f.matrix.apply(src.star_of(src.basis(i))) != dst.star_of(f.matrix.apply(src.basis(i)))) {
        ok = false;
        w = src.labels[i];
        break;
      }
    rep.add("map_star", ok, w);
  }
  if (mode == MapMode::isomorphism) {
    bool ok = src.dim == dst.dim && rank(f.matrix) == src.dim;
    rep.add("map_bijective", ok, ok ? "" : "rank deficient");
  }
  return rep;
}

StarAlgebra crossed_product_z2(const StarAlgebra& fa, const AlgebraMap& theta_hat) {
  {
    Report r = verify_algebra_map(theta_hat, MapMode::star_homomorphism);
    if (!r.all_pass()) throw Error("crossed_product_z2: theta_hat is not a *-automorphism");
    if (theta_hat.matrix.compose(theta_hat.matrix) != SparseMatrix::identity(fa.dim))
      throw Error("crossed_product_z2: theta_hat is not of order two");
  }
  // theta_hat permutes the minimal idempotents d_x, so its matrix columns are
  // single unit entries.
  const Index n = fa.dim;
  std::vector<Index> theta(n);
  for (Index x = 0; x < n; ++x) {
    const SparseVec& col = theta_hat.matrix.column(x);
    if (col.nnz() != 1 || !col.entries()[0].second.is_one())
      throw Error("crossed_product_z2: theta_hat does not permute the delta basis");
    theta[x] = col.entries()[0].first;
  }

  StarAlgebra b;
  b.dim = 2 * n;
  b.labels.reserve(b.dim);
  for (Index x = 0; x < n; ++x) b.labels.push_back(fa.labels[x]);
  for (Index x = 0; x < n; ++x) b.labels.push_back(fa.labels[x] + ".U");
  b.mult.assign(b.dim * b.dim, SparseVec(b.dim));
  auto at = [&](Index i, Index j) -> SparseVec& { return b.mult[i * b.dim + j]; };
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (x == y) {
        at(x, y) = SparseVec::basis(b.dim, x);            // d_x d_x = d_x
        at(x, n + y) = SparseVec::basis(b.dim, n + x);    // d_x (d_x U) = d_x U
      }
      if (x == theta[y]) {
        at(n + x, y) = SparseVec::basis(b.dim, n + x);    // (d_x U) d_y = [x=theta(y)] d_x U
        at(n + x, n + y) = SparseVec::basis(b.dim, x);    // (d_x U)(d_y U) = [x=theta(y)] d_x
      }
    }
  b.unit = SparseVec(b.dim);
  for (Index x = 0; x < n; ++x) b.unit.set(x, Scalar(1));
  b.star = SparseMatrix(b.dim, b.dim);
  for (Index x = 0; x < n; ++x) {
    b.star.set(x, x, Scalar(1));
    b.star.set(n + theta[x], n + x, Scalar(1));  // (d_x U)* = d_theta(x) U
  }
  return b;
}

namespace {

// Commutative quotient of A by the two-sided ideal generated by commutators.
struct CommQuotient {
  RowSpace ideal;
  std::vector<Index> free_cols;  // quotient coordinates, ascending
  Index qdim = 0;
  std::vector<SparseVec> qmult;  // qdim*qdim products in quotient coordinates
  SparseVec qunit;

  SparseVec project(const SparseVec& x) const {
    SparseVec red = ideal.reduce(x);
    SparseVec out(qdim);
    for (const auto& [i, c] : red.entries()) {
      auto it = std::lower_bound(free_cols.begin(), free_cols.end(), i);
      out.set(static_cast<Index>(it - free_cols.begin()), c);
    }
    return out;
  }
};

CommQuotient commutator_quotient(const StarAlgebra& a) {
  CommQuotient q;
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = i + 1; j < a.dim; ++j)
      q.ideal.insert(a.mul_basis(i, j) - a.mul_basis(j, i));
  // Close under multiplication on both sides.
  bool grew = true;
  while (grew) {
    grew = false;
    Index before = q.ideal.rank();
    std::vector<SparseVec> current;
    for (const auto& p : q.ideal.pivots()) current.push_back(p.second);
    for (const SparseVec& v : current)
      for (Index k = 0; k < a.dim; ++k) {
        q.ideal.insert(a.mul(a.basis(k), v));
        q.ideal.insert(a.mul(v, a.basis(k)));
      }
    if (q.ideal.rank() != before) grew = true;
  }
  std::vector<bool> pivot(a.dim, false);
  for (Index c : q.ideal.pivot_columns()) pivot[c] = true;
  for (Index i = 0; i < a.dim; ++i)
    if (!pivot[i]) q.free_cols.push_back(i);
  q.qdim = static_cast<Index>(q.free_cols.size());
  q.qmult.reserve(q.qdim * q.qdim);
  for (Index u = 0; u < q.qdim; ++u)
    for (Index v = 0; v < q.qdim; ++v)
      q.qmult.push_back(q.project(a.mul_basis(q.free_cols[u], q.free_cols[v])));
  q.qunit = q.project(a.unit);
  return q;
}

// Minimal polynomial of a square matrix via Krylov iteration on vec(M^j).
Poly minimal_polynomial(const SparseMatrix& m) {
  const Index k = m.rows();
  SparseMatrix power = SparseMatrix::identity(k);
  std::vector<SparseVec> vecs;  // vec(M^0), vec(M^1), ...
  auto vec_of = [&](const SparseMatrix& p) {
    SparseVec v(k * k);
    for (Index j = 0; j < k; ++j)
      for (const auto& [i, c] : p.column(j).entries()) v.set(tensor_index(i, j, k), c);
    return v;
  };
  for (Index deg = 0; deg <= k; ++deg) {
    SparseVec v = vec_of(power);
    SparseMatrix prev(k * k, static_cast<Index>(vecs.size()));
    for (Index c = 0; c < static_cast<Index>(vecs.size()); ++c) prev.set_column(c, vecs[c]);
    if (deg > 0) {
      if (auto x = solve_unique(prev, v)) {
        Poly p(deg + 1);
        for (Index c = 0; c < deg; ++c) p[c] = -x->get(c);
        p[deg] = Scalar(1);
        return p;
      }
    }
    vecs.push_back(std::move(v));
    power = m.compose(power);
  }
  throw Error("minimal_polynomial: no dependence found");
}

SparseMatrix matrix_minus_lambda(const SparseMatrix& m, const Scalar& lambda) {
  SparseMatrix out = m;
  for (Index i = 0; i < m.rows(); ++i) out.set(i, i, m.get(i, i) - lambda);
  return out;
}

SparseMatrix matrix_power(const SparseMatrix& m, int e) {
  SparseMatrix acc = SparseMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) acc = acc.compose(m);
  return acc;
}

// Restriction of op to the invariant subspace spanned by the columns of basis:
// solves basis * X = op * basis.
SparseMatrix restrict_to(const SparseMatrix& op, const SparseMatrix& basis) {
  SparseMatrix out(basis.cols(), basis.cols());
  for (Index j = 0; j < basis.cols(); ++j) {
    SparseVec rhs = op.apply(basis.column(j));
    auto x = solve_unique(basis, rhs);
    if (!x) throw Error("restrict_to: subspace is not invariant");
    out.set_column(j, *x);
  }
  return out;
}

}  // namespace

std::vector<Character> characters(const StarAlgebra& a) {
  CommQuotient q = commutator_quotient(a);
  const Index n = q.qdim;
  if (n == 0) return {};

  // Simultaneous generalised eigenspace decomposition of the quotient under
  // multiplication by each quotient basis vector.
  std::vector<SparseMatrix> spaces;
  spaces.push_back(SparseMatrix::identity(n));
  for (Index u = 0; u < n; ++u) {
    SparseMatrix op(n, n);
    for (Index v = 0; v < n; ++v) op.set_column(v, q.qmult[u * n + v]);
    std::vector<SparseMatrix> next;
    for (const SparseMatrix& space : spaces) {
      if (space.cols() == 1) {
        next.push_back(space);
        continue;
      }
      SparseMatrix rest = restrict_to(op, space);
      auto roots = find_roots_split(minimal_polynomial(rest));
      for (const auto& [lambda, mult] : roots) {
        SparseMatrix nil = matrix_power(matrix_minus_lambda(rest, lambda), mult);
        std::vector<SparseVec> ker = kernel_basis(nil);
        SparseMatrix sub(n, static_cast<Index>(ker.size()));
        for (Index c = 0; c < static_cast<Index>(ker.size()); ++c)
          sub.set_column(c, space.apply(ker[c]));
        if (sub.cols() > 0) next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }

  // Each leaf yields a candidate character: the unique eigenvalue of every
  // basis operator on the leaf.
  std::vector<Character> out;
  for (const SparseMatrix& space : spaces) {
    SparseVec qvals(n);
    bool good = true;
    for (Index u = 0; u < n && good; ++u) {
      SparseMatrix op(n, n);
      for (Index v = 0; v < n; ++v) op.set_column(v, q.qmult[u * n + v]);
      auto roots = find_roots_split(minimal_polynomial(restrict_to(op, space)));
      if (roots.size() != 1) {
        good = false;
        break;
      }
      qvals.set(u, roots[0].first);
    }
    if (!good) continue;
    // Lift through the projection and verify multiplicativity exhaustively.
    Character chi;
    chi.values = SparseVec(a.dim);
    for (Index i = 0; i < a.dim; ++i)
      chi.values.set(i, dot(qvals, q.project(a.basis(i))));
    if (chi(a.unit) != Scalar(1)) continue;
    bool multiplicative = true;
    for (Index i = 0; i < a.dim && multiplicative; ++i)
      for (Index j = 0; j < a.dim; ++j)
        if (chi(a.mul_basis(i, j)) != chi(a.basis(i)) * chi(a.basis(j))) {
          multiplicative = false;
          break;
        }
    if (multiplicative) out.push_back(std::move(chi));
  }

  // Dedupe and order canonically.
  auto cmp_vals = [&](const Character& x, const Character& y) {
    for (Index i = 0; i < a.dim; ++i) {
      int c = Scalar::cmp(x.values.get(i), y.values.get(i));
      if (c != 0) return c;
    }
    return 0;
  };
  std::sort(out.begin(), out.end(),
            [&](const Character& x, const Character& y) { return cmp_vals(x, y) < 0; });
  out.erase(std::unique(out.begin(), out.end(),
                        [&](const Character& x, const Character& y) { return cmp_vals(x, y) == 0; }),
            out.end());
  return out;
}

}  // namespace hf
