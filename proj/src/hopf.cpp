#include "hf/hopf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hf {

namespace {

SparseVec contract_left(const SparseVec& functional, const SparseVec& v, Index dim_second) {
  // (functional (x) id) applied to v in A (x) B.
  VecBuilder out(dim_second);
  for (const auto& [k, c] : v.entries()) {
    auto [i, j] = tensor_split(k, dim_second);
    Scalar f = functional.get(i);
    if (!f.is_zero()) out.add(j, f * c);
  }
  return out.take();
}

SparseVec contract_right(const SparseVec& functional, const SparseVec& v, Index dim_second) {
  // (id (x) functional) applied to v in A (x) B.
  VecBuilder out(v.dim() / dim_second);
  for (const auto& [k, c] : v.entries()) {
    auto [i, j] = tensor_split(k, dim_second);
    Scalar f = functional.get(j);
    if (!f.is_zero()) out.add(i, f * c);
  }
  return out.take();
}

}  // namespace

SparseVec flip_tensor(const SparseVec& v, Index dim_first, Index dim_second) {
  VecBuilder out(dim_first * dim_second);
  for (const auto& [k, c] : v.entries()) {
    auto [i, j] = tensor_split(k, dim_second);
    out.add(tensor_index(j, i, dim_first), c);
  }
  return out.take();
}

Report verify_hopf_axioms(const HopfAlgebra& h) {
  const StarAlgebra& A = h.alg;
  const Index d = A.dim;
  Report rep = A.validate();

  if (h.comult.cols() != d || h.comult.rows() != d * d || h.counit.dim() != d ||
      h.antipode.rows() != d || h.antipode.cols() != d) {
    rep.add("coalgebra_shape", false, "matrix dimensions inconsistent with the algebra");
    return rep;
  }

  SparseMatrix id = SparseMatrix::identity(d);
  {
    bool ok = true;
    std::string w;
    for (Index k = 0; k < d; ++k) {
      SparseVec lhs = apply_kron(h.comult, id, h.comult.column(k));
      SparseVec rhs = apply_kron(id, h.comult, h.comult.column(k));
      if (lhs != rhs) {
        ok = false;
        w = A.labels[k];
        break;
      }
    }
    rep.add("coassoc", ok, w);
  }
  {
    bool okl = true, okr = true;
    std::string wl, wr;
    for (Index k = 0; k < d; ++k) {
      if (okl && contract_left(h.counit, h.comult.column(k), d) != A.basis(k)) {
        okl = false;
        wl = A.labels[k];
      }
      if (okr && contract_right(h.counit, h.comult.column(k), d) != A.basis(k)) {
        okr = false;
        wr = A.labels[k];
      }
    }
    rep.add("counit_left", okl, wl);
    rep.add("counit_right", okr, wr);
  }
  rep.add("comult_unital", h.comult.apply(A.unit) == SparseVec::tensor(A.unit, A.unit));
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < d && ok; ++i)
      for (Index j = 0; j < d; ++j) {
        SparseVec lhs = h.comult.apply(A.mul_basis(i, j));
        SparseVec rhs = tensor_mul(A, A, h.comult.column(i), h.comult.column(j));
        if (lhs != rhs) {
          ok = false;
          w = A.labels[i] + ", " + A.labels[j];
          break;
        }
      }
    rep.add("comult_mult", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < d; ++i)
      if (h.comult.apply(A.star_of(A.basis(i))) != tensor_star(A, A, h.comult.column(i))) {
        ok = false;
        w = A.labels[i];
        break;
      }
    rep.add("comult_star", ok, w);
  }
  rep.add("counit_unital", h.counit_of(A.unit) == Scalar(1));
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < d && ok; ++i)
      for (Index j = 0; j < d; ++j)
        if (h.counit_of(A.mul_basis(i, j)) !=
            h.counit_of(A.basis(i)) * h.counit_of(A.basis(j))) {
          ok = false;
          w = A.labels[i] + ", " + A.labels[j];
          break;
        }
    rep.add("counit_mult", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < d; ++i)
      if (h.counit_of(A.star_of(A.basis(i))) != h.counit_of(A.basis(i)).conj()) {
        ok = false;
        w = A.labels[i];
        break;
      }
    rep.add("counit_star", ok, w);
  }
  {
    bool okl = true, okr = true;
    std::string wl, wr;
    for (Index k = 0; k < d; ++k) {
      VecBuilder lhs(d), rhs(d);
      for (const auto& [t, c] : h.comult.column(k).entries()) {
        auto [i, j] = tensor_split(t, d);
        lhs.add_scaled(A.mul(h.antipode.column(i), A.basis(j)), c);
        rhs.add_scaled(A.mul(A.basis(i), h.antipode.column(j)), c);
      }
      SparseVec expected = A.unit.scaled(h.counit_of(A.basis(k)));
      if (okl && lhs.take() != expected) {
        okl = false;
        wl = A.labels[k];
      }
      if (okr && rhs.take() != expected) {
        okr = false;
        wr = A.labels[k];
      }
    }
    rep.add("antipode_left", okl, wl);
    rep.add("antipode_right", okr, wr);
  }
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < d && ok; ++i)
      for (Index j = 0; j < d; ++j)
        if (h.antipode.apply(A.mul_basis(i, j)) !=
            A.mul(h.antipode.column(j), h.antipode.column(i))) {
          ok = false;
          w = A.labels[i] + ", " + A.labels[j];
          break;
        }
    rep.add("antipode_antimult", ok, w);
  }
  rep.add("antipode_unit", h.antipode.apply(A.unit) == A.unit);
  return rep;
}

bool is_cocommutative(const HopfAlgebra& h) {
  for (Index k = 0; k < h.dim(); ++k)
    if (flip_tensor(h.comult.column(k), h.dim(), h.dim()) != h.comult.column(k)) return false;
  return true;
}

HopfAlgebra group_hopf(const FiniteGroup& g) {
  HopfAlgebra h;
  h.alg = group_algebra(g);
  const Index d = h.alg.dim;
  h.comult = SparseMatrix(d * d, d);
  for (Index x = 0; x < d; ++x) h.comult.set(tensor_index(x, x, d), x, Scalar(1));
  h.counit = SparseVec(d);
  for (Index x = 0; x < d; ++x) h.counit.set(x, Scalar(1));
  h.antipode = SparseMatrix(d, d);
  for (Elt x = 0; x < g.order; ++x) h.antipode.set(g.inv(x), x, Scalar(1));
  return h;
}

HopfAlgebra function_hopf(const FiniteGroup& g) {
  HopfAlgebra h;
  h.alg = function_algebra(g);
  const Index d = h.alg.dim;
  h.comult = SparseMatrix(d * d, d);
  for (Elt x = 0; x < g.order; ++x) {
    SparseVec col(d * d);
    for (Elt a = 0; a < g.order; ++a) {
      Elt b = g.mul(g.inv(a), x);  // ab = x
      col.set(tensor_index(a, b, d), Scalar(1));
    }
    h.comult.set_column(x, std::move(col));
  }
  h.counit = SparseVec::basis(d, g.identity);
  h.antipode = SparseMatrix(d, d);
  for (Elt x = 0; x < g.order; ++x) h.antipode.set(g.inv(x), x, Scalar(1));
  return h;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  if (!verify_hopf_axioms(h).all_pass()) throw Error("dual_hopf: input fails the axiom suite");
  const Index d = h.dim();
  HopfAlgebra out;
  out.alg.dim = d;
  out.alg.labels.reserve(d);
  for (const auto& l : h.alg.labels) out.alg.labels.push_back("f:" + l);

  // Multiplication is the transpose of the comultiplication.
  out.alg.mult.assign(d * d, SparseVec(d));
  for (Index k = 0; k < d; ++k)
    for (const auto& [t, c] : h.comult.column(k).entries()) out.alg.mult[t].add(k, c);
  out.alg.unit = h.counit;

  // Comultiplication is the transpose of the multiplication.
  out.comult = SparseMatrix(d * d, d);
  {
    std::vector<VecBuilder> cols;
    cols.reserve(d);
    for (Index k = 0; k < d; ++k) cols.emplace_back(d * d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        for (const auto& [k, c] : h.alg.mul_basis(i, j).entries())
          cols[k].add(tensor_index(i, j, d), c);
    for (Index k = 0; k < d; ++k) out.comult.set_column(k, cols[k].take());
  }
  // Counit is evaluation at the unit; unit is the counit (transposed roles).
  out.counit = h.alg.unit;
  out.antipode = h.antipode.transpose();

  // Dual involution: <f*, x> = conj <f, S(x)*>.
  out.alg.star = SparseMatrix(d, d);
  for (Index x = 0; x < d; ++x) {
    SparseVec w = h.alg.star_of(h.antipode.column(x));
    for (const auto& [k, c] : w.entries()) out.alg.star.set(x, k, c.conj());
  }
  return out;
}

HopfAlgebra co_opposite(const HopfAlgebra& h) {
  const Index d = h.dim();
  HopfAlgebra out;
  out.alg = h.alg;
  out.comult = SparseMatrix(d * d, d);
  for (Index k = 0; k < d; ++k)
    out.comult.set_column(k, flip_tensor(h.comult.column(k), d, d));
  out.counit = h.counit;
  out.antipode = SparseMatrix(d, d);
  for (Index k = 0; k < d; ++k) {
    auto col = solve_unique(h.antipode, SparseVec::basis(d, k));
    if (!col) throw Error("co_opposite: antipode is not invertible");
    out.antipode.set_column(k, *col);
  }
  return out;
}

namespace {

std::string grouplike_type(long order, long exponent, std::vector<long>* factors) {
  if (exponent == order) {
    *factors = {order};
    return "Z" + std::to_string(order);
  }
  struct Row {
    long order, exponent;
    std::vector<long> factors;
  };
  static const std::vector<Row> table = {
      {4, 2, {2, 2}}, {8, 2, {2, 2, 2}}, {8, 4, {2, 4}}, {9, 3, {3, 3}}, {12, 6, {2, 6}}};
  for (const auto& row : table)
    if (row.order == order && row.exponent == exponent) {
      *factors = row.factors;
      std::string s;
      for (long f : row.factors) s += (s.empty() ? "" : "x") + ("Z" + std::to_string(f));
      return s;
    }
  throw Error("group_likes: unsupported abelian group of order " + std::to_string(order));
}

}  // namespace

GroupLikeSet group_likes(const HopfAlgebra& h) {
  HopfAlgebra dual = dual_hopf(h);
  std::vector<Character> chars = characters(dual.alg);

  GroupLikeSet g;
  for (const Character& chi : chars) {
    SparseVec cand = chi.values;  // coordinates of the group-like in h
    if (h.comult.apply(cand) != SparseVec::tensor(cand, cand))
      throw Error("group_likes: dual character fails the group-like identity");
    if (h.counit_of(cand) != Scalar(1))
      throw Error("group_likes: dual character fails the counit normalisation");
    g.elements.push_back(std::move(cand));
  }
  if (g.elements.empty()) throw Error("group_likes: no group-like elements found");
  if (span_rank(g.elements) != static_cast<Index>(g.elements.size()))
    throw Error("group_likes: group-likes are not linearly independent");

  // Identity first, then the canonical character order.
  for (size_t i = 0; i < g.elements.size(); ++i)
    if (g.elements[i] == h.alg.unit) {
      std::swap(g.elements[0], g.elements[i]);
      break;
    }
  if (g.elements[0] != h.alg.unit) throw Error("group_likes: unit is not group-like");

  const size_t n = g.elements.size();
  g.table.assign(n, std::vector<int>(n, -1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      SparseVec prod = h.alg.mul(g.elements[i], g.elements[j]);
      for (size_t k = 0; k < n; ++k)
        if (prod == g.elements[k]) {
          g.table[i][j] = static_cast<int>(k);
          break;
        }
      if (g.table[i][j] < 0) throw Error("group_likes: set is not closed under multiplication");
    }
  // Inverses exist and S acts as inversion.
  for (size_t i = 0; i < n; ++i) {
    int inv = -1;
    for (size_t j = 0; j < n; ++j)
      if (g.table[i][j] == 0 && g.table[j][i] == 0) inv = static_cast<int>(j);
    if (inv < 0) throw Error("group_likes: missing inverse");
    if (h.antipode.apply(g.elements[i]) != g.elements[inv])
      throw Error("group_likes: antipode is not inversion on group-likes");
  }

  g.abelian = true;
  for (size_t i = 0; i < n && g.abelian; ++i)
    for (size_t j = 0; j < n; ++j)
      if (g.table[i][j] != g.table[j][i]) {
        g.abelian = false;
        break;
      }
  if (g.abelian && n <= 12) {
    long exponent = 1;
    for (size_t i = 0; i < n; ++i) {
      long ord = 1;
      int x = static_cast<int>(i);
      while (x != 0) {
        x = g.table[x][i];
        ++ord;
      }
      exponent = std::lcm(exponent, ord);
    }
    g.type = grouplike_type(static_cast<long>(n), exponent, &g.invariant_factors);
  } else {
    g.type = "nonabelian:" + std::to_string(n);
  }
  return g;
}

Report verify_hopf_morphism(const SparseMatrix& f, const HopfAlgebra& src,
                            const HopfAlgebra& dst, MorphismMode mode) {
  if (f.cols() != src.dim() || f.rows() != dst.dim())
    throw Error("verify_hopf_morphism: dimension mismatch");
  auto srcp = std::make_shared<const StarAlgebra>(src.alg);
  auto dstp = std::make_shared<const StarAlgebra>(dst.alg);
  Report rep = verify_algebra_map({srcp, dstp, f}, MapMode::isomorphism);
  if (mode == MorphismMode::hopf_iso) {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < src.dim(); ++i)
      if (f.apply(src.alg.star_of(src.alg.basis(i))) != dst.alg.star_of(f.column(i))) {
        ok = false;
        w = src.alg.labels[i];
        break;
      }
    rep.add("map_star", ok, w);
  }

  const Index d = dst.dim();
  {
    bool ok = true;
    std::string w;
    bool anti = (mode == MorphismMode::coalgebra_anti_iso);
    for (Index k = 0; k < src.dim(); ++k) {
      SparseVec lhs = apply_kron(f, f, src.comult.column(k));
      SparseVec rhs = dst.comult.apply(f.column(k));
      if (anti) rhs = flip_tensor(rhs, d, d);
      if (lhs != rhs) {
        ok = false;
        w = src.alg.labels[k];
        break;
      }
    }
    rep.add(anti ? "comult_anti_intertwines" : "comult_intertwines", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index k = 0; k < src.dim(); ++k)
      if (dst.counit_of(f.column(k)) != src.counit_of(src.alg.basis(k))) {
        ok = false;
        w = src.alg.labels[k];
        break;
      }
    rep.add("counit_compatible", ok, w);
  }
  if (mode == MorphismMode::hopf_iso) {
    bool ok = true;
    std::string w;
    for (Index k = 0; k < src.dim(); ++k)
      if (f.apply(src.antipode.column(k)) != dst.antipode.apply(f.column(k))) {
        ok = false;
        w = src.alg.labels[k];
        break;
      }
    rep.add("antipode_intertwines", ok, w);
  }
  return rep;
}

SparseVec solve_counit(const StarAlgebra& alg, const SparseMatrix& comult) {
  const Index d = alg.dim;
  SparseMatrix m(d * d, d);
  SparseVec b(d * d);
  for (Index k = 0; k < d; ++k) {
    for (const auto& [t, c] : comult.column(k).entries()) {
      auto [r, s] = tensor_split(t, d);
      // row (k,s), unknown r, coefficient c
      SparseVec col = m.column(r);
      col.add(tensor_index(k, s, d), c);
      m.set_column(r, std::move(col));
    }
    b.set(tensor_index(k, k, d), Scalar(1));
  }
  auto x = solve_unique(m, b);
  if (!x) throw Error("solve_counit: the counit law has no unique solution");
  return *x;
}

SparseMatrix solve_antipode(const StarAlgebra& alg, const SparseMatrix& comult,
                            const SparseVec& counit) {
  const Index d = alg.dim;
  // Unknowns: antipode entries s_{a,i} at index tensor_index(i, a, d).
  SparseMatrix m(d * d, d * d);
  SparseVec b(d * d);
  {
    std::vector<VecBuilder> cols;
    cols.reserve(d * d);
    for (Index c = 0; c < d * d; ++c) cols.emplace_back(d * d);
    for (Index k = 0; k < d; ++k) {
      for (const auto& [t, c] : comult.column(k).entries()) {
        auto [i, j] = tensor_split(t, d);
        for (Index a = 0; a < d; ++a)
          for (const auto& [r, mcoef] : alg.mul_basis(a, j).entries())
            cols[tensor_index(i, a, d)].add(tensor_index(k, r, d), c * mcoef);
      }
      Scalar eps = dot(counit, SparseVec::basis(d, k));
      for (const auto& [r, u] : alg.unit.entries()) b.set(tensor_index(k, r, d), eps * u);
    }
    for (Index c = 0; c < d * d; ++c) m.set_column(c, cols[c].take());
  }
  auto x = solve_unique(m, b);
  if (!x) throw Error("solve_antipode: the antipode law has no unique solution");
  SparseMatrix s(d, d);
  for (const auto& [t, c] : x->entries()) {
    auto [i, a] = tensor_split(t, d);
    s.set(a, i, c);
  }
  return s;
}

std::optional<std::string> hopf_structure_mismatch(const HopfAlgebra& h1, const HopfAlgebra& h2,
                                                   const std::vector<Index>& perm) {
  const Index d = h1.dim();
  if (h2.dim() != d) return "dimension mismatch";
  auto permute = [&](const SparseVec& v) {
    SparseVec out(d);
    for (const auto& [i, c] : v.entries()) out.set(perm[i], c);
    return out;
  };
  auto permute2 = [&](const SparseVec& v) {
    VecBuilder out(d * d);
    for (const auto& [t, c] : v.entries()) {
      auto [i, j] = tensor_split(t, d);
      out.add(tensor_index(perm[i], perm[j], d), c);
    }
    return out.take();
  };
  if (permute(h1.alg.unit) != h2.alg.unit) return "unit differs";
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      if (permute(h1.alg.mul_basis(i, j)) != h2.alg.mul_basis(perm[i], perm[j]))
        return "product of " + h1.alg.labels[i] + " and " + h1.alg.labels[j];
  for (Index i = 0; i < d; ++i) {
    if (permute2(h1.comult.column(i)) != h2.comult.column(perm[i]))
      return "comultiplication of " + h1.alg.labels[i];
    if (h1.counit_of(h1.alg.basis(i)) != h2.counit_of(h2.alg.basis(perm[i])))
      return "counit of " + h1.alg.labels[i];
    if (permute(h1.antipode.column(i)) != h2.antipode.column(perm[i]))
      return "antipode of " + h1.alg.labels[i];
    if (permute(h1.alg.star.column(i)) != h2.alg.star.column(perm[i]))
      return "star of " + h1.alg.labels[i];
  }
  return std::nullopt;
}

}  // namespace hf
