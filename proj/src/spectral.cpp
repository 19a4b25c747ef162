#include "hf/spectral.hpp"

#include <deque>

namespace hf {

namespace {

SparseVec contract_first(const SparseVec& functional, const SparseVec& v, Index dim_second) {
  VecBuilder out(dim_second);
  for (const auto& [k, c] : v.entries()) {
    auto [i, j] = tensor_split(k, dim_second);
    Scalar f = functional.get(i);
    if (!f.is_zero()) out.add(j, f * c);
  }
  return out.take();
}

SparseVec contract_second(const SparseVec& functional, const SparseVec& v, Index dim_second) {
  VecBuilder out(v.dim() / dim_second);
  for (const auto& [k, c] : v.entries()) {
    auto [i, j] = tensor_split(k, dim_second);
    Scalar f = functional.get(j);
    if (!f.is_zero()) out.add(i, f * c);
  }
  return out.take();
}

}  // namespace

SpectralTripleData build_spectral_triple(const FiniteGroup& g, const GeneratingSet& gens) {
  SpectralTripleData t;
  t.group = g;
  t.gens = gens;
  t.lengths = cayley_lengths(g, gens);
  for (long l : t.lengths)
    if (l < 0) throw Error("build_spectral_triple: the set does not generate the group");
  t.dirac = SparseMatrix(g.order, g.order);
  for (Elt x = 0; x < g.order; ++x)
    if (t.lengths[x] != 0) t.dirac.set(x, x, Scalar(t.lengths[x]));
  t.trace = SparseVec::basis(g.order, g.identity);
  return t;
}

Coaction coaction_from_generator_images(const SpectralTripleData& triple,
                                        std::shared_ptr<const HopfAlgebra> hopf,
                                        const std::vector<SparseVec>& images) {
  const FiniteGroup& g = triple.group;
  if (images.size() != triple.gens.elements.size())
    throw Error("coaction_from_generator_images: one image per generator required");
  auto module = std::make_shared<const StarAlgebra>(group_algebra(g));
  const StarAlgebra& M = *module;
  const StarAlgebra& H = hopf->alg;
  const Index td = M.dim * H.dim;
  for (const SparseVec& im : images)
    if (im.dim() != td) throw Error("coaction_from_generator_images: image dimension mismatch");

  // One fixed reduced word per element: breadth-first from the identity.
  std::vector<SparseVec> alpha(g.order);
  std::vector<bool> seen(g.order, false);
  alpha[g.identity] = SparseVec::tensor(M.basis(g.identity), H.unit);
  seen[g.identity] = true;
  std::deque<Elt> queue = {g.identity};
  while (!queue.empty()) {
    Elt x = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < triple.gens.elements.size(); ++i) {
      Elt y = g.mul(x, triple.gens.elements[i]);
      if (!seen[y]) {
        seen[y] = true;
        alpha[y] = tensor_mul(M, H, alpha[x], images[i]);
        queue.push_back(y);
      }
    }
  }

  // Well-definedness: every product relation of the group must hold.
  for (Elt x = 0; x < g.order; ++x)
    for (Elt y = 0; y < g.order; ++y)
      if (tensor_mul(M, H, alpha[x], alpha[y]) != alpha[g.mul(x, y)])
        throw InconsistentImagesError("images do not define a homomorphism: relation at (" +
                                      g.labels[x] + ", " + g.labels[y] + ")");

  Coaction c;
  c.map = SparseMatrix(td, g.order);
  for (Elt x = 0; x < g.order; ++x) c.map.set_column(x, alpha[x]);
  c.module = std::move(module);
  c.hopf = std::move(hopf);
  return c;
}

Report verify_coaction(const Coaction& c) {
  Report rep;
  const StarAlgebra& M = *c.module;
  const HopfAlgebra& H = *c.hopf;
  const Index dm = M.dim, dh = H.dim();

  rep.add("unital", c.map.apply(M.unit) == SparseVec::tensor(M.unit, H.alg.unit));
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < dm && ok; ++i)
      for (Index j = 0; j < dm; ++j)
        if (c.map.apply(M.mul_basis(i, j)) !=
            tensor_mul(M, H.alg, c.map.column(i), c.map.column(j))) {
          ok = false;
          w = M.labels[i] + ", " + M.labels[j];
          break;
        }
    rep.add("multiplicative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < dm; ++i)
      if (c.map.apply(M.star_of(M.basis(i))) != tensor_star(M, H.alg, c.map.column(i))) {
        ok = false;
        w = M.labels[i];
        break;
      }
    rep.add("star_compatible", ok, w);
  }
  {
    // (alpha (x) id) alpha = (id (x) Delta) alpha.
    bool ok = true;
    std::string w;
    SparseMatrix idh = SparseMatrix::identity(dh);
    SparseMatrix idm = SparseMatrix::identity(dm);
    for (Index k = 0; k < dm; ++k) {
      SparseVec lhs = apply_kron(c.map, idh, c.map.column(k));
      SparseVec rhs = apply_kron(idm, H.comult, c.map.column(k));
      if (lhs != rhs) {
        ok = false;
        w = M.labels[k];
        break;
      }
    }
    rep.add("coassociative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Index k = 0; k < dm; ++k)
      if (contract_second(H.counit, c.map.column(k), dh) != M.basis(k)) {
        ok = false;
        w = M.labels[k];
        break;
      }
    rep.add("counit_law", ok, w);
  }
  {
    // Podles: span of alpha(e_x)(1 (x) e_h) must be all of M (x) H.
    std::vector<SparseVec> span;
    span.reserve(dm * dh);
    for (Index x = 0; x < dm; ++x)
      for (Index h = 0; h < dh; ++h)
        span.push_back(tensor_mul(M, H.alg, c.map.column(x),
                                  SparseVec::tensor(M.unit, H.alg.basis(h))));
    Index r = span_rank(span);
    bool ok = (r == dm * dh);
    rep.add("podles_full_rank", ok,
            ok ? "" : "rank " + std::to_string(r) + " < " + std::to_string(dm * dh));
  }
  return rep;
}

Report verify_isometric(const Coaction& c, const SpectralTripleData& triple) {
  Report rep;
  const StarAlgebra& M = *c.module;
  const HopfAlgebra& H = *c.hopf;
  const Index dm = M.dim, dh = H.dim();
  {
    // (trace (x) id) alpha(x) = trace(x) 1.
    bool ok = true;
    std::string w;
    for (Index k = 0; k < dm; ++k) {
      SparseVec lhs = contract_first(triple.trace, c.map.column(k), dh);
      SparseVec rhs = H.alg.unit.scaled(triple.trace.get(k));
      if (lhs != rhs) {
        ok = false;
        w = M.labels[k];
        break;
      }
    }
    rep.add("trace_preserved", ok, w);
  }
  {
    // alpha . D = (D (x) 1) . alpha.
    bool ok = true;
    std::string w;
    SparseMatrix idh = SparseMatrix::identity(dh);
    for (Index k = 0; k < dm; ++k) {
      SparseVec lhs = c.map.apply(triple.dirac.column(k));
      SparseVec rhs = apply_kron(triple.dirac, idh, c.map.column(k));
      if (lhs != rhs) {
        ok = false;
        w = M.labels[k];
        break;
      }
    }
    rep.add("dirac_commutes", ok, w);
  }
  {
    // Images of generators stay in (span of length-one elements) (x) H.
    bool ok = true;
    std::string w;
    for (Elt s : triple.gens.elements) {
      for (const auto& [t, coef] : c.map.column(s).entries()) {
        (void)coef;
        auto [m, h] = tensor_split(t, dh);
        (void)h;
        if (triple.lengths[m] != 1) {
          ok = false;
          w = M.labels[s] + " -> " + M.labels[m];
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("length_one_preserved", ok, w);
  }
  {
    // (trace (x) id) alpha(g_k g_l) = trace(g_k g_l) 1 over all generator pairs.
    bool ok = true;
    std::string w;
    for (Elt a : triple.gens.elements) {
      for (Elt b : triple.gens.elements) {
        Elt ab = triple.group.mul(a, b);
        SparseVec lhs = contract_first(triple.trace, c.map.column(ab), dh);
        SparseVec rhs = H.alg.unit.scaled(triple.trace.get(ab));
        if (lhs != rhs) {
          ok = false;
          w = M.labels[a] + ", " + M.labels[b];
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("generator_pair_trace", ok, w);
  }
  return rep;
}

}  // namespace hf
