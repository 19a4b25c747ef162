#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hf/algebra.hpp"

namespace hf {

// Hopf *-algebra: a StarAlgebra plus comultiplication A -> A (x) A, counit
// (as a functional vector) and antipode. Nothing is assumed; the axiom suite
// checks every law as an exact identity.
struct HopfAlgebra {
  StarAlgebra alg;
  SparseMatrix comult;    // (dim*dim) x dim
  SparseVec counit;       // functional
  SparseMatrix antipode;  // dim x dim

  Index dim() const { return alg.dim; }
  SparseVec comult_of(const SparseVec& x) const { return comult.apply(x); }
  Scalar counit_of(const SparseVec& x) const { return dot(counit, x); }
};

// Exact verification of all Hopf *-algebra axioms, including the underlying
// StarAlgebra invariants.
Report verify_hopf_axioms(const HopfAlgebra& h);

bool is_cocommutative(const HopfAlgebra& h);

// C[G] with Delta(g) = g (x) g, eps = 1, S(g) = g^-1.
HopfAlgebra group_hopf(const FiniteGroup& g);
// Functions on G with Delta(d_x) = sum_{ab=x} d_a (x) d_b, eps = eval at e,
// S(d_x) = d_{x^-1}.
HopfAlgebra function_hopf(const FiniteGroup& g);

// Dual Hopf *-algebra on the dual basis (positionally identified with the
// primal basis). Requires the input to pass the axiom suite.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

// Same algebra, flipped comultiplication, inverse antipode.
HopfAlgebra co_opposite(const HopfAlgebra& h);

// Swap the two tensor legs of v in A (x) A.
SparseVec flip_tensor(const SparseVec& v, Index dim_first, Index dim_second);

struct GroupLikeSet {
  std::vector<SparseVec> elements;       // canonical order; identity first
  std::vector<std::vector<int>> table;   // table[i][j] = index of g_i g_j
  bool abelian = false;
  std::vector<long> invariant_factors;   // for abelian groups of order <= 12
  std::string type;                      // e.g. "Z4", "Z2xZ2"
};

// Group-like elements via characters of the dual algebra; each returned g is
// re-verified to satisfy Delta(g) = g (x) g and eps(g) = 1 exactly.
GroupLikeSet group_likes(const HopfAlgebra& h);

enum class MorphismMode { hopf_iso, coalgebra_anti_iso };

Report verify_hopf_morphism(const SparseMatrix& f, const HopfAlgebra& src,
                            const HopfAlgebra& dst, MorphismMode mode);

// Unique solutions of the counit/antipode laws, for structures whose counit
// or antipode is not given explicitly. Throw if no unique solution exists.
SparseVec solve_counit(const StarAlgebra& alg, const SparseMatrix& comult);
SparseMatrix solve_antipode(const StarAlgebra& alg, const SparseMatrix& comult,
                            const SparseVec& counit);

// Structure-constant equality of h1 and h2 under the basis bijection
// perm (index in h1 -> index in h2). Returns a witness on mismatch.
std::optional<std::string> hopf_structure_mismatch(const HopfAlgebra& h1, const HopfAlgebra& h2,
                                                   const std::vector<Index>& perm);

}  // namespace hf
