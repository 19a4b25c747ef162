#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hf/group.hpp"
#include "hf/roots.hpp"
#include "hf/sparse.hpp"

namespace hf {

// Finite-dimensional associative *-algebra over Q(i) given by structure
// constants. star is the matrix of the involution applied after coefficient
// conjugation, so star_of is antilinear.
struct StarAlgebra {
  Index dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> mult;  // dim*dim entries; mult[i*dim+j] = e_i e_j
  SparseVec unit;
  SparseMatrix star;

  const SparseVec& mul_basis(Index i, Index j) const { return mult[i * dim + j]; }
  SparseVec mul(const SparseVec& x, const SparseVec& y) const;
  SparseVec star_of(const SparseVec& x) const { return star.apply(x.conjugated()); }
  Index label_index(const std::string& label) const;  // throws if absent
  SparseVec basis(Index i) const { return SparseVec::basis(dim, i); }
  // Matrix of left multiplication by x.
  SparseMatrix left_mult_matrix(const SparseVec& x) const;
  // mu: A (x) A -> A in the global tensor convention.
  SparseMatrix multiplication_matrix() const;

  // Exhaustive invariant suite: associativity on all basis triples, unit
  // laws, star involution and antimultiplicativity.
  Report validate() const;
};

// Multiplication and involution on A (x) B.
SparseVec tensor_mul(const StarAlgebra& a, const StarAlgebra& b, const SparseVec& x,
                     const SparseVec& y);
SparseVec tensor_star(const StarAlgebra& a, const StarAlgebra& b, const SparseVec& x);

std::string pretty(const SparseVec& v, const std::vector<std::string>& labels);
std::string pretty_tensor(const SparseVec& v, const std::vector<std::string>& la,
                          const std::vector<std::string>& lb);

// Constructors.
StarAlgebra group_algebra(const FiniteGroup& g);
StarAlgebra function_algebra(const FiniteGroup& g);
StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b);

struct AlgebraMap {
  std::shared_ptr<const StarAlgebra> source, target;
  SparseMatrix matrix;
};

enum class MapMode { homomorphism, star_homomorphism, isomorphism };

Report verify_algebra_map(const AlgebraMap& f, MapMode mode);

// Z_2 crossed product of a function algebra by an order-two automorphism.
// Basis: [d_x ...] then [d_x U ...]; U = sum_x d_x U satisfies U^2 = 1 and
// U d_x U = d_theta(x).
StarAlgebra crossed_product_z2(const StarAlgebra& fa, const AlgebraMap& theta_hat);

struct Character {
  SparseVec values;  // functional on the algebra, one value per basis vector
  Scalar operator()(const SparseVec& x) const { return dot(values, x); }
};

// All unital multiplicative functionals A -> Q(i), via the commutator-ideal
// quotient and Gaussian-rational root extraction. Throws NonSplitError when
// the commutative quotient does not split over Q(i). Deterministic order.
std::vector<Character> characters(const StarAlgebra& a);

}  // namespace hf
