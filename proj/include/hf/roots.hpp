#pragma once

#include <vector>

#include "hf/scalar.hpp"

namespace hf {

// Raised when a minimal polynomial has roots outside Q(i); callers must not
// continue with a partial answer.
struct NonSplitError : Error {
  using Error::Error;
};

// Dense polynomial over Q(i), coefficients low degree first, no trailing
// zeros (zero polynomial is the empty vector).
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p);  // -1 for the zero polynomial
Scalar poly_eval(const Poly& p, const Scalar& x);
// Divides p by (t - root); throws if the remainder is nonzero.
Poly poly_deflate(const Poly& p, const Scalar& root);

struct RootList {
  std::vector<std::pair<Scalar, int>> roots;  // (root, multiplicity), sorted
  int remaining_degree = 0;                   // degree left after extraction
};

// All roots of p in Q(i), found by Gaussian-rational candidate enumeration
// (divisor pairs of the cleared constant and leading coefficients).
// Deterministic output order.
RootList find_roots(const Poly& p);

// As above but requires the polynomial to split completely over Q(i);
// throws NonSplitError otherwise.
std::vector<std::pair<Scalar, int>> find_roots_split(const Poly& p);

}  // namespace hf
