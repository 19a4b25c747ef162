#pragma once

#include <memory>

#include "hf/hopf.hpp"

namespace hf {

// Length function data on a finite group: word lengths for a generating set,
// the diagonal length-multiplication operator on the group algebra, and the
// canonical trace (evaluation at the identity).
struct SpectralTripleData {
  FiniteGroup group;
  GeneratingSet gens;
  std::vector<long> lengths;
  SparseMatrix dirac;
  SparseVec trace;
};

// Throws if gens does not generate.
SpectralTripleData build_spectral_triple(const FiniteGroup& g, const GeneratingSet& gens);

struct Coaction {
  SparseMatrix map;  // M -> M (x) H
  std::shared_ptr<const StarAlgebra> module;
  std::shared_ptr<const HopfAlgebra> hopf;
};

struct InconsistentImagesError : Error {
  using Error::Error;
};

// Extends generator images multiplicatively along one fixed reduced word per
// group element, then checks alpha(x) alpha(y) = alpha(xy) for every pair.
// Throws InconsistentImagesError (with the failing pair) if the images do not
// define a homomorphism.
Coaction coaction_from_generator_images(const SpectralTripleData& triple,
                                        std::shared_ptr<const HopfAlgebra> hopf,
                                        const std::vector<SparseVec>& images);

// Unital *-homomorphism, coassociativity, counit law, and the Podles span
// condition (exact rank equality in finite dimension).
Report verify_coaction(const Coaction& c);

// Trace preservation, commutation with the length operator, preservation of
// the span of length-one elements, and trace preservation on products of two
// generators. The first condition is reported separately even though the
// second implies it.
Report verify_isometric(const Coaction& c, const SpectralTripleData& triple);

}  // namespace hf
