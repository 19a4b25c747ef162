#pragma once

#include <string>

#include "hf/hopf.hpp"

namespace hf {

// Canonical "hopf-forge/v1" interchange: scalars as exact strings, indices
// sorted ascending, zero entries omitted. Emission of a parsed canonical file
// reproduces it byte for byte.
std::string hopf_to_json(const HopfAlgebra& h);

// Throws Error on any structural or grammatical problem (bad format tag,
// out-of-range index, malformed scalar). Semantic problems (axiom failures)
// are left to the verifier.
HopfAlgebra hopf_from_json(const std::string& text);

}  // namespace hf
