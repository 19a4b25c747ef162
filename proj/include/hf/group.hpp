#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hf/report.hpp"
#include "hf/scalar.hpp"

namespace hf {

using Elt = std::int32_t;  // group element index

// One-line notation on {1..n}, stored 0-based: images[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // s_i = (i, i+1), 1-based i

  int n() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i]; }  // 0-based
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& q) const;  // (p*q)(x) = p(q(x))
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  // Lexicographic rank among all permutations of the same n.
  long rank() const;
  // Number of inversions; equals the Coxeter length.
  long inversions() const;
  std::string one_line() const;  // "(2,1,3)"

 private:
  std::vector<int> images_;
};

struct FiniteGroup {
  Elt order = 0;
  std::vector<std::string> labels;
  std::vector<Elt> mult;  // order x order, row-major: mult[a*order+b] = ab
  Elt identity = 0;
  std::vector<Elt> inverse;

  Elt mul(Elt a, Elt b) const { return mult[static_cast<size_t>(a) * order + b]; }
  Elt inv(Elt a) const { return inverse[a]; }
  // Exhaustive associativity/identity/inverse validation.
  Report validate() const;
};

struct GroupAutomorphism {
  std::vector<Elt> map;

  Elt operator()(Elt x) const { return map[x]; }
  bool is_identity() const;
};

struct GeneratingSet {
  std::vector<Elt> elements;
};

// Symmetric group with fixed lexicographic one-line enumeration, Coxeter
// generators in order, and reduced-word labels.
struct SnGroup {
  int n = 0;
  FiniteGroup group;
  GeneratingSet coxeter;
  std::vector<Permutation> perms;  // index -> permutation

  Elt index_of(const Permutation& p) const;
  Elt w0() const;  // index of the longest element
};

// n in [2, 7]; throws on anything else.
SnGroup sn_group(int n);

long coxeter_length(const Permutation& p);
Permutation longest_element(int n);

// BFS distances from the identity under right multiplication by gens, exactly
// as given (no inverse closure). Unreachable elements get -1.
std::vector<long> cayley_lengths(const FiniteGroup& g, const GeneratingSet& gens);
// Throws if x is unreachable (the set does not generate).
long cayley_length(const FiniteGroup& g, const GeneratingSet& gens, Elt x);

GroupAutomorphism conjugation_automorphism(const FiniteGroup& g, Elt w);
bool is_automorphism(const FiniteGroup& g, const GroupAutomorphism& a);
bool is_order_two_or_id(const FiniteGroup& g, const GroupAutomorphism& a);

// Parses "e", a reduced word "s1.s2.s1", or one-line "(2,1,3)".
Elt parse_element(const SnGroup& sn, const std::string& text);
// Comma-separated words, or the literal "coxeter".
GeneratingSet parse_generating_set(const SnGroup& sn, const std::string& text);

}  // namespace hf
