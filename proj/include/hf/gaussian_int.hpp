#pragma once

#include <gmpxx.h>

#include <vector>

#include "hf/scalar.hpp"

namespace hf {

// Gaussian integer, used by the fraction-free elimination and by root
// extraction over Q(i).
struct Gint {
  mpz_class re, im;

  Gint() : re(0), im(0) {}
  Gint(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  Gint(long r, long i = 0) : re(r), im(i) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Gint conj() const { return {re, -im}; }
  mpz_class norm() const { return re * re + im * im; }

  friend Gint operator+(const Gint& a, const Gint& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gint operator-(const Gint& a, const Gint& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gint operator-(const Gint& a) { return {-a.re, -a.im}; }
  friend Gint operator*(const Gint& a, const Gint& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gint& a, const Gint& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gint& a, const Gint& b) { return !(a == b); }
};

// True iff d divides z in Z[i]; quotient returned through q.
bool gint_divides(const Gint& d, const Gint& z, Gint* q = nullptr);

// Exact division; throws if not divisible.
Gint gint_exact_div(const Gint& z, const Gint& d);

// All divisors of z up to units (nonempty; z must be nonzero). Deterministic
// order. Uses trial-division factoring of the norm, which is fine for the
// small coefficients this project produces.
std::vector<Gint> gint_divisors(const Gint& z);

}  // namespace hf
