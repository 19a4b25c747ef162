#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Q(i): rational real and imaginary part, always in canonical form
// (lowest terms, positive denominators). Equality is exact.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  Scalar(long num, long den);
  Scalar(mpq_class re, mpq_class im);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }
  // |z|^2 as a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inv() const;  // throws on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inv(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order (re first, then im); used only for deterministic sorting.
  static int cmp(const Scalar& a, const Scalar& b);

  // Canonical text form: "0", "3", "-1/2", "2i", "1-2/3i", ...
  std::string str() const;
  // Parses the grammar RATIONAL := INT | INT "/" POSINT;
  // SCALAR := RATIONAL | RATIONAL SIGN RATIONAL "i" | RATIONAL "i".
  // Input need not be in lowest terms; result is canonical.
  static std::optional<Scalar> parse(std::string_view s);

 private:
  mpq_class re_, im_;
};

}  // namespace hf
