#include "hf/scalar.hpp"

#include <cctype>

namespace hf {

namespace {

mpq_class canon(mpq_class q) {
  q.canonicalize();
  return q;
}

// Emits a canonical rational, optionally forcing a leading sign.
std::string rat_str(const mpq_class& q) { return q.get_str(); }

bool parse_rational(std::string_view s, size_t& pos, mpq_class& out) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  std::string num(s.substr(start, pos - start));
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) {
      pos = start;
      return false;
    }
    den = std::string(s.substr(dstart, pos - dstart));
  }
  mpz_class d(den);
  if (sgn(d) == 0) return false;  // "1/0" is malformed
  out = canon(mpq_class(mpz_class(num), d));
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) throw Error("Scalar: zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(canon(std::move(re))), im_(canon(std::move(im))) {}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("Scalar: inverse of zero");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  int c = ::cmp(a.re_, b.re_);
  if (c != 0) return c;
  return ::cmp(a.im_, b.im_);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  if (sgn(im_) == 0) return rat_str(re_);
  std::string imag = rat_str(abs(im_)) + "i";
  if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
  return rat_str(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::optional<Scalar> Scalar::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  size_t pos = 0;
  mpq_class first;
  if (!parse_rational(s, pos, first)) return std::nullopt;
  if (pos == s.size()) return Scalar(first, mpq_class(0));
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) return std::nullopt;
    return Scalar(mpq_class(0), first);
  }
  // RATIONAL SIGN RATIONAL "i": the sign belongs to the imaginary part.
  if (s[pos] != '+' && s[pos] != '-') return std::nullopt;
  mpq_class second;
  size_t tail = pos;
  if (!parse_rational(s, tail, second)) return std::nullopt;
  if (tail >= s.size() || s[tail] != 'i' || tail + 1 != s.size()) return std::nullopt;
  return Scalar(first, second);
}

}  // namespace hf
