#include "hf/roots.hpp"

#include <algorithm>
#include <map>

#include "hf/gaussian_int.hpp"

namespace hf {

bool gint_divides(const Gint& d, const Gint& z, Gint* q) {
  if (d.is_zero()) return z.is_zero();
  // z/d = z * conj(d) / N(d); divisible iff both components divide exactly.
  Gint num = z * d.conj();
  mpz_class n = d.norm();
  mpz_class qr, rr, qi, ri;
  mpz_tdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_tdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  if (sgn(rr) != 0 || sgn(ri) != 0) return false;
  if (q) *q = Gint(qr, qi);
  return true;
}

Gint gint_exact_div(const Gint& z, const Gint& d) {
  Gint q;
  if (!gint_divides(d, z, &q)) throw Error("gint_exact_div: not divisible");
  return q;
}

namespace {

// Trial-division factoring; adequate for the small norms this project sees.
std::map<mpz_class, int> factor_int(mpz_class n) {
  std::map<mpz_class, int> out;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// Gaussian primes dividing the rational prime p.
std::vector<Gint> gaussian_primes_over(const mpz_class& p) {
  if (p == 2) return {Gint(1, 1)};
  if (p % 4 == 3) return {Gint(p, 0)};
  // p = 1 mod 4: find a^2 + b^2 = p by search (p is small here).
  for (mpz_class a = 1; a * a <= p; ++a) {
    mpz_class b2 = p - a * a;
    mpz_class b = sqrt(b2);
    if (b * b == b2) return {Gint(a, b), Gint(a, -b)};
  }
  throw Error("gaussian_primes_over: no representation found");
}

}  // namespace

std::vector<Gint> gint_divisors(const Gint& z) {
  if (z.is_zero()) throw Error("gint_divisors: zero");
  // Factor z by dividing out Gaussian primes over the prime factors of N(z).
  std::vector<std::pair<Gint, int>> factors;
  Gint rest = z;
  for (const auto& [p, e] : factor_int(z.norm())) {
    (void)e;
    for (const Gint& pi : gaussian_primes_over(p)) {
      int k = 0;
      Gint q;
      while (gint_divides(pi, rest, &q)) {
        rest = q;
        ++k;
      }
      if (k > 0) factors.push_back({pi, k});
    }
  }
  // rest is now a unit.
  std::vector<Gint> divs = {Gint(1, 0)};
  for (const auto& [pi, e] : factors) {
    std::vector<Gint> next;
    next.reserve(divs.size() * (e + 1));
    for (const Gint& d : divs) {
      Gint acc = d;
      next.push_back(acc);
      for (int k = 1; k <= e; ++k) {
        acc = acc * pi;
        next.push_back(acc);
      }
    }
    divs = std::move(next);
  }
  return divs;
}

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_deflate(const Poly& p, const Scalar& root) {
  if (p.empty()) throw Error("poly_deflate: zero polynomial");
  Poly q(p.size() - 1);
  Scalar carry = p.back();
  for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  if (!carry.is_zero()) throw Error("poly_deflate: not a root");
  return q;
}

namespace {

// Clears denominators: returns a Z[i]-coefficient polynomial with the same
// roots.
std::vector<Gint> clear_denominators(const Poly& p) {
  mpz_class lcm(1);
  for (const Scalar& c : p) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den().get_mpz_t());
  }
  std::vector<Gint> out;
  out.reserve(p.size());
  for (const Scalar& c : p) {
    mpq_class re = c.re() * lcm, im = c.im() * lcm;
    out.emplace_back(re.get_num(), im.get_num());
  }
  return out;
}

Scalar gint_ratio(const Gint& u, const Gint& v) {
  // u / v in Q(i).
  mpq_class n(v.norm());
  Gint w = u * v.conj();
  return Scalar(mpq_class(w.re) / n, mpq_class(w.im) / n);
}

}  // namespace

RootList find_roots(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  if (p.empty()) throw Error("find_roots: zero polynomial");
  RootList out;

  // Strip roots at zero first.
  int zero_mult = 0;
  while (!p.empty() && p.front().is_zero()) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Scalar(0), zero_mult});

  while (poly_deg(p) >= 1) {
    std::vector<Gint> z = clear_denominators(p);
    std::vector<Gint> unums = gint_divisors(z.front());
    std::vector<Gint> vdens = gint_divisors(z.back());
    static const Gint units[4] = {Gint(1, 0), Gint(-1, 0), Gint(0, 1), Gint(0, -1)};

    std::vector<Scalar> candidates;
    for (const Gint& u : unums)
      for (const Gint& v : vdens)
        for (const Gint& w : units) candidates.push_back(gint_ratio(u * w, v));
    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    bool found = false;
    for (const Scalar& cand : candidates) {
      if (poly_eval(p, cand).is_zero()) {
        int mult = 0;
        while (poly_deg(p) >= 1 && poly_eval(p, cand).is_zero()) {
          p = poly_deflate(p, cand);
          ++mult;
        }
        out.roots.push_back({cand, mult});
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  out.remaining_degree = std::max(poly_deg(p), 0);
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return Scalar::cmp(a.first, b.first) < 0; });
  return out;
}

std::vector<std::pair<Scalar, int>> find_roots_split(const Poly& p) {
  RootList rl = find_roots(p);
  if (rl.remaining_degree > 0)
    throw NonSplitError("polynomial does not split over Q(i); remaining degree " +
                        std::to_string(rl.remaining_degree));
  return rl.roots;
}

}  // namespace hf
