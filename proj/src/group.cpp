#include "hf/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace hf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= n() || seen[v]) throw Error("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw Error("Permutation: generator index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::compose(const Permutation& q) const {
  std::vector<int> im(n());
  for (int i = 0; i < n(); ++i) im[i] = images_[q.images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(n());
  for (int i = 0; i < n(); ++i) im[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

long Permutation::rank() const {
  // Lehmer code: rank in the lexicographic enumeration.
  long r = 0;
  long fact = 1;
  for (int k = 2; k <= n(); ++k) fact *= k;
  for (int i = 0; i < n(); ++i) {
    fact /= (n() - i);
    int smaller = 0;
    for (int j = i + 1; j < n(); ++j)
      if (images_[j] < images_[i]) ++smaller;
    r += smaller * fact;
  }
  return r;
}

long Permutation::inversions() const {
  long c = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (images_[i] > images_[j]) ++c;
  return c;
}

std::string Permutation::one_line() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i] + 1);
  }
  return s + ")";
}

Report FiniteGroup::validate() const {
  Report rep;
  bool assoc = true;
  std::string w;
  for (Elt a = 0; a < order && assoc; ++a)
    for (Elt b = 0; b < order && assoc; ++b)
      for (Elt c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          assoc = false;
          w = labels[a] + "," + labels[b] + "," + labels[c];
          break;
        }
  rep.add("group_assoc", assoc, w);
  bool id = true;
  for (Elt a = 0; a < order; ++a)
    if (mul(identity, a) != a || mul(a, identity) != a) id = false;
  rep.add("group_identity", id, id ? "" : "identity law");
  bool invok = true;
  for (Elt a = 0; a < order; ++a)
    if (mul(a, inv(a)) != identity || mul(inv(a), a) != identity) invok = false;
  rep.add("group_inverse", invok, invok ? "" : "inverse law");
  return rep;
}

bool GroupAutomorphism::is_identity() const {
  for (size_t i = 0; i < map.size(); ++i)
    if (map[i] != static_cast<Elt>(i)) return false;
  return true;
}

Elt SnGroup::index_of(const Permutation& p) const { return static_cast<Elt>(p.rank()); }

Elt SnGroup::w0() const { return index_of(longest_element(n)); }

SnGroup sn_group(int n) {
  if (n < 2 || n > 7) throw Error("sn_group: n must be in [2, 7]");
  SnGroup sn;
  sn.n = n;
  long order = 1;
  for (int k = 2; k <= n; ++k) order *= k;

  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  sn.perms.reserve(order);
  do {
    sn.perms.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));

  FiniteGroup& g = sn.group;
  g.order = static_cast<Elt>(order);
  g.mult.resize(order * order);
  g.inverse.resize(order);
  for (long a = 0; a < order; ++a) {
    for (long b = 0; b < order; ++b)
      g.mult[a * order + b] = static_cast<Elt>(sn.perms[a].compose(sn.perms[b]).rank());
    g.inverse[a] = static_cast<Elt>(sn.perms[a].inverse().rank());
  }
  g.identity = 0;

  for (int i = 1; i < n; ++i)
    sn.coxeter.elements.push_back(static_cast<Elt>(Permutation::transposition(n, i).rank()));

  // Labels: shortest word in the generators, lexicographically first among
  // shortest (FIFO BFS with generators in ascending order).
  g.labels.assign(order, "");
  g.labels[0] = "e";
  std::deque<Elt> queue = {0};
  std::vector<bool> seen(order, false);
  seen[0] = true;
  while (!queue.empty()) {
    Elt x = queue.front();
    queue.pop_front();
    for (int i = 0; i < n - 1; ++i) {
      Elt y = g.mul(x, sn.coxeter.elements[i]);
      if (!seen[y]) {
        seen[y] = true;
        g.labels[y] = (x == 0 ? "" : g.labels[x] + ".") + "s" + std::to_string(i + 1);
        queue.push_back(y);
      }
    }
  }
  return sn;
}

long coxeter_length(const Permutation& p) { return p.inversions(); }

Permutation longest_element(int n) {
  if (n < 2) throw Error("longest_element: n must be >= 2");
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - 1 - i;
  return Permutation(std::move(im));
}

std::vector<long> cayley_lengths(const FiniteGroup& g, const GeneratingSet& gens) {
  std::vector<long> dist(g.order, -1);
  dist[g.identity] = 0;
  std::deque<Elt> queue = {g.identity};
  while (!queue.empty()) {
    Elt x = queue.front();
    queue.pop_front();
    for (Elt s : gens.elements) {
      Elt y = g.mul(x, s);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

long cayley_length(const FiniteGroup& g, const GeneratingSet& gens, Elt x) {
  long d = cayley_lengths(g, gens)[x];
  if (d < 0) throw Error("cayley_length: element unreachable; set does not generate");
  return d;
}

GroupAutomorphism conjugation_automorphism(const FiniteGroup& g, Elt w) {
  GroupAutomorphism a;
  a.map.resize(g.order);
  Elt winv = g.inv(w);
  for (Elt x = 0; x < g.order; ++x) a.map[x] = g.mul(g.mul(w, x), winv);
  return a;
}

bool is_automorphism(const FiniteGroup& g, const GroupAutomorphism& a) {
  if (static_cast<Elt>(a.map.size()) != g.order) return false;
  std::vector<bool> hit(g.order, false);
  for (Elt x = 0; x < g.order; ++x) {
    if (a.map[x] < 0 || a.map[x] >= g.order || hit[a.map[x]]) return false;
    hit[a.map[x]] = true;
  }
  for (Elt x = 0; x < g.order; ++x)
    for (Elt y = 0; y < g.order; ++y)
      if (a(g.mul(x, y)) != g.mul(a(x), a(y))) return false;
  return true;
}

bool is_order_two_or_id(const FiniteGroup& g, const GroupAutomorphism& a) {
  for (Elt x = 0; x < g.order; ++x)
    if (a(a(x)) != x) return false;
  return true;
}

namespace {

Elt parse_word(const SnGroup& sn, const std::string& text) {
  Elt acc = sn.group.identity;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t dot = text.find('.', pos);
    std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (tok.size() < 2 || tok[0] != 's') throw Error("parse_element: bad generator '" + tok + "'");
    int i = std::stoi(tok.substr(1));
    if (i < 1 || i > sn.n - 1) throw Error("parse_element: generator index out of range");
    acc = sn.group.mul(acc, sn.coxeter.elements[i - 1]);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return acc;
}

Elt parse_one_line(const SnGroup& sn, const std::string& text) {
  std::vector<int> im;
  std::string num;
  for (size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' || c == ')') {
      if (num.empty()) throw Error("parse_element: bad one-line notation");
      im.push_back(std::stoi(num) - 1);
      num.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else {
      throw Error("parse_element: bad one-line notation");
    }
  }
  if (static_cast<int>(im.size()) != sn.n) throw Error("parse_element: wrong length");
  return sn.index_of(Permutation(std::move(im)));
}

}  // namespace

Elt parse_element(const SnGroup& sn, const std::string& text) {
  if (text == "e") return sn.group.identity;
  if (!text.empty() && text[0] == '(') return parse_one_line(sn, text);
  return parse_word(sn, text);
}

GeneratingSet parse_generating_set(const SnGroup& sn, const std::string& text) {
  if (text == "coxeter") return sn.coxeter;
  GeneratingSet gens;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw Error("parse_generating_set: empty entry");
    gens.elements.push_back(parse_element(sn, tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (gens.elements.empty()) throw Error("parse_generating_set: empty set");
  return gens;
}

}  // namespace hf
