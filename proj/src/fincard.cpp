#include "polylaw/fincard.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace polylaw::fincard {

FinMap::FinMap(Card dom_, Card cod_, std::vector<int> values_)
    : dom(dom_), cod(cod_), values(std::move(values_)) {
  if (static_cast<Card>(values.size()) != dom)
    throw std::invalid_argument("FinMap: value count does not match domain");
  for (int v : values)
    if (v < 1 || v > cod)
      throw std::invalid_argument("FinMap: value outside codomain");
}

FinMap FinMap::identity(Card n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return FinMap(n, n, std::move(v));
}

FinMap FinMap::constant(Card n, Card cod, int value) {
  return FinMap(n, cod, std::vector<int>(n, value));
}

bool FinMap::is_bijection() const {
  if (dom != cod) return false;
  std::vector<bool> seen(cod, false);
  for (int v : values) {
    if (seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

bool FinMap::is_monotone() const {
  for (int i = 1; i < dom; ++i)
    if (values[i] < values[i - 1]) return false;
  return true;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: endpoint mismatch");
  std::vector<int> v(f.dom);
  for (int i = 0; i < f.dom; ++i) v[i] = g.values[f.values[i] - 1];
  return FinMap(f.dom, g.cod, std::move(v));
}

FinMap inverse(const FinMap& f) {
  assert(f.is_bijection());
  std::vector<int> v(f.dom);
  for (int i = 0; i < f.dom; ++i) v[f.values[i] - 1] = i + 1;
  return FinMap(f.cod, f.dom, std::move(v));
}

Span::Span(FinMap left_, FinMap right_)
    : left(std::move(left_)), right(std::move(right_)) {
  if (left.dom != right.dom)
    throw std::invalid_argument("Span: legs must share an apex");
}

namespace {

// Union-find with path compression over 0-based vertex indices.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if the two were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Pushout pushout(const Span& s) {
  const Card n = s.n(), m = s.m(), k = s.apex();
  UnionFind uf(n + m);
  for (int a = 1; a <= k; ++a) uf.unite(s.left(a) - 1, n + s.right(a) - 1);

  // Canonical labels: components in order of least vertex, n-side first.
  std::vector<int> label(n + m, 0);
  Card r = 0;
  for (int v = 0; v < n + m; ++v) {
    int root = uf.find(v);
    if (label[root] == 0) label[root] = ++r;
  }
  std::vector<int> t1(n), t2(m);
  for (int i = 0; i < n; ++i) t1[i] = label[uf.find(i)];
  for (int j = 0; j < m; ++j) t2[j] = label[uf.find(n + j)];
  return Pushout{r, FinMap(n, r, std::move(t1)), FinMap(m, r, std::move(t2))};
}

bool is_connected(const Span& s) { return pushout(s).r == 1; }

bool is_acyclic(const Span& s) {
  return s.n() + s.m() == s.apex() + pushout(s).r;
}

bool is_suitable_span(const Span& s) {
  const Pushout p = pushout(s);
  return p.r == 1 && s.n() + s.m() == s.apex() + 1;
}

CommutingSquare::CommutingSquare(Span s, FinMap bl, FinMap br)
    : span(std::move(s)), bottom_left(std::move(bl)), bottom_right(std::move(br)) {
  if (bottom_left.dom != span.n() || bottom_right.dom != span.m() ||
      bottom_left.cod != bottom_right.cod)
    throw std::invalid_argument("CommutingSquare: endpoint mismatch");
  for (int a = 1; a <= span.apex(); ++a)
    if (bottom_left(span.left(a)) != bottom_right(span.right(a)))
      throw std::invalid_argument("CommutingSquare: square does not commute");
}

std::vector<Span> induced_spans(const CommutingSquare& sq) {
  const Card r = sq.r();
  const Span& s = sq.span;
  // Fiber position of each element, preserving ambient order.
  std::vector<int> pos_n(s.n()), pos_m(s.m());
  std::vector<int> size_n(r, 0), size_m(r, 0), size_k(r, 0);
  for (int i = 1; i <= s.n(); ++i) pos_n[i - 1] = ++size_n[sq.bottom_left(i) - 1];
  for (int j = 1; j <= s.m(); ++j) pos_m[j - 1] = ++size_m[sq.bottom_right(j) - 1];

  std::vector<std::vector<int>> theta1(r), theta2(r);
  for (int a = 1; a <= s.apex(); ++a) {
    int c = sq.bottom_left(s.left(a)) - 1;
    theta1[c].push_back(pos_n[s.left(a) - 1]);
    theta2[c].push_back(pos_m[s.right(a) - 1]);
    ++size_k[c];
  }
  std::vector<Span> out;
  out.reserve(r);
  for (int c = 0; c < r; ++c)
    out.emplace_back(FinMap(size_k[c], size_n[c], std::move(theta1[c])),
                     FinMap(size_k[c], size_m[c], std::move(theta2[c])));
  return out;
}

bool is_pushout_square(const CommutingSquare& sq) {
  // A commuting square is a pushout iff the cocone identifies exactly the
  // pushout's components, bijectively onto {1,...,r}.
  const Pushout p = pushout(sq.span);
  if (p.r != sq.r()) return false;
  std::vector<int> image(p.r, 0);  // component -> cocone label
  for (int i = 1; i <= sq.span.n(); ++i) {
    int c = p.tau1(i) - 1;
    if (image[c] == 0)
      image[c] = sq.bottom_left(i);
    else if (image[c] != sq.bottom_left(i))
      return false;
  }
  for (int j = 1; j <= sq.span.m(); ++j) {
    int c = p.tau2(j) - 1;
    if (image[c] == 0)
      image[c] = sq.bottom_right(j);
    else if (image[c] != sq.bottom_right(j))
      return false;
  }
  std::vector<bool> hit(sq.r(), false);
  for (int c = 0; c < p.r; ++c) {
    if (image[c] == 0) return false;  // unreachable: every component has a vertex
    if (hit[image[c] - 1]) return false;
    hit[image[c] - 1] = true;
  }
  return true;
}

}  // namespace polylaw::fincard
