#include "polylaw/matchings.hpp"

#include <numeric>
#include <stdexcept>

namespace polylaw::matchings {

using fincard::compose;
using fincard::CommutingSquare;
using fincard::is_pushout_square;
using fincard::is_suitable_span;

Matching::Matching(S2Obj phi_, S2Obj psi_, FinMap f_n_)
    : phi(std::move(phi_)), psi(std::move(psi_)), f_n(std::move(f_n_)) {
  if (!f_n.is_bijection() || f_n.dom != phi.n() || f_n.cod != psi.n())
    throw std::invalid_argument("Matching: f_n is not a bijection on the domains");
  if (!is_suitable_span(span()))
    throw std::invalid_argument("Matching: induced span of parts is not suitable");
}

Span Matching::span() const { return Span(phi.phi, compose(psi.phi, f_n)); }

WhiskeredElemR::WhiskeredElemR(S3Obj phi_, S3Obj psi_, FinMap f_n_, FinMap f_m_)
    : phi(std::move(phi_)), psi(std::move(psi_)), f_n(std::move(f_n_)), f_m(std::move(f_m_)) {
  if (!f_n.is_bijection() || !f_m.is_bijection() || f_n.dom != phi.n() ||
      f_n.cod != psi.n() || f_m.dom != phi.m() || f_m.cod != psi.m())
    throw std::invalid_argument("WhiskeredElemR: legs are not bijections on the domains");
  if (compose(psi.phi1, f_n) != compose(f_m, phi.phi1))
    throw std::invalid_argument("WhiskeredElemR: upper square does not commute");
  if (!is_suitable_span(lower_span()))
    throw std::invalid_argument("WhiskeredElemR: lower span is not suitable");
}

Span WhiskeredElemR::lower_span() const {
  return Span(phi.phi2, compose(psi.phi2, f_m));
}

WhiskeredElemL::WhiskeredElemL(S3Obj phi_, S3Obj psi_, FinMap f_n_, FinMap f_r_)
    : phi(std::move(phi_)), psi(std::move(psi_)), f_n(std::move(f_n_)), f_r(std::move(f_r_)) {
  if (!f_n.is_bijection() || !f_r.is_bijection() || f_n.dom != phi.n() ||
      f_n.cod != psi.n() || f_r.dom != phi.r() || f_r.cod != psi.r())
    throw std::invalid_argument("WhiskeredElemL: legs are not bijections on the domains");
  if (compose(f_r, compose(phi.phi2, phi.phi1)) !=
      compose(psi.phi2, compose(psi.phi1, f_n)))
    throw std::invalid_argument("WhiskeredElemL: outer rectangle does not commute");
  if (psi.r() + phi.n() != phi.m() + psi.m())
    throw std::invalid_argument("WhiskeredElemL: cardinality equation fails");
  if (!is_pushout_square(upper_square()))
    throw std::invalid_argument("WhiskeredElemL: square is not a pushout");
}

CommutingSquare WhiskeredElemL::upper_square() const {
  return CommutingSquare(Span(phi.phi1, compose(psi.phi1, f_n)),
                         compose(f_r, phi.phi2), psi.phi2);
}

namespace {

// Rollback-free union-find: union by size, no path compression, so a failed
// branch restores state by undoing its own unions.
struct UndoableUnionFind {
  std::vector<int> parent, size;
  explicit UndoableUnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  // Returns the child root absorbed by the union, or -1 if already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return b;
  }
  void undo(int child) {
    size[find(child)] -= size[child];
    parent[child] = child;
  }
};

void delta1_backtrack(const S2Obj& phi, const S2Obj& psi, int next,
                      std::vector<int>& assigned, std::vector<bool>& used,
                      UndoableUnionFind& uf, std::vector<Matching>& out) {
  const int n = phi.n();
  if (next > n) {
    out.emplace_back(phi, psi, FinMap(n, n, assigned));
    return;
  }
  for (int b = 1; b <= n; ++b) {
    if (used[b - 1]) continue;
    // Edge phi(next) -- psi(b) in the bipartite part graph; closing a cycle
    // (including a doubled edge) can never extend to a tree.
    int child = uf.unite(phi.phi(next) - 1, phi.m() + psi.phi(b) - 1);
    if (child < 0) continue;
    used[b - 1] = true;
    assigned[next - 1] = b;
    delta1_backtrack(phi, psi, next + 1, assigned, used, uf, out);
    used[b - 1] = false;
    uf.undo(child);
  }
}

}  // namespace

std::vector<Matching> delta1_elements(const S2Obj& phi, const S2Obj& psi) {
  std::vector<Matching> out;
  if (phi.n() != psi.n() || phi.m() + psi.m() != phi.n() + 1) return out;
  const int n = phi.n();
  // With m_phi + m_psi = n + 1 vertices and n acyclic edges the part graph
  // is automatically a spanning tree, so no final connectivity check needed.
  std::vector<int> assigned(n);
  std::vector<bool> used(n, false);
  UndoableUnionFind uf(phi.m() + psi.m());
  delta1_backtrack(phi, psi, 1, assigned, used, uf, out);
  return out;
}

Matching delta1_act_left(const S2Mor& g, const Matching& x) {
  if (!(g.src == x.psi)) throw std::invalid_argument("delta1_act_left: endpoint mismatch");
  return Matching(x.phi, g.tgt, compose(g.f_n, x.f_n));
}

Matching delta1_act_right(const Matching& x, const S2Mor& h) {
  if (!(h.tgt == x.phi)) throw std::invalid_argument("delta1_act_right: endpoint mismatch");
  return Matching(h.src, x.psi, compose(x.f_n, h.f_n));
}

S1Mor delta1_project(const Matching& x) { return S1Mor(x.f_n); }

std::vector<WhiskeredElemR> whiskered_elements_right(const S3Obj& phi, const S3Obj& psi) {
  std::vector<WhiskeredElemR> out;
  if (phi.n() != psi.n() || phi.m() != psi.m()) return out;
  if (phi.r() + psi.r() != phi.m() + 1) return out;  // lower span could not be a tree
  for (const FinMap& fn : symcat::all_bijections(phi.n())) {
    FinMap top = compose(psi.phi1, fn);
    for (const FinMap& fm : symcat::all_bijections(phi.m())) {
      if (top != compose(fm, phi.phi1)) continue;
      if (is_suitable_span(Span(phi.phi2, compose(psi.phi2, fm))))
        out.emplace_back(phi, psi, fn, fm);
    }
  }
  return out;
}

std::vector<WhiskeredElemL> whiskered_elements_left(const S3Obj& phi, const S3Obj& psi) {
  std::vector<WhiskeredElemL> out;
  if (phi.n() != psi.n() || phi.r() != psi.r()) return out;
  if (psi.r() + phi.n() != phi.m() + psi.m()) return out;
  for (const FinMap& fn : symcat::all_bijections(phi.n())) {
    FinMap upper_right = compose(psi.phi1, fn);
    for (const FinMap& fr : symcat::all_bijections(phi.r())) {
      if (compose(fr, compose(phi.phi2, phi.phi1)) !=
          compose(psi.phi2, upper_right))
        continue;
      CommutingSquare sq(Span(phi.phi1, upper_right), compose(fr, phi.phi2), psi.phi2);
      if (is_pushout_square(sq)) out.emplace_back(phi, psi, fn, fr);
    }
  }
  return out;
}

}  // namespace polylaw::matchings
