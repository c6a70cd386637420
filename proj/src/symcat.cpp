#include "polylaw/symcat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polylaw::symcat {

using fincard::compose;
using fincard::inverse;

S1Mor::S1Mor(FinMap perm_) : perm(std::move(perm_)) {
  if (!perm.is_bijection()) throw std::invalid_argument("S1Mor: not a bijection");
}

S2Obj::S2Obj(FinMap phi_) : phi(std::move(phi_)) {
  if (!phi.is_monotone()) throw std::invalid_argument("S2Obj: map not monotone");
}

S2Mor::S2Mor(S2Obj src_, S2Obj tgt_, FinMap f_n_, FinMap f_m_)
    : src(std::move(src_)), tgt(std::move(tgt_)), f_n(std::move(f_n_)), f_m(std::move(f_m_)) {
  if (!f_n.is_bijection() || !f_m.is_bijection() || f_n.dom != src.n() ||
      f_n.cod != tgt.n() || f_m.dom != src.m() || f_m.cod != tgt.m())
    throw std::invalid_argument("S2Mor: legs are not bijections on the endpoints");
  if (compose(tgt.phi, f_n) != compose(f_m, src.phi))
    throw std::invalid_argument("S2Mor: square does not commute");
}

S3Obj::S3Obj(FinMap phi1_, FinMap phi2_) : phi1(std::move(phi1_)), phi2(std::move(phi2_)) {
  if (phi1.cod != phi2.dom)
    throw std::invalid_argument("S3Obj: legs not composable");
  if (!phi1.is_monotone() || !phi2.is_monotone())
    throw std::invalid_argument("S3Obj: legs not monotone");
}

S3Mor::S3Mor(S3Obj src_, S3Obj tgt_, FinMap f_n_, FinMap f_m_, FinMap f_r_)
    : src(std::move(src_)),
      tgt(std::move(tgt_)),
      f_n(std::move(f_n_)),
      f_m(std::move(f_m_)),
      f_r(std::move(f_r_)) {
  if (!f_n.is_bijection() || !f_m.is_bijection() || !f_r.is_bijection() ||
      f_n.dom != src.n() || f_n.cod != tgt.n() || f_m.dom != src.m() ||
      f_m.cod != tgt.m() || f_r.dom != src.r() || f_r.cod != tgt.r())
    throw std::invalid_argument("S3Mor: legs are not bijections on the endpoints");
  if (compose(tgt.phi1, f_n) != compose(f_m, src.phi1) ||
      compose(tgt.phi2, f_m) != compose(f_r, src.phi2))
    throw std::invalid_argument("S3Mor: a ladder square does not commute");
}

std::vector<FinMap> all_bijections(Card n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<FinMap> out;
  do {
    out.emplace_back(n, n, v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<S2Mor> s2_hom(const S2Obj& phi, const S2Obj& psi) {
  std::vector<S2Mor> out;
  if (phi.n() != psi.n() || phi.m() != psi.m()) return out;
  for (const FinMap& fn : all_bijections(phi.n())) {
    FinMap top = compose(psi.phi, fn);
    for (const FinMap& fm : all_bijections(phi.m()))
      if (top == compose(fm, phi.phi)) out.emplace_back(phi, psi, fn, fm);
  }
  return out;
}

S2Mor s2_compose(const S2Mor& g, const S2Mor& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("s2_compose: endpoint mismatch");
  return S2Mor(f.src, g.tgt, compose(g.f_n, f.f_n), compose(g.f_m, f.f_m));
}

S2Mor s2_identity(const S2Obj& phi) {
  return S2Mor(phi, phi, FinMap::identity(phi.n()), FinMap::identity(phi.m()));
}

std::vector<S3Mor> s3_hom(const S3Obj& phi, const S3Obj& psi) {
  std::vector<S3Mor> out;
  if (phi.n() != psi.n() || phi.m() != psi.m() || phi.r() != psi.r()) return out;
  for (const FinMap& fn : all_bijections(phi.n()))
    for (const FinMap& fm : all_bijections(phi.m())) {
      if (compose(psi.phi1, fn) != compose(fm, phi.phi1)) continue;
      for (const FinMap& fr : all_bijections(phi.r()))
        if (compose(psi.phi2, fm) == compose(fr, phi.phi2))
          out.emplace_back(phi, psi, fn, fm, fr);
    }
  return out;
}

S3Mor s3_compose(const S3Mor& g, const S3Mor& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("s3_compose: endpoint mismatch");
  return S3Mor(f.src, g.tgt, compose(g.f_n, f.f_n), compose(g.f_m, f.f_m),
               compose(g.f_r, f.f_r));
}

S3Mor s3_identity(const S3Obj& phi) {
  return S3Mor(phi, phi, FinMap::identity(phi.n()), FinMap::identity(phi.m()),
               FinMap::identity(phi.r()));
}

S3Mor s3_inverse(const S3Mor& f) {
  return S3Mor(f.tgt, f.src, inverse(f.f_n), inverse(f.f_m), inverse(f.f_r));
}

S2Obj unit_chain(Card n) { return S2Obj(FinMap::identity(n)); }

S2Obj collapse_chain(Card n) { return S2Obj(FinMap::constant(n, 1, 1)); }

Card mult_card(const S2Obj& phi) { return phi.n(); }

S2Obj flatten_outer(const S3Obj& phi) { return S2Obj(phi.phi1); }

S2Obj flatten_inner(const S3Obj& phi) { return S2Obj(compose(phi.phi2, phi.phi1)); }

std::vector<S2Obj> enumerate_s2(Card n, Card m) {
  std::vector<S2Obj> out;
  if (n == 0) {
    out.emplace_back(FinMap(0, m, {}));
    return out;
  }
  if (m == 0) return out;
  std::vector<int> v(n, 1);
  while (true) {
    out.emplace_back(FinMap(n, m, v));
    // Next weakly increasing sequence in lexicographic order.
    int i = n - 1;
    while (i >= 0 && v[i] == m) --i;
    if (i < 0) break;
    ++v[i];
    for (int j = i + 1; j < n; ++j) v[j] = v[i];
  }
  return out;
}

std::vector<S3Obj> enumerate_s3(Card n, Card m, Card r) {
  std::vector<S3Obj> out;
  for (const S2Obj& a : enumerate_s2(n, m))
    for (const S2Obj& b : enumerate_s2(m, r)) out.emplace_back(a.phi, b.phi);
  return out;
}

}  // namespace polylaw::symcat
