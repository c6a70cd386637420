#include "polylaw/kleisli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polylaw/fincard.hpp"

namespace polylaw::kleisli {

namespace {

using polycat::FamilyMatching;
using polycat::PolyWorld;

std::tuple<int, int, int, int> pair_key(const FamilyMatching::Pair& p) {
  return {p.f_index, p.out_pos, p.g_index, p.in_pos};
}

void sort_pairs(std::vector<FamilyMatching::Pair>& ps) {
  std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
    return pair_key(a) < pair_key(b);
  });
}

// 1-based offsets of each member's block inside the concatenated boundary.
std::vector<int> offsets(const HomTable& t, const std::vector<int>& members,
                         bool dom_side) {
  std::vector<int> off(members.size() + 1);
  off[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ObjList& b = dom_side ? t.dom(members[i]) : t.cod(members[i]);
    off[i + 1] = off[i] + (int)b.size();
  }
  return off;
}

int member_of(const std::vector<int>& off, int global_pos) {
  int m = 0;
  while (off[m + 1] <= global_pos) ++m;
  return m;
}

bool tau_suitable(const HomTable& F, const HomTable& G,
                  const FormalComposite& x) {
  const int k = (int)x.fs.size(), l = (int)x.gs.size(),
            t = (int)x.tau.size();
  std::vector<int> left(t), right(t);
  for (int e = 0; e < t; ++e) {
    left[e] = x.tau[e].f_index + 1;
    right[e] = x.tau[e].g_index + 1;
  }
  (void)F;
  (void)G;
  return fincard::is_suitable_span(
      fincard::Span(fincard::FinMap(t, k, std::move(left)),
                    fincard::FinMap(t, l, std::move(right))));
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All ways to write target as a concatenation of element domains (f-layer)
// or codomains (g-layer) over t, with at most max_families members.
std::vector<std::vector<int>> split_into_members(const HomTable& t,
                                                 const ObjList& target,
                                                 bool dom_side,
                                                 int max_families) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == (int)target.size()) out.push_back(cur);
    if ((int)cur.size() == max_families) return;
    for (int e = 0; e < (int)t.elems.size(); ++e) {
      const ObjList& b = dom_side ? t.dom(e) : t.cod(e);
      if (pos + (int)b.size() > (int)target.size()) continue;
      if (!std::equal(b.begin(), b.end(), target.begin() + pos)) continue;
      cur.push_back(e);
      self(self, pos + (int)b.size());
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

int HomTable::exchange_dom(int e, int i) const {
  auto it = exchange_dom_tbl.find({e, i});
  if (it == exchange_dom_tbl.end())
    throw std::out_of_range("HomTable::exchange_dom: entry missing");
  return it->second;
}

int HomTable::exchange_cod(int e, int i) const {
  auto it = exchange_cod_tbl.find({e, i});
  if (it == exchange_cod_tbl.end())
    throw std::out_of_range("HomTable::exchange_cod: entry missing");
  return it->second;
}

std::vector<int> HomTable::hom(const ObjList& d, const ObjList& c) const {
  std::vector<int> out;
  for (int e = 0; e < (int)elems.size(); ++e)
    if (elems[e].dom == d && elems[e].cod == c) out.push_back(e);
  return out;
}

HomTable hom_table(const polycat::PolyTable& t) {
  return {t.objects, t.bound, t.maps, t.exchange_dom_tbl, t.exchange_cod_tbl};
}

HomTable unit_table(const ObjList& objects) {
  HomTable u;
  u.objects = objects;
  u.bound = 1;
  for (const auto& x : objects) u.elems.push_back({{x}, {x}});
  return u;
}

bool unit_inhabited(const ObjList& dom, const ObjList& cod) {
  return dom.size() == 1 && dom == cod;
}

std::vector<int> FormalComposite::key() const {
  std::vector<int> k;
  k.push_back((int)fs.size());
  k.push_back((int)gs.size());
  k.insert(k.end(), fs.begin(), fs.end());
  k.insert(k.end(), gs.begin(), gs.end());
  for (const auto& p : tau) {
    k.push_back(p.f_index);
    k.push_back(p.out_pos);
    k.push_back(p.g_index);
    k.push_back(p.in_pos);
  }
  k.insert(k.end(), sigma.begin(), sigma.end());
  k.insert(k.end(), upsilon.begin(), upsilon.end());
  return k;
}

void validate_composite(const HomTable& F, const HomTable& G,
                        const FormalComposite& x, const ObjList& gamma,
                        const ObjList& delta) {
  auto bad = [](const std::string& msg) {
    throw std::invalid_argument("FormalComposite: " + msg);
  };
  const int n = (int)gamma.size(), p = (int)delta.size();
  if (!fincard::FinMap(n, n, x.sigma).is_bijection())
    bad("sigma is not a permutation");
  if (!fincard::FinMap(p, p, x.upsilon).is_bijection())
    bad("upsilon is not a permutation");
  ObjList psi;
  for (int f : x.fs) {
    const ObjList& d = F.dom(f);
    psi.insert(psi.end(), d.begin(), d.end());
  }
  if ((int)psi.size() != n) bad("f-layer domains do not cover Gamma");
  for (int i = 0; i < n; ++i)
    if (psi[i] != gamma[x.sigma[i] - 1]) bad("sigma Gamma mismatch");
  ObjList cat;
  for (int g : x.gs) {
    const ObjList& c = G.cod(g);
    cat.insert(cat.end(), c.begin(), c.end());
  }
  if ((int)cat.size() != p) bad("g-layer codomains do not cover Delta");
  for (int i = 0; i < p; ++i)
    if (delta[i] != cat[x.upsilon[i] - 1]) bad("upsilon Delta mismatch");
  int mids = 0;
  for (int f : x.fs) mids += (int)F.cod(f).size();
  int gins = 0;
  for (int g : x.gs) gins += (int)G.dom(g).size();
  if (mids != gins || (int)x.tau.size() != mids)
    bad("tau is not a full matching of the middles");
  std::set<std::pair<int, int>> outs, ins;
  for (const auto& pr : x.tau) {
    const ObjList& fc = F.cod(x.fs.at(pr.f_index));
    const ObjList& gd = G.dom(x.gs.at(pr.g_index));
    if (pr.out_pos < 1 || pr.out_pos > (int)fc.size() || pr.in_pos < 1 ||
        pr.in_pos > (int)gd.size())
      bad("tau position out of range");
    if (fc[pr.out_pos - 1] != gd[pr.in_pos - 1]) bad("tau pairs unequal objects");
    if (!outs.insert({pr.f_index, pr.out_pos}).second ||
        !ins.insert({pr.g_index, pr.in_pos}).second)
      bad("tau reuses a slot");
  }
  if (!tau_suitable(F, G, x)) bad("tau is not suitable");
}

std::vector<FormalComposite> enumerate_composites(const HomTable& F,
                                                  const HomTable& G,
                                                  const ObjList& gamma,
                                                  const ObjList& delta,
                                                  int max_families) {
  if ((int)gamma.size() > std::max(F.bound, G.bound) ||
      (int)delta.size() > std::max(F.bound, G.bound))
    throw std::invalid_argument("enumerate_composites: boundary exceeds bound");
  const int n = (int)gamma.size(), p = (int)delta.size();
  std::vector<FormalComposite> out;
  for (const auto& sigma : permutations(n)) {
    ObjList sgam(n);
    for (int i = 0; i < n; ++i) sgam[i] = gamma[sigma[i] - 1];
    auto fss = split_into_members(F, sgam, /*dom_side=*/true, max_families);
    if (fss.empty()) continue;
    for (const auto& upsilon : permutations(p)) {
      ObjList cat(p);
      for (int i = 0; i < p; ++i) cat[upsilon[i] - 1] = delta[i];
      auto gss = split_into_members(G, cat, /*dom_side=*/false, max_families);
      for (const auto& fs : fss) {
        std::vector<std::pair<int, int>> fslots;  // (f_index, out_pos)
        for (int i = 0; i < (int)fs.size(); ++i)
          for (int q = 1; q <= (int)F.cod(fs[i]).size(); ++q)
            fslots.push_back({i, q});
        for (const auto& gs : gss) {
          std::vector<std::pair<int, int>> gslots;
          for (int j = 0; j < (int)gs.size(); ++j)
            for (int q = 1; q <= (int)G.dom(gs[j]).size(); ++q)
              gslots.push_back({j, q});
          const int t = (int)fslots.size();
          if ((int)gslots.size() != t) continue;
          if ((int)fs.size() + (int)gs.size() != t + 1) continue;
          for (const auto& m : permutations(t)) {
            FormalComposite x{sigma, fs, {}, gs, upsilon};
            bool ok = true;
            for (int e = 0; e < t && ok; ++e) {
              auto [fi, op] = fslots[e];
              auto [gj, ip] = gslots[m[e] - 1];
              ok = F.cod(fs[fi])[op - 1] == G.dom(gs[gj])[ip - 1];
              x.tau.push_back({fi, op, gj, ip});
            }
            if (!ok || !tau_suitable(F, G, x)) continue;
            sort_pairs(x.tau);
            out.push_back(std::move(x));
          }
        }
      }
    }
  }
  // Sort and dedupe on cached keys; comparing composites directly would
  // rebuild the key per comparison.
  std::vector<std::pair<std::vector<int>, FormalComposite>> keyed;
  keyed.reserve(out.size());
  for (auto& x : out) {
    auto k = x.key();
    keyed.emplace_back(std::move(k), std::move(x));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [k, x] : keyed)
    if (out.empty() || !(x == out.back())) out.push_back(std::move(x));
  return out;
}

std::vector<FormalComposite> coend_moves(const HomTable& F, const HomTable& G,
                                         const FormalComposite& x) {
  std::vector<FormalComposite> out;
  auto foffd = offsets(F, x.fs, true);
  auto goffc = offsets(G, x.gs, false);
  // Swap inside a domain block of an f-member: acts on sigma as well.
  for (int i = 0; i < (int)x.fs.size(); ++i)
    for (int a = 1; a < (int)F.dom(x.fs[i]).size(); ++a) {
      FormalComposite y = x;
      y.fs[i] = F.exchange_dom(x.fs[i], a);
      int j = foffd[i] + a - 1;  // 1-based global position of the first slot
      std::swap(y.sigma[j - 1], y.sigma[j]);
      out.push_back(std::move(y));
    }
  // Swap inside a middle block on the f-side: tau re-indexes.
  for (int i = 0; i < (int)x.fs.size(); ++i)
    for (int a = 1; a < (int)F.cod(x.fs[i]).size(); ++a) {
      FormalComposite y = x;
      y.fs[i] = F.exchange_cod(x.fs[i], a);
      for (auto& pr : y.tau)
        if (pr.f_index == i && (pr.out_pos == a || pr.out_pos == a + 1))
          pr.out_pos = pr.out_pos == a ? a + 1 : a;
      sort_pairs(y.tau);
      out.push_back(std::move(y));
    }
  // Swap inside a middle block on the g-side.
  for (int j = 0; j < (int)x.gs.size(); ++j)
    for (int a = 1; a < (int)G.dom(x.gs[j]).size(); ++a) {
      FormalComposite y = x;
      y.gs[j] = G.exchange_dom(x.gs[j], a);
      for (auto& pr : y.tau)
        if (pr.g_index == j && (pr.in_pos == a || pr.in_pos == a + 1))
          pr.in_pos = pr.in_pos == a ? a + 1 : a;
      sort_pairs(y.tau);
      out.push_back(std::move(y));
    }
  // Swap inside a codomain block of a g-member: acts on upsilon as well.
  for (int j = 0; j < (int)x.gs.size(); ++j)
    for (int a = 1; a < (int)G.cod(x.gs[j]).size(); ++a) {
      FormalComposite y = x;
      y.gs[j] = G.exchange_cod(x.gs[j], a);
      int b = goffc[j] + a - 1;
      for (auto& v : y.upsilon)
        if (v == b || v == b + 1) v = v == b ? b + 1 : b;
      out.push_back(std::move(y));
    }
  // Swap two adjacent f-members: sigma blocks and tau indices move along.
  for (int i = 0; i + 1 < (int)x.fs.size(); ++i) {
    FormalComposite y = x;
    std::swap(y.fs[i], y.fs[i + 1]);
    int s = foffd[i] - 1, da = foffd[i + 1] - foffd[i],
        db = foffd[i + 2] - foffd[i + 1];
    std::rotate(y.sigma.begin() + s, y.sigma.begin() + s + da,
                y.sigma.begin() + s + da + db);
    for (auto& pr : y.tau)
      if (pr.f_index == i || pr.f_index == i + 1)
        pr.f_index = pr.f_index == i ? i + 1 : i;
    sort_pairs(y.tau);
    out.push_back(std::move(y));
  }
  // Swap two adjacent g-members.
  for (int j = 0; j + 1 < (int)x.gs.size(); ++j) {
    FormalComposite y = x;
    std::swap(y.gs[j], y.gs[j + 1]);
    int o = goffc[j], dj = goffc[j + 1] - goffc[j],
        dj1 = goffc[j + 2] - goffc[j + 1];
    for (auto& v : y.upsilon) {
      if (v >= o && v < o + dj) v += dj1;
      else if (v >= o + dj && v < o + dj + dj1) v -= dj;
    }
    for (auto& pr : y.tau)
      if (pr.g_index == j || pr.g_index == j + 1)
        pr.g_index = pr.g_index == j ? j + 1 : j;
    sort_pairs(y.tau);
    out.push_back(std::move(y));
  }
  return out;
}

namespace {

// Closure under moves plus connected components, keeping the member lists.
std::vector<std::vector<FormalComposite>> coend_components(
    const HomTable& F, const HomTable& G, std::vector<FormalComposite> elems) {
  std::map<std::vector<int>, int> index;  // cached keys, cheap comparisons
  std::vector<FormalComposite> pool;
  std::vector<int> parent;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto add = [&](FormalComposite x) {
    auto [it, fresh] = index.try_emplace(x.key(), (int)pool.size());
    if (fresh) {
      pool.push_back(std::move(x));
      parent.push_back(it->second);
    }
    return it->second;
  };
  for (auto& x : elems) add(std::move(x));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    FormalComposite x = pool[i];
    for (auto& y : coend_moves(F, G, x)) {
      int a = find((int)i), b = find(add(std::move(y)));
      if (a != b) parent[a] = b;
    }
  }
  std::vector<std::vector<int>> member_ids(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    member_ids[find((int)i)].push_back((int)i);
  // Pool order is key order within the initial elems, but closure-found
  // members land at the end; restore the deterministic order per class.
  std::vector<std::pair<std::vector<int>, std::vector<FormalComposite>>> keyed;
  for (auto& ids : member_ids) {
    if (ids.empty()) continue;
    std::vector<std::pair<std::vector<int>, FormalComposite>> ms;
    for (int i : ids) ms.emplace_back(pool[i].key(), pool[i]);
    std::sort(ms.begin(), ms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FormalComposite> members;
    for (auto& [k, x] : ms) members.push_back(std::move(x));
    keyed.emplace_back(members[0].key(), std::move(members));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<FormalComposite>> out;
  for (auto& [k, members] : keyed) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::vector<CoendClass> coend_quotient(const HomTable& F, const HomTable& G,
                                       std::vector<FormalComposite> elems) {
  std::vector<CoendClass> out;
  for (auto& c : coend_components(F, G, std::move(elems)))
    out.push_back({c[0], (int)c.size()});
  return out;
}

std::vector<CoendClass> tensor_elements(const HomTable& F, const HomTable& G,
                                        const ObjList& gamma,
                                        const ObjList& delta,
                                        int max_families) {
  return coend_quotient(F, G,
                        enumerate_composites(F, G, gamma, delta, max_families));
}

int apply_mult(polycat::TableWorld& w, const FormalComposite& x,
               const ObjList& gamma, const ObjList& delta) {
  const auto& maps = w.table().maps;
  std::vector<int> foffd(x.fs.size() + 1, 1), goffc(x.gs.size() + 1, 1);
  for (std::size_t i = 0; i < x.fs.size(); ++i)
    foffd[i + 1] = foffd[i] + (int)maps[x.fs[i]].dom.size();
  for (std::size_t j = 0; j < x.gs.size(); ++j)
    goffc[j + 1] = goffc[j] + (int)maps[x.gs[j]].cod.size();
  FamilyMatching fm{x.fs, x.gs, x.tau};
  polycat::PolyComposite c = polycompose(w, fm);
  std::vector<polycat::BoundarySource> dom_target, cod_target;
  for (int i = 0; i < (int)gamma.size(); ++i) {
    int j = 0;
    while (x.sigma[j] != i + 1) ++j;
    int m = member_of(foffd, j + 1);
    dom_target.push_back({false, m, j + 2 - foffd[m]});
  }
  for (int i = 0; i < (int)delta.size(); ++i) {
    int v = x.upsilon[i];
    int m = member_of(goffc, v);
    cod_target.push_back({true, m, v + 1 - goffc[m]});
  }
  return align_boundary(w, c, dom_target, cod_target);
}

namespace {

// --- three-layer associativity ----------------------------------------------

// Flat three-layer data: members per layer, with the f-g and g-h pairings.
// The combined tripartite graph is required to be a tree.
struct ThreeLayer {
  std::vector<int> fs, gs, hs;
  std::vector<FamilyMatching::Pair> fg;  // f cod slot -> g dom slot
  std::vector<FamilyMatching::Pair> gh;  // g cod slot -> h dom slot
};

struct Triple {
  int layer;  // 0 = f, 1 = g, 2 = h
  int member;
  int pos;
  auto operator<=>(const Triple&) const = default;
};

struct Evaled {
  int ref;
  std::vector<Triple> dom, cod;
};

// Fuse the connected components of one adjacent pair of layers, then compose
// the results against the remaining layer. fuse_fg picks which pair goes
// first; the two choices are the two bracketings.
Evaled eval_route(PolyWorld& w, const ThreeLayer& tl, bool fuse_fg) {
  const auto& la = fuse_fg ? tl.fs : tl.gs;
  const auto& lb = fuse_fg ? tl.gs : tl.hs;
  const auto& inner = fuse_fg ? tl.fg : tl.gh;
  const auto& outer = fuse_fg ? tl.gh : tl.fg;
  const int layer_a = fuse_fg ? 0 : 1, layer_b = fuse_fg ? 1 : 2;
  const int na = (int)la.size(), nb = (int)lb.size();
  std::vector<int> parent(na + nb);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : inner) parent[find(e.f_index)] = find(na + e.g_index);
  std::map<int, int> comp_of_root;
  std::vector<std::vector<int>> amem, bmem;
  for (int v = 0; v < na + nb; ++v) {
    int r = find(v);
    auto [it, fresh] = comp_of_root.try_emplace(r, (int)amem.size());
    if (fresh) {
      amem.emplace_back();
      bmem.emplace_back();
    }
    (v < na ? amem[it->second] : bmem[it->second]).push_back(v < na ? v : v - na);
  }
  const int nc = (int)amem.size();
  std::vector<int> refs(nc);
  std::vector<std::vector<Triple>> cdom(nc), ccod(nc);
  for (int c = 0; c < nc; ++c) {
    FamilyMatching fm;
    std::map<int, int> alocal, blocal;
    for (int v : amem[c]) {
      alocal[v] = (int)fm.fs.size();
      fm.fs.push_back(la[v]);
    }
    for (int v : bmem[c]) {
      blocal[v] = (int)fm.gs.size();
      fm.gs.push_back(lb[v]);
    }
    for (const auto& e : inner)
      if (alocal.count(e.f_index))
        fm.pairs.push_back({alocal[e.f_index], e.out_pos, blocal[e.g_index],
                            e.in_pos});
    polycat::PolyComposite pc = polycompose(w, fm);
    refs[c] = pc.ref;
    for (const auto& s : pc.dom_src)
      cdom[c].push_back({s.from_g ? layer_b : layer_a,
                         s.from_g ? bmem[c][s.member] : amem[c][s.member],
                         s.pos});
    for (const auto& s : pc.cod_src)
      ccod[c].push_back({s.from_g ? layer_b : layer_a,
                         s.from_g ? bmem[c][s.member] : amem[c][s.member],
                         s.pos});
  }
  auto comp_of = [&](int layer, int member) {
    int v = layer == layer_a ? member : na + member;
    return comp_of_root.at(find(v));
  };
  FamilyMatching fm2;
  std::vector<Triple> fdom, fcod;  // boundary triples of fm2's own members
  if (fuse_fg) {
    fm2.fs = refs;
    fm2.gs = tl.hs;
    for (const auto& e : outer) {
      int c = comp_of(1, e.f_index);
      Triple want{1, e.f_index, e.out_pos};
      int op = 1 + (int)(std::find(ccod[c].begin(), ccod[c].end(), want) -
                         ccod[c].begin());
      fm2.pairs.push_back({c, op, e.g_index, e.in_pos});
    }
  } else {
    fm2.fs = tl.fs;
    fm2.gs = refs;
    for (const auto& e : outer) {
      int c = comp_of(1, e.g_index);
      Triple want{1, e.g_index, e.in_pos};
      int ip = 1 + (int)(std::find(cdom[c].begin(), cdom[c].end(), want) -
                         cdom[c].begin());
      fm2.pairs.push_back({e.f_index, e.out_pos, c, ip});
    }
  }
  polycat::PolyComposite fin = polycompose(w, fm2);
  Evaled out;
  out.ref = fin.ref;
  auto translate = [&](const polycat::BoundarySource& s, bool dom_side) {
    bool is_comp = fuse_fg ? !s.from_g : s.from_g;
    if (!is_comp) return Triple{fuse_fg ? 2 : 0, s.member, s.pos};
    const auto& tr = dom_side ? cdom[s.member] : ccod[s.member];
    return tr[s.pos - 1];
  };
  for (const auto& s : fin.dom_src) out.dom.push_back(translate(s, true));
  for (const auto& s : fin.cod_src) out.cod.push_back(translate(s, false));
  return out;
}

// Exchange an evaluated route's boundary into the given triple order.
int align_triples(PolyWorld& w, const Evaled& e,
                  const std::vector<Triple>& dom_t,
                  const std::vector<Triple>& cod_t) {
  auto perm_onto = [](const std::vector<Triple>& cur,
                      const std::vector<Triple>& target) {
    std::vector<int> perm(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
      auto it = std::find(cur.begin(), cur.end(), target[i]);
      if (it == cur.end())
        throw std::invalid_argument("align_triples: boundary sources differ");
      perm[i] = 1 + (int)(it - cur.begin());
    }
    return perm;
  };
  int ref = polycat::exchange_perm_dom(w, e.ref, perm_onto(e.dom, dom_t));
  return polycat::exchange_perm_cod(w, ref, perm_onto(e.cod, cod_t));
}

// Random tripartite tree over the table's elements; empty optional when the
// sampler fails to place at least one member in every layer.
std::optional<ThreeLayer> sample_three_layer(const HomTable& F,
                                             std::mt19937& rng) {
  if (F.elems.empty()) return std::nullopt;
  auto pick = [&](int n) { return (int)(rng() % (unsigned)n); };
  ThreeLayer tl;
  tl.gs.push_back(pick((int)F.elems.size()));
  std::set<std::pair<int, int>> used_fcod, used_gdom, used_gcod, used_hdom;
  auto free_slots = [&](const std::vector<int>& layer, bool dom_side,
                        const std::set<std::pair<int, int>>& used) {
    std::vector<std::pair<int, int>> out;  // (member, pos)
    for (int m = 0; m < (int)layer.size(); ++m) {
      const ObjList& b = dom_side ? F.dom(layer[m]) : F.cod(layer[m]);
      for (int q = 1; q <= (int)b.size(); ++q)
        if (!used.count({m, q})) out.push_back({m, q});
    }
    return out;
  };
  auto elems_with = [&](const std::string& obj, bool dom_side) {
    std::vector<std::pair<int, int>> out;  // (element, pos)
    for (int e = 0; e < (int)F.elems.size(); ++e) {
      const ObjList& b = dom_side ? F.dom(e) : F.cod(e);
      for (int q = 1; q <= (int)b.size(); ++q)
        if (b[q - 1] == obj) out.push_back({e, q});
    }
    return out;
  };
  auto attach_f = [&]() {
    auto slots = free_slots(tl.gs, true, used_gdom);
    if (slots.empty()) return false;
    auto [gm, gq] = slots[pick((int)slots.size())];
    auto cands = elems_with(F.dom(tl.gs[gm])[gq - 1], false);
    if (cands.empty()) return false;
    auto [e, p] = cands[pick((int)cands.size())];
    int fm = (int)tl.fs.size();
    tl.fs.push_back(e);
    tl.fg.push_back({fm, p, gm, gq});
    used_fcod.insert({fm, p});
    used_gdom.insert({gm, gq});
    return true;
  };
  auto attach_h = [&]() {
    auto slots = free_slots(tl.gs, false, used_gcod);
    if (slots.empty()) return false;
    auto [gm, gp] = slots[pick((int)slots.size())];
    auto cands = elems_with(F.cod(tl.gs[gm])[gp - 1], true);
    if (cands.empty()) return false;
    auto [e, q] = cands[pick((int)cands.size())];
    int hm = (int)tl.hs.size();
    tl.hs.push_back(e);
    tl.gh.push_back({gm, gp, hm, q});
    used_gcod.insert({gm, gp});
    used_hdom.insert({hm, q});
    return true;
  };
  auto attach_g = [&]() {
    // Attach a fresh g either below a free f-output or above a free h-input.
    auto fsl = free_slots(tl.fs, false, used_fcod);
    auto hsl = free_slots(tl.hs, true, used_hdom);
    int total = (int)fsl.size() + (int)hsl.size();
    if (total == 0) return false;
    int c = pick(total);
    if (c < (int)fsl.size()) {
      auto [fm, p] = fsl[c];
      auto cands = elems_with(F.cod(tl.fs[fm])[p - 1], true);
      if (cands.empty()) return false;
      auto [e, q] = cands[pick((int)cands.size())];
      int gm = (int)tl.gs.size();
      tl.gs.push_back(e);
      tl.fg.push_back({fm, p, gm, q});
      used_fcod.insert({fm, p});
      used_gdom.insert({gm, q});
    } else {
      auto [hm, q] = hsl[c - (int)fsl.size()];
      auto cands = elems_with(F.dom(tl.hs[hm])[q - 1], false);
      if (cands.empty()) return false;
      auto [e, p] = cands[pick((int)cands.size())];
      int gm = (int)tl.gs.size();
      tl.gs.push_back(e);
      tl.gh.push_back({gm, p, hm, q});
      used_gcod.insert({gm, p});
      used_hdom.insert({hm, q});
    }
    return true;
  };
  int extra = pick(4);
  for (int s = 0; s < extra; ++s) {
    switch (pick(3)) {
      case 0: attach_f(); break;
      case 1: attach_h(); break;
      default: attach_g(); break;
    }
  }
  if (tl.fs.empty() && !attach_f()) return std::nullopt;
  if (tl.hs.empty() && !attach_h()) return std::nullopt;
  return tl;
}

std::string describe(const ThreeLayer& tl) {
  std::ostringstream os;
  auto dump = [&](const char* tag, const std::vector<int>& v) {
    os << tag << "=[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  dump("fs", tl.fs);
  os << " ";
  dump("gs", tl.gs);
  os << " ";
  dump("hs", tl.hs);
  return os.str();
}

std::vector<ObjList> all_lists(const ObjList& objects, int max_len) {
  std::vector<ObjList> out{{}};
  std::vector<ObjList> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<ObjList> next;
    for (const auto& l : frontier)
      for (const auto& x : objects) {
        ObjList l2 = l;
        l2.push_back(x);
        next.push_back(l2);
        out.push_back(std::move(l2));
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

report::Report check_monad(const polycat::PolyTable& table, int max_len,
                           int max_families, int trials, unsigned seed) {
  report::Report r;
  polycat::TableWorld w(table);
  HomTable F = hom_table(table);

  // Multiplication is typed and constant on coend classes.
  auto lists = all_lists(table.objects, std::min(max_len, table.bound));
  for (const auto& gamma : lists)
    for (const auto& delta : lists) {
      try {
        auto raw = enumerate_composites(F, F, gamma, delta, max_families);
        if (raw.empty()) continue;
        for (const auto& cls : coend_components(F, F, raw)) {
          // Members whose composite strays outside the truncation are skipped.
          std::vector<int> vals;
          for (const auto& x : cls) {
            try {
              vals.push_back(apply_mult(w, x, gamma, delta));
            } catch (const std::out_of_range&) {
            }
          }
          if (vals.empty()) continue;
          r.check("mult-typed",
                  table.maps[vals[0]].dom == gamma &&
                      table.maps[vals[0]].cod == delta,
                  "class rep maps outside hom, ref " + std::to_string(vals[0]));
          bool constant = std::all_of(vals.begin(), vals.end(),
                                      [&](int v) { return v == vals[0]; });
          r.check("mult-welldefined", constant,
                  "class of size " + std::to_string(cls.size()) +
                      " with unequal composites, rep ref " +
                      std::to_string(vals[0]));
        }
      } catch (const std::exception& ex) {
        r.fail("checker-error", std::string("mult: ") + ex.what());
      }
    }

  // Unit laws: identity layers compose away.
  for (int e = 0; e < (int)table.maps.size(); ++e) {
    const ObjList& gamma = table.maps[e].dom;
    const ObjList& delta = table.maps[e].cod;
    try {
      FormalComposite left;  // identities on top, e below
      for (int i = 0; i < (int)gamma.size(); ++i) {
        left.sigma.push_back(i + 1);
        left.fs.push_back(w.identity(gamma[i]));
        left.tau.push_back({i, 1, 0, i + 1});
      }
      left.gs = {e};
      for (int i = 0; i < (int)delta.size(); ++i) left.upsilon.push_back(i + 1);
      r.check("unit-left", apply_mult(w, left, gamma, delta) == e,
              "element " + std::to_string(e));
    } catch (const std::exception& ex) {
      r.fail("unit-left",
             "element " + std::to_string(e) + ": " + ex.what());
    }
    try {
      FormalComposite right;  // e on top, identities below
      for (int i = 0; i < (int)gamma.size(); ++i) right.sigma.push_back(i + 1);
      right.fs = {e};
      for (int i = 0; i < (int)delta.size(); ++i) {
        right.gs.push_back(w.identity(delta[i]));
        right.tau.push_back({0, i + 1, i, 1});
        right.upsilon.push_back(i + 1);
      }
      r.check("unit-right", apply_mult(w, right, gamma, delta) == e,
              "element " + std::to_string(e));
    } catch (const std::exception& ex) {
      r.fail("unit-right",
             "element " + std::to_string(e) + ": " + ex.what());
    }
  }

  // Associativity: both bracketings of random three-layer trees agree after
  // the boundary re-indexing fixed by provenance. Samples straying outside
  // the table's truncation are skipped, not failed.
  std::mt19937 rng(seed);
  int completed = 0;
  for (int attempt = 0; attempt < 10 * trials && completed < trials;
       ++attempt) {
    auto tl = sample_three_layer(F, rng);
    if (!tl) continue;
    try {
      Evaled a = eval_route(w, *tl, /*fuse_fg=*/true);
      Evaled b = eval_route(w, *tl, /*fuse_fg=*/false);
      std::vector<Triple> dom_t = a.dom, cod_t = a.cod;
      std::sort(dom_t.begin(), dom_t.end());
      std::sort(cod_t.begin(), cod_t.end());
      int ra = align_triples(w, a, dom_t, cod_t);
      int rb = align_triples(w, b, dom_t, cod_t);
      r.check("assoc", ra == rb, describe(*tl));
      ++completed;
    } catch (const std::out_of_range&) {
      // outside the truncation
    } catch (const std::invalid_argument& ex) {
      r.fail("checker-error", std::string("assoc: ") + ex.what());
    }
  }
  if (completed == 0)
    r.fail("assoc", "no three-layer sample stayed inside the table");
  return r;
}

}  // namespace polylaw::kleisli
