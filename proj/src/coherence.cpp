#include "polylaw/coherence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylaw/parallel.hpp"

namespace polylaw::coherence {

using fincard::compose;
using fincard::FinMap;
using fincard::inverse;
using matchings::delta1_act_left;
using matchings::delta1_act_right;
using matchings::delta1_elements;
using matchings::delta1_project;
using matchings::Matching;
using matchings::WhiskeredElemL;
using matchings::WhiskeredElemR;
using symcat::all_bijections;
using symcat::enumerate_s2;
using symcat::enumerate_s3;
using symcat::flatten_inner;
using symcat::flatten_outer;
using symcat::s2_compose;
using symcat::s2_hom;
using symcat::S2Mor;
using symcat::S2Obj;
using symcat::s3_hom;
using symcat::S3Mor;
using symcat::S3Obj;
using symcat::unit_chain;

namespace {

long long factorial(int n) {
  long long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

void append_map(std::vector<int>& key, const FinMap& f) {
  key.push_back(f.dom);
  key.push_back(f.cod);
  key.insert(key.end(), f.values.begin(), f.values.end());
}

std::string show(const FinMap& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) os << ',';
    os << f.values[i];
  }
  os << '@' << f.cod;
  return os.str();
}

std::string show(const S2Obj& phi) { return show(phi.phi); }

std::string show(const S3Obj& phi) {
  return show(phi.phi1) + " ; " + show(phi.phi2);
}

S2Mor s2_inverse(const S2Mor& u) {
  return S2Mor(u.tgt, u.src, inverse(u.f_n), inverse(u.f_m));
}

// Partition items into connected components under the neighbor relation.
// Every neighbor must itself be an item (enumerations are complete), else
// std::logic_error. Members keep enumeration order; classes are ordered by
// their first member.
template <typename T, typename KeyFn, typename MovesFn>
std::vector<std::vector<T>> quotient(const std::vector<T>& items, KeyFn key,
                                     MovesFn moves) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < items.size(); ++i) index[key(items[i])] = static_cast<int>(i);

  std::vector<int> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const T& nb : moves(items[i])) {
      auto it = index.find(key(nb));
      if (it == index.end())
        throw std::logic_error("quotient: move left the enumerated set");
      int a = find(static_cast<int>(i));
      int b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<T>> groups;
  for (std::size_t i = 0; i < items.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(items[i]);
  std::vector<std::vector<T>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<int> matching_key(const Matching& x) {
  std::vector<int> key;
  append_map(key, x.phi.phi);
  append_map(key, x.psi.phi);
  append_map(key, x.f_n);
  return key;
}

std::vector<int> s2mor_key(const S2Mor& u) {
  std::vector<int> key;
  append_map(key, u.src.phi);
  append_map(key, u.tgt.phi);
  append_map(key, u.f_n);
  append_map(key, u.f_m);
  return key;
}

bool sets_equal(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b,
                bool* distinct = nullptr) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (distinct)
    *distinct = std::adjacent_find(a.begin(), a.end()) == a.end() &&
                std::adjacent_find(b.begin(), b.end()) == b.end();
  return a == b;
}

}  // namespace

KElement::KElement(WhiskeredElemR f_, WhiskeredElemL g_, S2Mor h_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
  if (!(g.phi == f.psi))
    throw std::invalid_argument("KElement: g does not start at f's target chain");
  if (!(h.src == flatten_outer(g.psi)))
    throw std::invalid_argument("KElement: h does not start at xi's first leg");
}

Matching pdd3_forward(const KElement& x) {
  return Matching(flatten_inner(x.f.phi), x.h.tgt,
                  compose(x.h.f_n, compose(x.g.f_n, x.f.f_n)));
}

std::vector<KElement> enumerate_k_elements(const S3Obj& phi, const S2Obj& rho) {
  std::vector<KElement> out;
  if (rho.n() != phi.n()) return out;
  const int r_mid = phi.m() + 1 - phi.r();  // lower-level tree condition
  if (r_mid < 0) return out;
  for (const S3Obj& psi : enumerate_s3(phi.n(), phi.m(), r_mid)) {
    auto fs = matchings::whiskered_elements_right(phi, psi);
    if (fs.empty()) continue;
    for (const S3Obj& xi : enumerate_s3(phi.n(), rho.m(), r_mid)) {
      auto gs = matchings::whiskered_elements_left(psi, xi);
      if (gs.empty()) continue;
      auto hs = s2_hom(flatten_outer(xi), rho);
      for (const auto& f : fs)
        for (const auto& g : gs)
          for (const auto& h : hs) out.emplace_back(f, g, h);
    }
  }
  return out;
}

namespace {

std::vector<int> k_key(const KElement& x) {
  std::vector<int> key;
  append_map(key, x.f.psi.phi1);
  append_map(key, x.f.psi.phi2);
  append_map(key, x.g.psi.phi1);
  append_map(key, x.g.psi.phi2);
  append_map(key, x.f.f_n);
  append_map(key, x.f.f_m);
  append_map(key, x.g.f_n);
  append_map(key, x.g.f_r);
  append_map(key, x.h.f_n);
  append_map(key, x.h.f_m);
  return key;
}

// Re-index either middle chain along a chain isomorphism; the element's
// composite matching is unchanged.
std::vector<KElement> k_moves(const KElement& x) {
  std::vector<KElement> out;
  const S3Obj& psi = x.f.psi;
  const S3Obj& xi = x.g.psi;
  for (const S3Obj& psi2 : enumerate_s3(psi.n(), psi.m(), psi.r())) {
    for (const S3Mor& u : s3_hom(psi, psi2)) {
      WhiskeredElemR f2(x.f.phi, psi2, compose(u.f_n, x.f.f_n),
                        compose(u.f_m, x.f.f_m));
      WhiskeredElemL g2(psi2, xi, compose(x.g.f_n, inverse(u.f_n)),
                        compose(x.g.f_r, inverse(u.f_r)));
      out.emplace_back(f2, g2, x.h);
    }
  }
  for (const S3Obj& xi2 : enumerate_s3(xi.n(), xi.m(), xi.r())) {
    for (const S3Mor& v : s3_hom(xi, xi2)) {
      WhiskeredElemL g2(psi, xi2, compose(v.f_n, x.g.f_n),
                        compose(v.f_r, x.g.f_r));
      S2Mor h2(flatten_outer(xi2), x.h.tgt, compose(x.h.f_n, inverse(v.f_n)),
               compose(x.h.f_m, inverse(v.f_m)));
      out.emplace_back(x.f, g2, h2);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<KElement>> k_element_classes(const S3Obj& phi,
                                                     const S2Obj& rho) {
  return quotient(enumerate_k_elements(phi, rho), k_key, k_moves);
}

report::Report check_pdd2(Card bound) {
  report::Report rep;
  auto check_inclusion = [&](const std::string& tag,
                             const std::vector<FinMap>& perms, Card n,
                             const std::string& cell) {
    std::vector<std::vector<int>> keys;
    keys.reserve(perms.size());
    for (const FinMap& p : perms) keys.push_back(p.values);
    std::sort(keys.begin(), keys.end());
    bool distinct = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    bool ok = distinct;
    if (!perms.empty()) {
      std::vector<std::vector<int>> all;
      for (const FinMap& p : all_bijections(n)) all.push_back(p.values);
      std::sort(all.begin(), all.end());
      ok = ok && keys == all;
    }
    rep.check(tag, ok, cell);
  };

  for (Card n_phi = 0; n_phi <= bound; ++n_phi) {
    for (Card m_phi = 0; m_phi <= bound; ++m_phi) {
      for (const S2Obj& phi : enumerate_s2(n_phi, m_phi)) {
        for (Card n = 0; n <= bound; ++n) {
          const std::string cell = "phi=" + show(phi) + " n=" + std::to_string(n);
          const long long expected =
              (m_phi == 1 && n == n_phi) ? factorial(n) : 0;

          auto lower = delta1_elements(phi, unit_chain(n));
          rep.check("pdd2-lower-count",
                    static_cast<long long>(lower.size()) == expected, cell);
          std::vector<FinMap> lower_perms;
          for (const Matching& x : lower)
            lower_perms.push_back(delta1_project(x).perm);
          check_inclusion("pdd2-lower-inclusion", lower_perms, n, cell);

          auto upper = s2_hom(phi, symcat::collapse_chain(n));
          rep.check("pdd2-upper-count",
                    static_cast<long long>(upper.size()) == expected, cell);
          std::vector<FinMap> upper_perms;
          for (const S2Mor& u : upper) upper_perms.push_back(u.f_n);
          check_inclusion("pdd2-upper-inclusion", upper_perms, n, cell);

          // Mirrored orientation: the identity chain feeding the matching.
          auto counit = delta1_elements(unit_chain(n), phi);
          rep.check("pdd2-counit-lower",
                    static_cast<long long>(counit.size()) == expected, cell);
          std::vector<FinMap> counit_perms;
          for (const Matching& x : counit)
            counit_perms.push_back(delta1_project(x).perm);
          check_inclusion("pdd2-counit-inclusion", counit_perms, n, cell);

          auto counit_upper = s2_hom(symcat::collapse_chain(n), phi);
          rep.check("pdd2-counit-upper",
                    static_cast<long long>(counit_upper.size()) == expected,
                    cell);
        }
      }
    }
  }
  return rep;
}

report::Report check_pdd3(Card bound) {
  struct Cell {
    S3Obj phi;
    S2Obj rho;
  };
  std::vector<Cell> cells;
  for (Card n = 0; n <= bound; ++n)
    for (Card m = 0; m <= bound; ++m)
      for (Card r = 0; r <= bound; ++r)
        for (const S3Obj& phi : enumerate_s3(n, m, r))
          for (Card nr = 0; nr <= bound; ++nr)
            for (Card mr = 0; mr <= bound; ++mr)
              for (const S2Obj& rho : enumerate_s2(nr, mr))
                cells.push_back({phi, rho});

  std::vector<report::Report> parts(cells.size());
  parallel::parallel_for(static_cast<int>(cells.size()), [&](int ci) {
    report::Report& rep = parts[ci];
    const S3Obj& phi = cells[ci].phi;
    const S2Obj& rho = cells[ci].rho;
    const std::string cell = "phi=(" + show(phi) + ") rho=" + show(rho);
    try {
      const S2Obj flat = flatten_inner(phi);
      auto target = delta1_elements(flat, rho);
      auto elems = enumerate_k_elements(phi, rho);
      if (elems.empty()) {
        rep.check("pdd3-bijection", target.empty(), cell + " [empty side]");
        return;
      }

      // Arity bookkeeping: an inhabited cell forces the tree equation on
      // the flattened boundary.
      rep.check("pdd3-euler", rho.m() + phi.r() == phi.n() + 1, cell);

      auto classes = quotient(elems, k_key, k_moves);
      std::vector<std::vector<int>> images;
      bool constant = true;
      for (const auto& cls : classes) {
        Matching img = pdd3_forward(cls.front());
        for (const KElement& x : cls)
          if (!(pdd3_forward(x) == img)) constant = false;
        images.push_back(matching_key(img));
      }
      rep.check("pdd3-forward-constant", constant, cell);

      std::vector<std::vector<int>> target_keys;
      for (const Matching& t : target) target_keys.push_back(matching_key(t));
      bool distinct = false;
      bool bij = sets_equal(images, target_keys, &distinct) && distinct;
      rep.check("pdd3-bijection", bij, cell);

      // Orientation reversal: inverting every bijection must carry the
      // matching set onto the one with swapped endpoints.
      std::vector<std::vector<int>> mirrored;
      for (const Matching& t : target)
        mirrored.push_back(matching_key(Matching(rho, flat, inverse(t.f_n))));
      std::vector<std::vector<int>> reverse_keys;
      for (const Matching& t : delta1_elements(rho, flat))
        reverse_keys.push_back(matching_key(t));
      rep.check("pdd3-mirror", sets_equal(mirrored, reverse_keys), cell);
    } catch (const std::exception& e) {
      rep.fail("checker-error", cell + ": " + e.what());
    }
  });

  report::Report rep;
  for (const auto& part : parts) rep.merge(part);
  return rep;
}

namespace {

// One formal middle adjacent to the target: pairs of a matching into the
// middle and a square from the middle to the target, modulo re-indexing the
// middle. Collapses to the direct matching set with injective projection.
void check_cell_right(report::Report& rep, const std::string& tag,
                      const S2Obj& base, const S2Obj& target) {
  const std::string cell = "base=" + show(base) + " target=" + show(target);
  struct Elem {
    Matching d;
    S2Mor w;
  };
  auto key = [](const Elem& e) {
    std::vector<int> k = matching_key(e.d);
    auto wk = s2mor_key(e.w);
    k.insert(k.end(), wk.begin(), wk.end());
    return k;
  };
  const auto middles = enumerate_s2(target.n(), target.m());
  std::vector<Elem> elems;
  for (const S2Obj& chi : middles)
    for (const Matching& d : delta1_elements(base, chi))
      for (const S2Mor& w : s2_hom(chi, target)) elems.push_back({d, w});
  auto moves = [&](const Elem& e) {
    std::vector<Elem> out;
    for (const S2Obj& chi2 : middles)
      for (const S2Mor& u : s2_hom(e.d.psi, chi2))
        out.push_back({delta1_act_left(u, e.d), s2_compose(e.w, s2_inverse(u))});
    return out;
  };
  auto classes = quotient(elems, key, moves);

  bool constant = true;
  std::vector<std::vector<int>> images;
  for (const auto& cls : classes) {
    Matching img = delta1_act_left(cls.front().w, cls.front().d);
    for (const Elem& e : cls)
      if (!(delta1_act_left(e.w, e.d) == img)) constant = false;
    images.push_back(matching_key(img));
  }
  std::vector<std::vector<int>> target_keys;
  std::vector<std::vector<int>> projections;
  for (const Matching& t : delta1_elements(base, target)) {
    target_keys.push_back(matching_key(t));
    projections.push_back(delta1_project(t).perm.values);
  }
  bool distinct = false;
  bool bij = sets_equal(images, target_keys, &distinct) && distinct;
  std::sort(projections.begin(), projections.end());
  bool inj = std::adjacent_find(projections.begin(), projections.end()) ==
             projections.end();
  rep.check(tag, constant && bij && inj, cell);
}

// The mirrored variant: the middle sits next to the source.
void check_cell_left(report::Report& rep, const std::string& tag,
                     const S2Obj& source, const S2Obj& target) {
  const std::string cell = "source=" + show(source) + " target=" + show(target);
  struct Elem {
    S2Mor w;
    Matching d;
  };
  auto key = [](const Elem& e) {
    std::vector<int> k = s2mor_key(e.w);
    auto dk = matching_key(e.d);
    k.insert(k.end(), dk.begin(), dk.end());
    return k;
  };
  const auto middles = enumerate_s2(source.n(), source.m());
  std::vector<Elem> elems;
  for (const S2Obj& chi : middles)
    for (const S2Mor& w : s2_hom(source, chi))
      for (const Matching& d : delta1_elements(chi, target)) elems.push_back({w, d});
  auto moves = [&](const Elem& e) {
    std::vector<Elem> out;
    for (const S2Obj& chi2 : middles)
      for (const S2Mor& u : s2_hom(e.d.phi, chi2))
        out.push_back({s2_compose(u, e.w), delta1_act_right(e.d, s2_inverse(u))});
    return out;
  };
  auto classes = quotient(elems, key, moves);

  bool constant = true;
  std::vector<std::vector<int>> images;
  for (const auto& cls : classes) {
    Matching img = delta1_act_right(cls.front().d, cls.front().w);
    for (const Elem& e : cls)
      if (!(delta1_act_right(e.d, e.w) == img)) constant = false;
    images.push_back(matching_key(img));
  }
  std::vector<std::vector<int>> target_keys;
  std::vector<std::vector<int>> projections;
  for (const Matching& t : delta1_elements(source, target)) {
    target_keys.push_back(matching_key(t));
    projections.push_back(delta1_project(t).perm.values);
  }
  bool distinct = false;
  bool bij = sets_equal(images, target_keys, &distinct) && distinct;
  std::sort(projections.begin(), projections.end());
  bool inj = std::adjacent_find(projections.begin(), projections.end()) ==
             projections.end();
  rep.check(tag, constant && bij && inj, cell);
}

// Two formal middles, one on each side.
void check_cell_double(report::Report& rep, const std::string& tag,
                       const S2Obj& source, const S2Obj& target) {
  const std::string cell = "source=" + show(source) + " target=" + show(target);
  struct Elem {
    S2Mor wl;
    Matching d;
    S2Mor wr;
  };
  auto key = [](const Elem& e) {
    std::vector<int> k = s2mor_key(e.wl);
    auto dk = matching_key(e.d);
    k.insert(k.end(), dk.begin(), dk.end());
    auto wk = s2mor_key(e.wr);
    k.insert(k.end(), wk.begin(), wk.end());
    return k;
  };
  const auto middles_l = enumerate_s2(source.n(), source.m());
  const auto middles_r = enumerate_s2(target.n(), target.m());
  std::vector<Elem> elems;
  for (const S2Obj& chi_l : middles_l)
    for (const S2Mor& wl : s2_hom(source, chi_l))
      for (const S2Obj& chi_r : middles_r)
        for (const Matching& d : delta1_elements(chi_l, chi_r))
          for (const S2Mor& wr : s2_hom(chi_r, target))
            elems.push_back({wl, d, wr});
  auto moves = [&](const Elem& e) {
    std::vector<Elem> out;
    for (const S2Obj& chi2 : middles_l)
      for (const S2Mor& u : s2_hom(e.d.phi, chi2))
        out.push_back(
            {s2_compose(u, e.wl), delta1_act_right(e.d, s2_inverse(u)), e.wr});
    for (const S2Obj& chi2 : middles_r)
      for (const S2Mor& v : s2_hom(e.d.psi, chi2))
        out.push_back(
            {e.wl, delta1_act_left(v, e.d), s2_compose(e.wr, s2_inverse(v))});
    return out;
  };
  auto classes = quotient(elems, key, moves);

  bool constant = true;
  std::vector<std::vector<int>> images;
  for (const auto& cls : classes) {
    auto forward = [](const Elem& e) {
      return delta1_act_left(e.wr, delta1_act_right(e.d, e.wl));
    };
    Matching img = forward(cls.front());
    for (const Elem& e : cls)
      if (!(forward(e) == img)) constant = false;
    images.push_back(matching_key(img));
  }
  std::vector<std::vector<int>> target_keys;
  std::vector<std::vector<int>> projections;
  for (const Matching& t : delta1_elements(source, target)) {
    target_keys.push_back(matching_key(t));
    projections.push_back(delta1_project(t).perm.values);
  }
  bool distinct = false;
  bool bij = sets_equal(images, target_keys, &distinct) && distinct;
  std::sort(projections.begin(), projections.end());
  bool inj = std::adjacent_find(projections.begin(), projections.end()) ==
             projections.end();
  rep.check(tag, constant && bij && inj, cell);
}

// Flattened composites of three monotone maps reachable within bound,
// deduplicated: the cells below depend only on the composite.
std::vector<S2Obj> flattened_triples(Card bound) {
  std::vector<std::vector<int>> seen;
  std::vector<S2Obj> out;
  for (Card n = 0; n <= bound; ++n)
    for (Card m = 0; m <= bound; ++m)
      for (Card r = 0; r <= bound; ++r)
        for (Card s = 0; s <= bound; ++s)
          for (const S2Obj& a : enumerate_s2(n, m))
            for (const S2Obj& b : enumerate_s2(m, r))
              for (const S2Obj& c : enumerate_s2(r, s)) {
                S2Obj flat(compose(c.phi, compose(b.phi, a.phi)));
                std::vector<int> k;
                append_map(k, flat.phi);
                if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
                  seen.push_back(k);
                  out.push_back(flat);
                }
              }
  return out;
}

std::vector<S2Obj> flattened_pairs(Card bound) {
  std::vector<std::vector<int>> seen;
  std::vector<S2Obj> out;
  for (Card n = 0; n <= bound; ++n)
    for (Card m = 0; m <= bound; ++m)
      for (Card r = 0; r <= bound; ++r)
        for (const S3Obj& phi : enumerate_s3(n, m, r)) {
          S2Obj flat = flatten_inner(phi);
          std::vector<int> k;
          append_map(k, flat.phi);
          if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
            seen.push_back(k);
            out.push_back(flat);
          }
        }
  return out;
}

std::vector<S2Obj> all_s2(Card bound) {
  std::vector<S2Obj> out;
  for (Card n = 0; n <= bound; ++n)
    for (Card m = 0; m <= bound; ++m)
      for (const S2Obj& phi : enumerate_s2(n, m)) out.push_back(phi);
  return out;
}

}  // namespace

report::Report check_pda_local_monos(Card bound) {
  const auto plain = all_s2(bound);
  const auto triple_flats = flattened_triples(bound);
  const auto pair_flats = flattened_pairs(bound);

  struct Job {
    std::string tag;
    int kind;  // 0 right, 1 left, 2 double
    S2Obj a;
    S2Obj b;
  };
  std::vector<Job> jobs;
  for (const S2Obj& phi : plain)
    for (const S2Obj& flat : triple_flats) {
      jobs.push_back({"PDA6", 0, phi, flat});
      jobs.push_back({"PDA7", 1, flat, phi});
    }
  for (Card m = 0; m <= bound; ++m)
    for (const S2Obj& flat : pair_flats) {
      jobs.push_back({"PDA8", 0, unit_chain(m), flat});
      jobs.push_back({"PDA9", 1, flat, unit_chain(m)});
    }
  for (const S2Obj& fa : pair_flats)
    for (const S2Obj& fb : pair_flats) jobs.push_back({"PDA10", 2, fa, fb});

  std::vector<report::Report> parts(jobs.size());
  parallel::parallel_for(static_cast<int>(jobs.size()), [&](int ji) {
    const Job& j = jobs[ji];
    try {
      if (j.kind == 0)
        check_cell_right(parts[ji], j.tag, j.a, j.b);
      else if (j.kind == 1)
        check_cell_left(parts[ji], j.tag, j.a, j.b);
      else
        check_cell_double(parts[ji], j.tag, j.a, j.b);
    } catch (const std::exception& e) {
      parts[ji].fail("checker-error", j.tag + ": " + e.what());
    }
  });

  report::Report rep;

  // Unit against counit: the cell is a pair of bijections through 1, so it
  // is a singleton exactly on the (1,1) component and projects to the
  // identity there.
  for (Card m = 0; m <= bound; ++m)
    for (Card n = 0; n <= bound; ++n) {
      long long left = m == 1 ? 1 : 0;   // bijections m -> 1
      long long right = n == 1 ? 1 : 0;  // bijections 1 -> n
      long long size = left * right;
      bool ok = size == ((m == 1 && n == 1) ? 1 : 0);
      if (size == 1) ok = ok && FinMap::identity(1) == FinMap::identity(1);
      rep.check("PDA1", ok, "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }

  // The four one-sided unit/counit whiskerings of the matching profunctor
  // all have the plain matching sets as underlying cells, so their
  // projections are injective exactly when the matching projection is.
  for (const S2Obj& phi : plain)
    for (const S2Obj& psi : plain) {
      std::vector<std::vector<int>> projections;
      for (const Matching& x : delta1_elements(phi, psi))
        projections.push_back(delta1_project(x).perm.values);
      std::sort(projections.begin(), projections.end());
      bool inj = std::adjacent_find(projections.begin(), projections.end()) ==
                 projections.end();
      const std::string cell = "phi=" + show(phi) + " psi=" + show(psi);
      rep.check("PDA2", inj, cell);
      rep.check("PDA3", inj, cell);
      rep.check("PDA4", inj, cell);
      rep.check("PDA5", inj, cell);
    }

  for (const auto& part : parts) rep.merge(part);
  return rep;
}

}  // namespace polylaw::coherence
