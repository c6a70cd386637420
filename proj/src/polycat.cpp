#include "polylaw/polycat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polylaw::polycat {

namespace {

std::vector<int> block_perm(const std::vector<std::pair<int, int>>& blocks_new_order,
                            const std::vector<int>& block_sizes) {
  // blocks_new_order: list of (block id, size) in the new order; block_sizes
  // give each block's size in the old order (by id). Returns perm with
  // perm[new_pos] = old_pos (1-based values).
  std::vector<int> old_start(block_sizes.size(), 0);
  int acc = 0;
  for (size_t b = 0; b < block_sizes.size(); ++b) {
    old_start[b] = acc;
    acc += block_sizes[b];
  }
  std::vector<int> perm;
  for (auto [b, size] : blocks_new_order)
    for (int i = 0; i < size; ++i) perm.push_back(old_start[b] + i + 1);
  return perm;
}

int exchange_perm(PolyWorld& w, int ref, std::vector<int> arr, bool dom_side) {
  // Transform the identity arrangement into arr by adjacent swaps, applying
  // each swap to ref.
  const int n = (int)arr.size();
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  for (int i = 0; i < n; ++i) {
    if (cur[i] == arr[i]) continue;
    int j = i + 1;
    while (cur[j] != arr[i]) ++j;
    for (int k = j; k > i; --k) {
      std::swap(cur[k - 1], cur[k]);
      ref = dom_side ? w.exchange_dom(ref, k) : w.exchange_cod(ref, k);
    }
  }
  return ref;
}

}  // namespace

int exchange_perm_dom(PolyWorld& w, int ref, const std::vector<int>& perm) {
  return exchange_perm(w, ref, perm, true);
}

int exchange_perm_cod(PolyWorld& w, int ref, const std::vector<int>& perm) {
  return exchange_perm(w, ref, perm, false);
}

// --- free polycategory -------------------------------------------------------

std::string canonical_key(const FreeTerm& t, const std::vector<Generator>& sig) {
  if (t.wire) return "w:" + t.wire_object;
  const int n = (int)t.nodes.size();
  // Port connection tables: for node v, in_conn[v][i] / out_conn[v][i] hold
  // the (node, port) at the far end of an internal edge, or (-1, -1).
  std::vector<std::vector<std::pair<int, int>>> in_conn(n), out_conn(n);
  for (int v = 0; v < n; ++v) {
    in_conn[v].assign(sig[t.nodes[v]].dom.size(), {-1, -1});
    out_conn[v].assign(sig[t.nodes[v]].cod.size(), {-1, -1});
  }
  for (const auto& e : t.edges) {
    out_conn[e.a][e.out_pos - 1] = {e.b, e.in_pos};
    in_conn[e.b][e.in_pos - 1] = {e.a, e.out_pos};
  }

  auto serialize_from = [&](int root) {
    std::vector<int> label(n, -1);
    std::vector<int> order;
    // Iterative DFS; neighbors taken in port order, in-ports before out-ports.
    std::vector<int> stack{root};
    label[root] = 0;
    order.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::vector<int> fresh;
      for (const auto& [u, pos] : in_conn[v])
        if (u >= 0 && label[u] < 0) {
          label[u] = (int)order.size();
          order.push_back(u);
          fresh.push_back(u);
        }
      for (const auto& [u, pos] : out_conn[v])
        if (u >= 0 && label[u] < 0) {
          label[u] = (int)order.size();
          order.push_back(u);
          fresh.push_back(u);
        }
      for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) stack.push_back(*it);
    }
    std::ostringstream out;
    for (int v : order) {
      out << 'g' << t.nodes[v] << '[';
      for (const auto& [u, pos] : in_conn[v])
        if (u < 0)
          out << "~;";
        else
          out << label[u] << ',' << pos << ';';
      out << '|';
      for (const auto& [u, pos] : out_conn[v])
        if (u < 0)
          out << "~;";
        else
          out << label[u] << ',' << pos << ';';
      out << ']';
    }
    out << "d:";
    for (auto [v, pos] : t.dom_ports) out << label[v] << ',' << pos << ';';
    out << "c:";
    for (auto [v, pos] : t.cod_ports) out << label[v] << ',' << pos << ';';
    return out.str();
  };

  int root;
  if (!t.dom_ports.empty())
    root = t.dom_ports.front().first;
  else if (!t.cod_ports.empty())
    root = t.cod_ports.front().first;
  else {
    // Closed term: take the least serialization over all roots.
    std::string best = serialize_from(0);
    for (int v = 1; v < n; ++v) best = std::min(best, serialize_from(v));
    return best;
  }
  return serialize_from(root);
}

FreeWorld::FreeWorld(std::vector<Generator> signature) : sig_(std::move(signature)) {}

int FreeWorld::intern(const FreeTerm& t) {
  std::string key = canonical_key(t, sig_);
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return it->second;
  int ref = (int)terms_.size();
  terms_.push_back(t);
  by_key_.emplace(std::move(key), ref);
  return ref;
}

ObjList FreeWorld::dom(int ref) const {
  const FreeTerm& t = terms_[ref];
  if (t.wire) return {t.wire_object};
  ObjList out;
  for (auto [v, pos] : t.dom_ports) out.push_back(sig_[t.nodes[v]].dom[pos - 1]);
  return out;
}

ObjList FreeWorld::cod(int ref) const {
  const FreeTerm& t = terms_[ref];
  if (t.wire) return {t.wire_object};
  ObjList out;
  for (auto [v, pos] : t.cod_ports) out.push_back(sig_[t.nodes[v]].cod[pos - 1]);
  return out;
}

int FreeWorld::identity(const std::string& object) {
  FreeTerm t;
  t.wire = true;
  t.wire_object = object;
  return intern(t);
}

int FreeWorld::generator(int gen_index) {
  FreeTerm t;
  t.nodes = {gen_index};
  for (int i = 1; i <= (int)sig_[gen_index].dom.size(); ++i)
    t.dom_ports.push_back({0, i});
  for (int i = 1; i <= (int)sig_[gen_index].cod.size(); ++i)
    t.cod_ports.push_back({0, i});
  return intern(t);
}

int FreeWorld::compose(int g, int f, int p, int q) {
  ObjList fc = cod(f), gd = dom(g);
  if (p < 1 || p > (int)fc.size() || q < 1 || q > (int)gd.size())
    throw std::invalid_argument("compose: cut position out of range");
  if (fc[p - 1] != gd[q - 1])
    throw std::invalid_argument("compose: cut objects differ");
  const FreeTerm& tf = terms_[f];
  const FreeTerm& tg = terms_[g];
  if (tf.wire) return g;  // unit: q-th input of g absorbs the wire
  if (tg.wire) return f;
  FreeTerm t;
  t.nodes = tf.nodes;
  const int off = (int)tf.nodes.size();
  for (int x : tg.nodes) t.nodes.push_back(x);
  t.edges = tf.edges;
  for (auto e : tg.edges) {
    e.a += off;
    e.b += off;
    t.edges.push_back(e);
  }
  auto [fa, fp] = tf.cod_ports[p - 1];
  auto [gb, gq] = tg.dom_ports[q - 1];
  t.edges.push_back({fa, fp, gb + off, gq});
  for (int i = 0; i < q - 1; ++i)
    t.dom_ports.push_back({tg.dom_ports[i].first + off, tg.dom_ports[i].second});
  for (auto pr : tf.dom_ports) t.dom_ports.push_back(pr);
  for (int i = q; i < (int)tg.dom_ports.size(); ++i)
    t.dom_ports.push_back({tg.dom_ports[i].first + off, tg.dom_ports[i].second});
  for (int i = 0; i < p - 1; ++i) t.cod_ports.push_back(tf.cod_ports[i]);
  for (auto pr : tg.cod_ports) t.cod_ports.push_back({pr.first + off, pr.second});
  for (int i = p; i < (int)tf.cod_ports.size(); ++i)
    t.cod_ports.push_back(tf.cod_ports[i]);
  return intern(t);
}

int FreeWorld::exchange_dom(int ref, int i) {
  FreeTerm t = terms_[ref];
  if (t.wire || i < 1 || i + 1 > (int)t.dom_ports.size())
    throw std::invalid_argument("exchange_dom: position out of range");
  std::swap(t.dom_ports[i - 1], t.dom_ports[i]);
  return intern(t);
}

int FreeWorld::exchange_cod(int ref, int i) {
  FreeTerm t = terms_[ref];
  if (t.wire || i < 1 || i + 1 > (int)t.cod_ports.size())
    throw std::invalid_argument("exchange_cod: position out of range");
  std::swap(t.cod_ports[i - 1], t.cod_ports[i]);
  return intern(t);
}

// --- finite tables ------------------------------------------------------------

std::vector<int> PolyTable::hom(const ObjList& dom, const ObjList& cod) const {
  std::vector<int> out;
  for (int i = 0; i < (int)maps.size(); ++i)
    if (maps[i].dom == dom && maps[i].cod == cod) out.push_back(i);
  return out;
}

int TableWorld::identity(const std::string& object) {
  auto it = t_.identities.find(object);
  if (it == t_.identities.end())
    throw std::invalid_argument("identity: unknown object " + object);
  return it->second;
}

int TableWorld::compose(int g, int f, int p, int q) {
  auto it = t_.comp.find({g, f, p, q});
  if (it == t_.comp.end()) throw std::out_of_range("compose: entry not in table");
  return it->second;
}

int TableWorld::exchange_dom(int ref, int i) {
  auto it = t_.exchange_dom_tbl.find({ref, i});
  if (it == t_.exchange_dom_tbl.end())
    throw std::out_of_range("exchange_dom: entry not in table");
  return it->second;
}

int TableWorld::exchange_cod(int ref, int i) {
  auto it = t_.exchange_cod_tbl.find({ref, i});
  if (it == t_.exchange_cod_tbl.end())
    throw std::out_of_range("exchange_cod: entry not in table");
  return it->second;
}

PolyTable build_free_table(FreeWorld& w, int bound, int max_nodes) {
  std::set<std::string> object_set;
  for (const auto& g : w.signature()) {
    for (const auto& x : g.dom) object_set.insert(x);
    for (const auto& x : g.cod) object_set.insert(x);
  }

  std::set<int> members;
  std::vector<int> worklist;
  auto add = [&](int ref) {
    if (members.insert(ref).second) worklist.push_back(ref);
  };
  for (const auto& x : object_set) add(w.identity(x));
  for (int gi = 0; gi < (int)w.signature().size(); ++gi) {
    const auto& g = w.signature()[gi];
    if ((int)g.dom.size() <= bound && (int)g.cod.size() <= bound)
      add(w.generator(gi));
  }

  auto nodes_of = [&](int ref) {
    return w.term(ref).wire ? 0 : (int)w.term(ref).nodes.size();
  };
  auto admissible = [&](int ref) {
    return (int)w.dom(ref).size() <= bound && (int)w.cod(ref).size() <= bound &&
           nodes_of(ref) <= max_nodes;
  };

  // Fixpoint closure under exchange and binary composition within bounds.
  while (!worklist.empty()) {
    std::vector<int> batch;
    std::swap(batch, worklist);
    for (int ref : batch) {
      for (int i = 1; i < (int)w.dom(ref).size(); ++i) add(w.exchange_dom(ref, i));
      for (int i = 1; i < (int)w.cod(ref).size(); ++i) add(w.exchange_cod(ref, i));
    }
    // Compose all current pairs; new members enter the next round.
    std::vector<int> snapshot(members.begin(), members.end());
    for (int g : snapshot)
      for (int f : snapshot) {
        ObjList fc = w.cod(f), gd = w.dom(g);
        for (int p = 1; p <= (int)fc.size(); ++p)
          for (int q = 1; q <= (int)gd.size(); ++q) {
            if (fc[p - 1] != gd[q - 1]) continue;
            if ((int)(gd.size() - 1 + w.dom(f).size()) > bound) continue;
            if ((int)(fc.size() - 1 + w.cod(g).size()) > bound) continue;
            if (nodes_of(f) + nodes_of(g) > max_nodes) continue;
            add(w.compose(g, f, p, q));
          }
      }
  }

  // Dense ids in ref order (refs are deterministic under the closure order).
  std::vector<int> refs(members.begin(), members.end());
  std::map<int, int> id_of;
  for (int i = 0; i < (int)refs.size(); ++i) id_of[refs[i]] = i;

  PolyTable t;
  t.objects.assign(object_set.begin(), object_set.end());
  t.bound = bound;
  for (int ref : refs) t.maps.push_back({w.dom(ref), w.cod(ref)});
  for (const auto& x : t.objects) t.identities[x] = id_of[w.identity(x)];
  for (int ref : refs) {
    for (int i = 1; i < (int)w.dom(ref).size(); ++i)
      t.exchange_dom_tbl[{id_of[ref], i}] = id_of[w.exchange_dom(ref, i)];
    for (int i = 1; i < (int)w.cod(ref).size(); ++i)
      t.exchange_cod_tbl[{id_of[ref], i}] = id_of[w.exchange_cod(ref, i)];
  }
  for (int g : refs)
    for (int f : refs) {
      ObjList fc = w.cod(f), gd = w.dom(g);
      for (int p = 1; p <= (int)fc.size(); ++p)
        for (int q = 1; q <= (int)gd.size(); ++q) {
          if (fc[p - 1] != gd[q - 1]) continue;
          if ((int)(gd.size() - 1 + w.dom(f).size()) > bound) continue;
          if ((int)(fc.size() - 1 + w.cod(g).size()) > bound) continue;
          int u = w.compose(g, f, p, q);
          if (members.count(u) && admissible(u))
            t.comp[{id_of[g], id_of[f], p, q}] = id_of[u];
        }
    }
  return t;
}

// --- family matchings and polycomposition --------------------------------------

fincard::Span family_matching_span(PolyWorld& w, const FamilyMatching& fm) {
  const int j = (int)fm.fs.size(), k = (int)fm.gs.size(), l = (int)fm.pairs.size();
  std::vector<int> left(l), right(l);
  std::set<std::pair<int, int>> used_out, used_in;
  for (int e = 0; e < l; ++e) {
    const auto& pr = fm.pairs[e];
    ObjList fc = w.cod(fm.fs.at(pr.f_index));
    ObjList gd = w.dom(fm.gs.at(pr.g_index));
    if (pr.out_pos < 1 || pr.out_pos > (int)fc.size() || pr.in_pos < 1 ||
        pr.in_pos > (int)gd.size())
      throw std::invalid_argument("family_matching_span: position out of range");
    if (fc[pr.out_pos - 1] != gd[pr.in_pos - 1])
      throw std::invalid_argument("family_matching_span: paired objects differ");
    if (!used_out.insert({pr.f_index, pr.out_pos}).second ||
        !used_in.insert({pr.g_index, pr.in_pos}).second)
      throw std::invalid_argument("family_matching_span: port paired twice");
    left[e] = pr.f_index + 1;
    right[e] = pr.g_index + 1;
  }
  return fincard::Span(fincard::FinMap(l, j, std::move(left)),
                       fincard::FinMap(l, k, std::move(right)));
}

bool is_suitable_matching(PolyWorld& w, const FamilyMatching& fm) {
  return fincard::is_suitable_span(family_matching_span(w, fm));
}

namespace {

struct Member {
  int ref = -1;
  std::vector<BoundarySource> dom_prov;
  std::vector<BoundarySource> cod_prov;
  bool alive = false;
};

struct PeelState {
  std::vector<Member> members;  // f's first, then g's
  struct LiveEdge {
    BoundarySource ftag;  // lives in some member's cod_prov
    BoundarySource gtag;  // lives in some member's dom_prov
    bool alive;
  };
  std::vector<LiveEdge> edges;

  int owner_of_cod(const BoundarySource& tag) const {
    for (int m = 0; m < (int)members.size(); ++m) {
      if (!members[m].alive) continue;
      for (const auto& s : members[m].cod_prov)
        if (s == tag) return m;
    }
    return -1;
  }
  int owner_of_dom(const BoundarySource& tag) const {
    for (int m = 0; m < (int)members.size(); ++m) {
      if (!members[m].alive) continue;
      for (const auto& s : members[m].dom_prov)
        if (s == tag) return m;
    }
    return -1;
  }
  int degree(int m) const {
    int d = 0;
    for (const auto& e : edges)
      if (e.alive && (owner_of_cod(e.ftag) == m || owner_of_dom(e.gtag) == m)) ++d;
    return d;
  }
};

PeelState init_state(PolyWorld& w, const FamilyMatching& fm) {
  PeelState st;
  for (int i = 0; i < (int)fm.fs.size(); ++i) {
    Member m;
    m.ref = fm.fs[i];
    m.alive = true;
    for (int pos = 1; pos <= (int)w.dom(m.ref).size(); ++pos)
      m.dom_prov.push_back({false, i, pos});
    for (int pos = 1; pos <= (int)w.cod(m.ref).size(); ++pos)
      m.cod_prov.push_back({false, i, pos});
    st.members.push_back(std::move(m));
  }
  for (int i = 0; i < (int)fm.gs.size(); ++i) {
    Member m;
    m.ref = fm.gs[i];
    m.alive = true;
    for (int pos = 1; pos <= (int)w.dom(m.ref).size(); ++pos)
      m.dom_prov.push_back({true, i, pos});
    for (int pos = 1; pos <= (int)w.cod(m.ref).size(); ++pos)
      m.cod_prov.push_back({true, i, pos});
    st.members.push_back(std::move(m));
  }
  for (const auto& pr : fm.pairs)
    st.edges.push_back({{false, pr.f_index, pr.out_pos},
                        {true, pr.g_index, pr.in_pos},
                        true});
  return st;
}

// Fuse along edge e: compose the owner of the f-tag into the owner of the
// g-tag; the member named `peeled` dies, the other absorbs the result.
void fuse(PolyWorld& w, PeelState& st, int edge_index, int peeled) {
  auto& e = st.edges[edge_index];
  int A = st.owner_of_cod(e.ftag);
  int B = st.owner_of_dom(e.gtag);
  Member& ma = st.members[A];
  Member& mb = st.members[B];
  int p = 0, q = 0;
  for (int i = 0; i < (int)ma.cod_prov.size(); ++i)
    if (ma.cod_prov[i] == e.ftag) p = i + 1;
  for (int i = 0; i < (int)mb.dom_prov.size(); ++i)
    if (mb.dom_prov[i] == e.gtag) q = i + 1;
  Member fused;
  fused.alive = true;
  fused.ref = w.compose(mb.ref, ma.ref, p, q);
  fused.dom_prov.insert(fused.dom_prov.end(), mb.dom_prov.begin(),
                        mb.dom_prov.begin() + (q - 1));
  fused.dom_prov.insert(fused.dom_prov.end(), ma.dom_prov.begin(), ma.dom_prov.end());
  fused.dom_prov.insert(fused.dom_prov.end(), mb.dom_prov.begin() + q,
                        mb.dom_prov.end());
  fused.cod_prov.insert(fused.cod_prov.end(), ma.cod_prov.begin(),
                        ma.cod_prov.begin() + (p - 1));
  fused.cod_prov.insert(fused.cod_prov.end(), mb.cod_prov.begin(), mb.cod_prov.end());
  fused.cod_prov.insert(fused.cod_prov.end(), ma.cod_prov.begin() + p,
                        ma.cod_prov.end());
  e.alive = false;
  int survivor = peeled == A ? B : A;
  st.members[survivor] = std::move(fused);
  st.members[peeled].alive = false;
}

}  // namespace

PolyComposite polycompose(PolyWorld& w, const FamilyMatching& fm,
                          const std::vector<int>* peel_order) {
  if (!is_suitable_matching(w, fm))
    throw std::invalid_argument("polycompose: matching is not suitable");
  PeelState st = init_state(w, fm);
  int alive = (int)st.members.size();
  int step = 0;
  while (alive > 1) {
    int chosen = -1;
    if (peel_order) {
      chosen = peel_order->at(step++);
      if (!st.members[chosen].alive || st.degree(chosen) != 1)
        throw std::invalid_argument("polycompose: inadmissible peel order");
    } else {
      for (int m = 0; m < (int)st.members.size() && chosen < 0; ++m)
        if (st.members[m].alive && st.degree(m) == 1) chosen = m;
    }
    int edge_index = -1;
    for (int e = 0; e < (int)st.edges.size(); ++e)
      if (st.edges[e].alive && (st.owner_of_cod(st.edges[e].ftag) == chosen ||
                                st.owner_of_dom(st.edges[e].gtag) == chosen))
        edge_index = e;
    fuse(w, st, edge_index, chosen);
    --alive;
  }
  for (const auto& m : st.members)
    if (m.alive) return {m.ref, m.dom_prov, m.cod_prov};
  throw std::logic_error("polycompose: empty family");
}

int align_boundary(PolyWorld& w, const PolyComposite& c,
                   const std::vector<BoundarySource>& dom_target,
                   const std::vector<BoundarySource>& cod_target) {
  auto perm_onto = [](const std::vector<BoundarySource>& have,
                      const std::vector<BoundarySource>& want) {
    if (have.size() != want.size())
      throw std::invalid_argument("align_boundary: size mismatch");
    std::vector<int> perm(want.size(), 0);
    for (size_t i = 0; i < want.size(); ++i) {
      for (size_t k = 0; k < have.size(); ++k)
        if (have[k] == want[i]) perm[i] = (int)k + 1;
      if (perm[i] == 0)
        throw std::invalid_argument("align_boundary: source not present");
    }
    return perm;
  };
  int ref = exchange_perm_dom(w, c.ref, perm_onto(c.dom_src, dom_target));
  return exchange_perm_cod(w, ref, perm_onto(c.cod_src, cod_target));
}

std::vector<std::vector<int>> all_peel_orders(PolyWorld& w, const FamilyMatching& fm) {
  // Simulate peeling on the graph alone: vertices 0..j+k-1, edges by index.
  const int j = (int)fm.fs.size(), total = j + (int)fm.gs.size();
  std::vector<std::vector<int>> out;
  std::vector<std::pair<int, int>> edge_ends;
  for (const auto& pr : fm.pairs) edge_ends.push_back({pr.f_index, j + pr.g_index});
  std::vector<bool> v_alive(total, true), e_alive(edge_ends.size(), true);
  std::vector<int> order;
  auto degree = [&](int v) {
    int d = 0;
    for (size_t e = 0; e < edge_ends.size(); ++e)
      if (e_alive[e] && (edge_ends[e].first == v || edge_ends[e].second == v)) ++d;
    return d;
  };
  std::function<void(int)> rec = [&](int alive) {
    if (alive == 1) {
      out.push_back(order);
      return;
    }
    for (int v = 0; v < total; ++v) {
      if (!v_alive[v] || degree(v) != 1) continue;
      int e = -1;
      for (size_t i = 0; i < edge_ends.size(); ++i)
        if (e_alive[i] && (edge_ends[i].first == v || edge_ends[i].second == v))
          e = (int)i;
      int other = edge_ends[e].first == v ? edge_ends[e].second : edge_ends[e].first;
      // Peeling v merges it into `other`: reattach v's no edges (degree 1).
      v_alive[v] = false;
      e_alive[e] = false;
      order.push_back(v);
      rec(alive - 1);
      order.pop_back();
      v_alive[v] = true;
      e_alive[e] = true;
      (void)other;
    }
  };
  if (total >= 1 && is_suitable_matching(w, fm)) rec(total);
  return out;
}

// --- axiom checker --------------------------------------------------------------

namespace {

std::string wit(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream out;
  bool first = true;
  for (auto& [k, v] : kv) {
    if (!first) out << ' ';
    out << k << '=' << v;
    first = false;
  }
  return out.str();
}

}  // namespace

report::Report check_polycategory_axioms(const PolyTable& table) {
  report::Report rep;
  TableWorld w(table);
  const int n = (int)table.maps.size();

  for (const auto& x : table.objects) {
    auto it = table.identities.find(x);
    bool ok = it != table.identities.end() &&
              table.maps[it->second].dom == ObjList{x} &&
              table.maps[it->second].cod == ObjList{x};
    rep.check("identity-present", ok, "object " + x);
  }

  auto ex = [&](int id, bool dom_side, int i) -> int {
    return dom_side ? w.exchange_dom(id, i) : w.exchange_cod(id, i);
  };

  for (int id = 0; id < n; ++id) {
    for (int side = 0; side < 2; ++side) {
      bool dom_side = side == 0;
      const ObjList& b = dom_side ? table.maps[id].dom : table.maps[id].cod;
      const int len = (int)b.size();
      for (int i = 1; i < len; ++i) try {
        int y = ex(id, dom_side, i);
        ObjList expect = b;
        std::swap(expect[i - 1], expect[i]);
        const ObjList& got = dom_side ? table.maps[y].dom : table.maps[y].cod;
        const ObjList& other = dom_side ? table.maps[y].cod : table.maps[y].dom;
        const ObjList& other0 = dom_side ? table.maps[id].cod : table.maps[id].dom;
        rep.check("exchange-boundary", got == expect && other == other0,
                  wit({{"id", id}, {"side", side}, {"i", i}}));
        rep.check("exchange-involution", ex(y, dom_side, i) == id,
                  wit({{"id", id}, {"side", side}, {"i", i}}));
        for (int k = i + 2; k < len; ++k)
          rep.check("exchange-commute",
                    ex(ex(id, dom_side, i), dom_side, k) ==
                        ex(ex(id, dom_side, k), dom_side, i),
                    wit({{"id", id}, {"side", side}, {"i", i}, {"k", k}}));
        if (i + 1 < len)
          rep.check("exchange-braid",
                    ex(ex(ex(id, dom_side, i), dom_side, i + 1), dom_side, i) ==
                        ex(ex(ex(id, dom_side, i + 1), dom_side, i), dom_side, i + 1),
                    wit({{"id", id}, {"side", side}, {"i", i}}));
      } catch (const std::exception&) {
        rep.fail("exchange-present", wit({{"id", id}, {"side", side}, {"i", i}}));
      }
    }
    for (int i = 1; i < (int)table.maps[id].dom.size(); ++i)
      for (int k = 1; k < (int)table.maps[id].cod.size(); ++k) try {
          rep.check("exchange-sides-commute",
                    w.exchange_cod(w.exchange_dom(id, i), k) ==
                        w.exchange_dom(w.exchange_cod(id, k), i),
                    wit({{"id", id}, {"i", i}, {"k", k}}));
        } catch (const std::exception&) {
          rep.fail("exchange-present", wit({{"id", id}, {"i", i}, {"k", k}}));
        }
  }

  // Unit laws: the identity absorbs on both sides of a cut.
  for (int f = 0; f < n; ++f) {
    for (int p = 1; p <= (int)table.maps[f].cod.size(); ++p) {
      auto idit = table.identities.find(table.maps[f].cod[p - 1]);
      if (idit == table.identities.end()) continue;
      auto it = table.comp.find({idit->second, f, p, 1});
      rep.check("unit-left", it != table.comp.end() && it->second == f,
                wit({{"f", f}, {"p", p}}));
    }
    for (int q = 1; q <= (int)table.maps[f].dom.size(); ++q) {
      auto idit = table.identities.find(table.maps[f].dom[q - 1]);
      if (idit == table.identities.end()) continue;
      auto it = table.comp.find({f, idit->second, 1, q});
      rep.check("unit-right", it != table.comp.end() && it->second == f,
                wit({{"f", f}, {"q", q}}));
    }
  }

  // Boundary correctness of every composition entry; entries failing this
  // are excluded from the law instances below (their positions would be
  // meaningless), so a corrupt table reports here rather than crashing.
  std::set<std::tuple<int, int, int, int>> valid_entries;
  for (const auto& [key, u] : table.comp) {
    auto [g, f, p, q] = key;
    const auto& mf = table.maps[f];
    const auto& mg = table.maps[g];
    bool ok = p >= 1 && p <= (int)mf.cod.size() && q >= 1 && q <= (int)mg.dom.size() &&
              mf.cod[p - 1] == mg.dom[q - 1];
    if (ok) {
      ObjList edom(mg.dom.begin(), mg.dom.begin() + (q - 1));
      edom.insert(edom.end(), mf.dom.begin(), mf.dom.end());
      edom.insert(edom.end(), mg.dom.begin() + q, mg.dom.end());
      ObjList ecod(mf.cod.begin(), mf.cod.begin() + (p - 1));
      ecod.insert(ecod.end(), mg.cod.begin(), mg.cod.end());
      ecod.insert(ecod.end(), mf.cod.begin() + p, mf.cod.end());
      ok = table.maps[u].dom == edom && table.maps[u].cod == ecod;
    }
    rep.check("comp-boundary", ok, wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}}));
    if (ok) valid_entries.insert(key);
  }

  auto comp_lookup = [&](int g, int f, int p, int q) -> std::optional<int> {
    auto it = table.comp.find({g, f, p, q});
    if (it == table.comp.end() || !valid_entries.count({g, f, p, q}))
      return std::nullopt;
    return it->second;
  };

  for (const auto& [key, u] : table.comp) {
    if (!valid_entries.count(key)) continue;
    auto [g, f, p, q] = key;
    try {
    const int af = (int)table.maps[f].dom.size();
    const int cf = (int)table.maps[f].cod.size();
    const int dg = (int)table.maps[g].cod.size();

    // Sequential associativity: a third polymap h cut onto an output of g.
    for (const auto& [key2, v] : table.comp) {
      if (!valid_entries.count(key2)) continue;
      auto [h, g2, s, t] = key2;
      if (g2 != g) continue;
      auto lhs = comp_lookup(h, u, p - 1 + s, t);
      auto rhs = comp_lookup(v, f, p, t - 1 + q);
      if (lhs && rhs)
        rep.check("assoc-sequential", *lhs == *rhs,
                  wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}, {"h", h}, {"s", s}, {"t", t}}));
    }

    // Parallel interchange: two different polymaps cut into two different
    // inputs of the same g; results agree up to a block exchange of the
    // leftover outputs.
    for (const auto& [key2, w1] : table.comp) {
      if (!valid_entries.count(key2)) continue;
      auto [g2, f2, p2, q2] = key2;
      if (g2 != g || q2 <= q) continue;
      const int cf2 = (int)table.maps[f2].cod.size();
      auto a = comp_lookup(u, f2, p2, q2 + af - 1);
      auto b = comp_lookup(w1, f, p, q);
      if (!(a && b)) continue;
      // b cod blocks: [A1(p-1), B1(p2-1), Dg, B2(cf2-p2), A2(cf-p)];
      // a cod blocks: [B1, A1, Dg, A2, B2].
      std::vector<int> sizes = {p - 1, p2 - 1, dg, cf2 - p2, cf - p};
      std::vector<int> perm = block_perm(
          {{1, sizes[1]}, {0, sizes[0]}, {2, sizes[2]}, {4, sizes[4]}, {3, sizes[3]}},
          sizes);
      rep.check("assoc-parallel", *a == exchange_perm_cod(w, *b, perm),
                wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}, {"f2", f2}, {"p2", p2}, {"q2", q2}}));
    }

    // Dual interchange: one polymap f cut into two different g's; doms agree
    // up to a block exchange of the leftover inputs.
    for (const auto& [key2, w1] : table.comp) {
      if (!valid_entries.count(key2)) continue;
      auto [g2, f2, p2, q2] = key2;
      if (f2 != f || p2 <= p) continue;
      const int ag2 = (int)table.maps[g2].dom.size();
      const int ag = (int)table.maps[g].dom.size();
      auto a = comp_lookup(g2, u, p2 + dg - 1, q2);
      auto b = comp_lookup(g, w1, p, q);
      if (!(a && b)) continue;
      // b dom blocks: [G1a(q-1), G2a(q2-1), L(af), G2b(ag2-q2), G1b(ag-q)];
      // a dom blocks: [G2a, G1a, L, G1b, G2b].
      std::vector<int> sizes = {q - 1, q2 - 1, af, ag2 - q2, ag - q};
      std::vector<int> perm = block_perm(
          {{1, sizes[1]}, {0, sizes[0]}, {2, sizes[2]}, {4, sizes[4]}, {3, sizes[3]}},
          sizes);
      rep.check("assoc-parallel-dual", *a == exchange_perm_dom(w, *b, perm),
                wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}, {"g2", g2}, {"p2", p2}, {"q2", q2}}));
    }

    // Equivariance of composition under exchange away from the cut.
    for (int i = 1; i < af; ++i) {
      auto lhs = comp_lookup(g, w.exchange_dom(f, i), p, q);
      if (lhs)
        rep.check("equivariance-dom-f", *lhs == w.exchange_dom(u, q - 1 + i),
                  wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}, {"i", i}}));
    }
    for (int i = 1; i < dg; ++i) {
      auto lhs = comp_lookup(w.exchange_cod(g, i), f, p, q);
      if (lhs)
        rep.check("equivariance-cod-g", *lhs == w.exchange_cod(u, p - 1 + i),
                  wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}, {"i", i}}));
    }
    for (int i = 1; i < cf; ++i) {
      if (i == p || i + 1 == p) continue;  // swap would cross the cut
      auto lhs = comp_lookup(g, w.exchange_cod(f, i), p, q);
      if (lhs)
        rep.check("equivariance-cod-f", *lhs == w.exchange_cod(u, i < p ? i : i + dg - 1),
                  wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}, {"i", i}}));
    }
    const int ag = (int)table.maps[g].dom.size();
    for (int i = 1; i < ag; ++i) {
      if (i == q || i + 1 == q) continue;
      auto lhs = comp_lookup(w.exchange_dom(g, i), f, p, q);
      if (lhs)
        rep.check("equivariance-dom-g", *lhs == w.exchange_dom(u, i < q ? i : i + af - 1),
                  wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}, {"i", i}}));
    }
    } catch (const std::exception& e) {
      rep.fail("checker-error",
               wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}}) + " " + e.what());
    }
  }
  return rep;
}

// --- roundtrip ---------------------------------------------------------------------

report::Report roundtrip_check(const PolyTable& table) {
  report::Report rep;
  TableWorld w(table);
  for (const auto& [key, u] : table.comp) {
    auto [g, f, p, q] = key;
    const ObjList& gd = table.maps[g].dom;
    const int a1 = q - 1, a2 = (int)gd.size() - q;
    FamilyMatching fm;
    for (int i = 0; i < a1; ++i) fm.fs.push_back(w.identity(gd[i]));
    fm.fs.push_back(f);
    for (int i = 0; i < a2; ++i) fm.fs.push_back(w.identity(gd[q + i]));
    fm.gs.push_back(g);
    for (int i = 0; i < a1; ++i) fm.pairs.push_back({i, 1, 0, i + 1});
    fm.pairs.push_back({a1, p, 0, q});
    for (int i = 0; i < a2; ++i) fm.pairs.push_back({a1 + 1 + i, 1, 0, q + 1 + i});

    bool entry_ok = true, stable = true, interleave = true;
    std::string witness = wit({{"g", g}, {"f", f}, {"p", p}, {"q", q}});
    try {
      PolyComposite first = polycompose(w, fm);
      entry_ok = first.ref == u;
      for (const auto& order : all_peel_orders(w, fm)) {
        PolyComposite c = polycompose(w, fm, &order);
        stable = stable &&
                 align_boundary(w, c, first.dom_src, first.cod_src) == first.ref;
      }
      // Domain interleaving: f-side sources in family order, each member's
      // positions complete and increasing; dually for the codomain.
      std::vector<BoundarySource> f_side, g_side_cod;
      for (const auto& s : first.dom_src)
        if (!s.from_g) f_side.push_back(s);
      std::vector<BoundarySource> expect;
      for (int i = 0; i < (int)fm.fs.size(); ++i)
        for (int pos = 1; pos <= (int)w.dom(fm.fs[i]).size(); ++pos)
          expect.push_back({false, i, pos});
      interleave = f_side == expect;
      for (const auto& s : first.cod_src)
        if (s.from_g) g_side_cod.push_back(s);
      expect.clear();
      for (int i = 0; i < (int)fm.gs.size(); ++i)
        for (int pos = 1; pos <= (int)w.cod(fm.gs[i]).size(); ++pos)
          expect.push_back({true, i, pos});
      interleave = interleave && g_side_cod == expect;
    } catch (const std::exception& e) {
      entry_ok = false;
      witness += std::string(" error=") + e.what();
    }
    rep.check("roundtrip-binary", entry_ok, witness);
    rep.check("roundtrip-peel-stability", stable, witness);
    rep.check("roundtrip-interleaving", interleave, witness);
  }
  return rep;
}

}  // namespace polylaw::polycat
