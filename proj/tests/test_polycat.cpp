#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "polylaw/fincard.hpp"
#include "polylaw/polycat.hpp"

using namespace polylaw::polycat;

namespace {

// Terminal polycategory on one object up to boundary length L: every hom a
// singleton, so all laws are forced.
PolyTable terminal_table(int L) {
  PolyTable t;
  t.objects = {"*"};
  t.bound = L;
  // One map per (dom length, cod length) pair.
  auto id_of = [&](int a, int b) { return a * (L + 1) + b; };
  for (int a = 0; a <= L; ++a)
    for (int b = 0; b <= L; ++b)
      t.maps.push_back({ObjList(a, "*"), ObjList(b, "*")});
  t.identities["*"] = id_of(1, 1);
  for (int a = 0; a <= L; ++a)
    for (int b = 0; b <= L; ++b) {
      for (int i = 1; i < a; ++i) t.exchange_dom_tbl[{id_of(a, b), i}] = id_of(a, b);
      for (int i = 1; i < b; ++i) t.exchange_cod_tbl[{id_of(a, b), i}] = id_of(a, b);
    }
  for (int af = 0; af <= L; ++af)
    for (int cf = 1; cf <= L; ++cf)
      for (int ag = 1; ag <= L; ++ag)
        for (int cg = 0; cg <= L; ++cg) {
          if (ag - 1 + af > L || cf - 1 + cg > L) continue;
          for (int p = 1; p <= cf; ++p)
            for (int q = 1; q <= ag; ++q)
              t.comp[{id_of(ag, cg), id_of(af, cf), p, q}] =
                  id_of(ag - 1 + af, cf - 1 + cg);
        }
  return t;
}

FreeWorld two_gen_world() {
  return FreeWorld({{"f", {"a"}, {"x", "y"}}, {"g", {"x"}, {"b"}}});
}

}  // namespace

TEST_CASE("free grafting matches the worked examples") {
  FreeWorld w({{"f", {"a"}, {"x", "y"}}, {"g", {"x"}, {"b"}}, {"h", {"y"}, {"c"}}});
  int f = w.generator(0), g = w.generator(1), h = w.generator(2);
  int fg = w.compose(g, f, 1, 1);
  CHECK(w.dom(fg) == ObjList{"a"});
  CHECK(w.cod(fg) == ObjList{"b", "y"});
  int fgh = w.compose(h, fg, 2, 1);
  CHECK(w.dom(fgh) == ObjList{"a"});
  CHECK(w.cod(fgh) == ObjList{"b", "c"});
  // Unit laws in the free world.
  CHECK(w.compose(fg, w.identity("a"), 1, 1) == fg);
  CHECK(w.compose(w.identity("b"), fg, 1, 1) == fg);
  CHECK_THROWS(w.compose(g, f, 2, 1));  // y against x
}

TEST_CASE("canonical form identifies equal composites built differently") {
  FreeWorld w({{"f", {"a"}, {"x", "y"}}, {"g", {"x"}, {"b"}}, {"h", {"y"}, {"c"}}});
  int f = w.generator(0), g = w.generator(1), h = w.generator(2);
  // Graft g then h, and h then g: same tree, same boundary.
  int r1 = w.compose(h, w.compose(g, f, 1, 1), 2, 1);
  int r2 = w.compose(g, w.compose(h, f, 2, 1), 1, 1);
  CHECK(r1 == r2);
  // Exchange changes the boundary, hence the polymap.
  CHECK(w.exchange_cod(r1, 1) != r1);
  CHECK(w.exchange_cod(w.exchange_cod(r1, 1), 1) == r1);
}

TEST_CASE("family matching span and suitability") {
  FreeWorld w({{"f", {"a"}, {"x", "x"}}, {"g", {"x"}, {"b"}}, {"k", {"x", "x"}, {"b"}}});
  int f = w.generator(0), g = w.generator(1), k = w.generator(2);

  FamilyMatching empty;
  auto s0 = family_matching_span(w, empty);
  CHECK(s0.apex() == 0);
  CHECK(s0.n() == 0);
  CHECK(s0.m() == 0);

  // One f with 2 outputs fully paired into two unary g's.
  FamilyMatching fan{{f}, {g, g}, {{0, 1, 0, 1}, {0, 2, 1, 1}}};
  auto s1 = family_matching_span(w, fan);
  CHECK(s1.left.values == std::vector<int>{1, 1});
  CHECK(s1.right.values == std::vector<int>{1, 2});
  CHECK(is_suitable_matching(w, fan));

  // Both outputs of f into the same binary k: a doubled edge.
  FamilyMatching doubled{{f}, {k}, {{0, 1, 0, 1}, {0, 2, 0, 2}}};
  auto s2 = family_matching_span(w, doubled);
  CHECK(s2.apex() == 2);
  CHECK(s2.n() == 1);
  CHECK(s2.m() == 1);
  CHECK_FALSE(is_suitable_matching(w, doubled));

  FamilyMatching single{{f}, {g}, {{0, 1, 0, 1}}};
  CHECK(is_suitable_matching(w, single));

  FamilyMatching bad{{f}, {g}, {{0, 1, 0, 1}, {0, 1, 0, 1}}};
  CHECK_THROWS(family_matching_span(w, bad));
}

TEST_CASE("polycompose small cases and peel independence") {
  FreeWorld w({{"f", {"a"}, {"x", "y"}}, {"g1", {"x"}, {"b"}}, {"g2", {"y"}, {"c"}}});
  int f = w.generator(0), g1 = w.generator(1), g2 = w.generator(2);
  FamilyMatching fm{{f}, {g1, g2}, {{0, 1, 0, 1}, {0, 2, 1, 1}}};
  PolyComposite c = polycompose(w, fm);
  CHECK(w.dom(c.ref) == ObjList{"a"});
  CHECK(w.cod(c.ref) == ObjList{"b", "c"});
  auto orders = all_peel_orders(w, fm);
  CHECK(orders.size() >= 2);
  for (const auto& ord : orders) {
    PolyComposite c2 = polycompose(w, fm, &ord);
    CHECK(align_boundary(w, c2, c.dom_src, c.cod_src) == c.ref);
  }
  FamilyMatching not_suitable{{f}, {g1}, {{0, 1, 0, 1}}};  // g2 missing: y free
  CHECK(is_suitable_matching(w, not_suitable));  // partial matching, still a tree
}

TEST_CASE("random suitable matchings: peel order independence and interleaving") {
  // Generators chosen so many composites exist: a binary splitter, a merger,
  // and unary converters over a handful of objects.
  FreeWorld w({{"s", {"a"}, {"m", "m"}},
               {"j", {"m", "m"}, {"a"}},
               {"u", {"m"}, {"m"}},
               {"v", {"m"}, {"a", "m"}}});
  std::mt19937 rng(20260826);
  int built = 0;
  int attempts = 0;
  while (built < 200 && attempts < 20000) {
    ++attempts;
    // Random families of up to 5 generator instances split across sides.
    int total = 2 + (int)(rng() % 4);
    int jf = 1 + (int)(rng() % (total - 1));
    FamilyMatching fm;
    for (int i = 0; i < jf; ++i) fm.fs.push_back(w.generator((int)(rng() % 4)));
    for (int i = jf; i < total; ++i) fm.gs.push_back(w.generator((int)(rng() % 4)));
    // Random maximal-ish pairing: shuffle all (f out, g in) slots and greedily
    // add pairs that keep ports fresh and the partial graph acyclic.
    struct Slot {
      int fi, po, gi, pi;
    };
    std::vector<Slot> slots;
    for (int fi = 0; fi < (int)fm.fs.size(); ++fi)
      for (int po = 1; po <= (int)w.cod(fm.fs[fi]).size(); ++po)
        for (int gi = 0; gi < (int)fm.gs.size(); ++gi)
          for (int pi = 1; pi <= (int)w.dom(fm.gs[gi]).size(); ++pi)
            if (w.cod(fm.fs[fi])[po - 1] == w.dom(fm.gs[gi])[pi - 1])
              slots.push_back({fi, po, gi, pi});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::set<std::pair<int, int>> used_out, used_in;
    for (const auto& s : slots) {
      if (used_out.count({s.fi, s.po}) || used_in.count({s.gi, s.pi})) continue;
      fm.pairs.push_back({s.fi, s.po, s.gi, s.pi});
      if (!polylaw::fincard::is_acyclic(family_matching_span(w, fm)))
        fm.pairs.pop_back();
      else {
        used_out.insert({s.fi, s.po});
        used_in.insert({s.gi, s.pi});
      }
    }
    if (!is_suitable_matching(w, fm)) continue;
    ++built;

    PolyComposite c = polycompose(w, fm);
    auto orders = all_peel_orders(w, fm);
    REQUIRE(!orders.empty());
    for (const auto& ord : orders) {
      // Same polymap once the boundary is aligned through its provenance.
      PolyComposite c2 = polycompose(w, fm, &ord);
      REQUIRE(align_boundary(w, c2, c.dom_src, c.cod_src) == c.ref);
    }
    // Interleaving contract via provenance: the final boundary is an
    // interleaving of the members' boundaries, i.e. restricted to any single
    // member it preserves that member's order and is complete. (Block order
    // across members follows the tree, not the family indexing.)
    std::set<std::pair<int, int>> matched_in, matched_out;
    for (const auto& pr : fm.pairs) {
      matched_out.insert({pr.f_index, pr.out_pos});
      matched_in.insert({pr.g_index, pr.in_pos});
    }
    for (int i = 0; i < (int)fm.fs.size(); ++i) {
      std::vector<BoundarySource> got, expect;
      for (const auto& s : c.dom_src)
        if (!s.from_g && s.member == i) got.push_back(s);
      for (int pos = 1; pos <= (int)w.dom(fm.fs[i]).size(); ++pos)
        expect.push_back({false, i, pos});
      REQUIRE(got == expect);
      got.clear();
      expect.clear();
      for (const auto& s : c.cod_src)
        if (!s.from_g && s.member == i) got.push_back(s);
      for (int pos = 1; pos <= (int)w.cod(fm.fs[i]).size(); ++pos)
        if (!matched_out.count({i, pos})) expect.push_back({false, i, pos});
      REQUIRE(got == expect);
    }
    for (int i = 0; i < (int)fm.gs.size(); ++i) {
      std::vector<BoundarySource> got, expect;
      for (const auto& s : c.dom_src)
        if (s.from_g && s.member == i) got.push_back(s);
      for (int pos = 1; pos <= (int)w.dom(fm.gs[i]).size(); ++pos)
        if (!matched_in.count({i, pos})) expect.push_back({true, i, pos});
      REQUIRE(got == expect);
      got.clear();
      expect.clear();
      for (const auto& s : c.cod_src)
        if (s.from_g && s.member == i) got.push_back(s);
      for (int pos = 1; pos <= (int)w.cod(fm.gs[i]).size(); ++pos)
        expect.push_back({true, i, pos});
      REQUIRE(got == expect);
    }
  }
  CHECK(built == 200);
}

TEST_CASE("terminal table passes all axioms") {
  PolyTable t = terminal_table(3);
  auto rep = check_polycategory_axioms(t);
  CHECK(rep.clean());
  CHECK(rep.total_checked() > 0);
  auto rt = roundtrip_check(t);
  CHECK(rt.clean());
}

TEST_CASE("free truncation passes axioms and roundtrip") {
  FreeWorld w1({{"f", {"a"}, {"b", "c"}}});
  PolyTable t1 = build_free_table(w1, 4, 2);
  auto rep1 = check_polycategory_axioms(t1);
  CHECK(rep1.clean());
  CHECK(roundtrip_check(t1).clean());

  FreeWorld w2 = two_gen_world();
  PolyTable t2 = build_free_table(w2, 4, 3);
  CHECK(t2.maps.size() > 6);
  auto rep2 = check_polycategory_axioms(t2);
  CHECK(rep2.clean());
  CHECK(roundtrip_check(t2).clean());
}

TEST_CASE("mutated tables are caught with witnesses") {
  FreeWorld w = two_gen_world();
  PolyTable t = build_free_table(w, 4, 3);

  // Perturb one composition entry to a different map of the same hom cell if
  // possible, else to the wrong id outright.
  PolyTable bad = t;
  REQUIRE(!bad.comp.empty());
  bool mutated = false;
  for (auto& [key, val] : bad.comp) {
    auto [g, f, p, q] = key;
    (void)g;
    (void)p;
    (void)q;
    if (val != f) {
      val = f;  // type-incorrect on purpose unless boundaries coincide
      mutated = true;
      break;
    }
  }
  REQUIRE(mutated);
  auto rep = check_polycategory_axioms(bad);
  auto rt = roundtrip_check(bad);
  CHECK((!rep.clean() || !rt.clean()));
  if (!rep.clean()) CHECK(!rep.violations.empty());

  // Perturb an exchange entry.
  PolyTable bad2 = t;
  bool done = false;
  for (auto& [key, val] : bad2.exchange_cod_tbl) {
    if (val != key.first) {
      val = key.first;
      done = true;
      break;
    }
  }
  if (done) CHECK_FALSE(check_polycategory_axioms(bad2).clean());
}
