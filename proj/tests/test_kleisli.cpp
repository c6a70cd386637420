#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "polylaw/kleisli.hpp"
#include "polylaw/polycat.hpp"

using namespace polylaw;
using namespace polylaw::kleisli;
using polycat::FreeWorld;
using polycat::ObjList;
using polycat::PolyTable;

namespace {

// Terminal polycategory on one object up to boundary length L: every hom a
// singleton, so all laws are forced.
PolyTable terminal_table(int L) {
  PolyTable t;
  t.objects = {"*"};
  t.bound = L;
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

// One object, one map of every input arity 1..L with a single output.
// Tensor classes against the single codomain count set partitions.
PolyTable multi_table(int L) {
  PolyTable t;
  t.objects = {"*"};
  t.bound = L;
  for (int a = 1; a <= L; ++a) {
    t.maps.push_back({ObjList(a, "*"), {"*"}});
    for (int i = 1; i < a; ++i) t.exchange_dom_tbl[{a - 1, i}] = a - 1;
  }
  t.identities["*"] = 0;
  for (int a = 1; a <= L; ++a)
    for (int k = 1; k <= L; ++k) {
      if (k - 1 + a > L) continue;
      for (int q = 1; q <= k; ++q) t.comp[{k - 1, a - 1, 1, q}] = k - 2 + a;
    }
  return t;
}

PolyTable one_gen_table() {
  FreeWorld w({{"f", {"a"}, {"b", "c"}}});
  return build_free_table(w, 4, 2);
}

PolyTable two_gen_table() {
  FreeWorld w({{"f", {"a"}, {"x", "y"}}, {"g", {"x"}, {"b"}}});
  return build_free_table(w, 4, 3);
}

// Relabel element ids through a permutation (new id = perm[old id]).
PolyTable relabel(const PolyTable& t, const std::vector<int>& perm) {
  PolyTable s;
  s.objects = t.objects;
  s.bound = t.bound;
  s.maps.resize(t.maps.size());
  for (std::size_t e = 0; e < t.maps.size(); ++e) s.maps[perm[e]] = t.maps[e];
  for (const auto& [obj, e] : t.identities) s.identities[obj] = perm[e];
  for (const auto& [k, v] : t.exchange_dom_tbl)
    s.exchange_dom_tbl[{perm[k.first], k.second}] = perm[v];
  for (const auto& [k, v] : t.exchange_cod_tbl)
    s.exchange_cod_tbl[{perm[k.first], k.second}] = perm[v];
  for (const auto& [k, v] : t.comp)
    s.comp[{perm[std::get<0>(k)], perm[std::get<1>(k)], std::get<2>(k),
            std::get<3>(k)}] = perm[v];
  return s;
}

long long bell(int n) {
  // Bell triangle.
  std::vector<std::vector<long long>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> row{tri.back().back()};
    for (long long v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(std::move(row));
  }
  return tri[n][0];
}

}  // namespace

TEST_CASE("unit homs are singletons exactly on equal one-object boundaries") {
  CHECK(unit_inhabited({"a"}, {"a"}));
  CHECK_FALSE(unit_inhabited({"a", "b"}, {"a", "b"}));
  CHECK_FALSE(unit_inhabited({"a"}, {"b"}));
  CHECK_FALSE(unit_inhabited({}, {}));
  HomTable I = unit_table({"a", "b"});
  CHECK(I.hom({"a"}, {"a"}).size() == 1);
  CHECK(I.hom({"b"}, {"b"}).size() == 1);
  CHECK(I.hom({"a"}, {"b"}).empty());
}

TEST_CASE("tensoring with the unit gives back the hom sets") {
  PolyTable t = two_gen_table();
  HomTable F = hom_table(t);
  HomTable I = unit_table(t.objects);
  std::vector<std::pair<ObjList, ObjList>> cells = {
      {{"a"}, {"x", "y"}}, {{"a"}, {"b", "y"}}, {{"a"}, {"y", "b"}},
      {{"x"}, {"b"}},      {{"a"}, {"a"}},      {{"x"}, {"y"}},
      {{"x", "y"}, {"x", "y"}}};
  for (const auto& [gamma, delta] : cells) {
    int max_fam = (int)std::max(gamma.size(), delta.size()) + 1;
    auto left = tensor_elements(I, F, gamma, delta, max_fam);
    auto right = tensor_elements(F, I, gamma, delta, max_fam);
    auto hom = F.hom(gamma, delta);
    CHECK(left.size() == hom.size());
    CHECK(right.size() == hom.size());
  }
}

TEST_CASE("two-layer classes of a single generator: trivial top or bottom") {
  PolyTable t = one_gen_table();
  HomTable F = hom_table(t);
  auto raw = enumerate_composites(F, F, {"a"}, {"b", "c"}, 4);
  for (const auto& x : raw) validate_composite(F, F, x, {"a"}, {"b", "c"});
  auto classes = coend_quotient(F, F, raw);
  // The only decompositions of the generator are identity-on-top and
  // identities-on-bottom.
  CHECK(classes.size() == 2);

  // Every class multiplies to the generator itself.
  auto hom = F.hom({"a"}, {"b", "c"});
  REQUIRE(hom.size() == 1);
  polycat::TableWorld w(t);
  for (const auto& c : classes)
    CHECK(apply_mult(w, c.rep, {"a"}, {"b", "c"}) == hom[0]);

  // Class structure is independent of the generation order.
  auto shuffled = raw;
  std::mt19937 rng(7);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto again = coend_quotient(F, F, shuffled);
  REQUIRE(again.size() == classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(again[i].rep == classes[i].rep);
    CHECK(again[i].size == classes[i].size);
  }

  // Class counts are invariant under relabeling the element names.
  std::vector<int> perm(t.maps.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::rotate(perm.begin(), perm.begin() + 1, perm.end());
  PolyTable t2 = relabel(t, perm);
  HomTable F2 = hom_table(t2);
  CHECK(tensor_elements(F2, F2, {"a"}, {"b", "c"}, 4).size() == classes.size());
}

TEST_CASE("single-output maps: tensor classes count set partitions") {
  // With one map per input arity and one output each, a two-layer composite
  // into a single output is exactly a partition of the input positions into
  // the blocks fed to the top layer.
  PolyTable t = multi_table(4);
  HomTable F = hom_table(t);
  for (int n = 1; n <= 4; ++n) {
    auto classes = tensor_elements(F, F, ObjList(n, "*"), {"*"}, n + 1);
    CHECK((long long)classes.size() == bell(n));
  }
}

TEST_CASE("malformed formal composites are rejected") {
  PolyTable t = one_gen_table();
  HomTable F = hom_table(t);
  auto raw = enumerate_composites(F, F, {"a"}, {"b", "c"}, 4);
  REQUIRE(!raw.empty());
  FormalComposite x = raw[0];
  validate_composite(F, F, x, {"a"}, {"b", "c"});
  CHECK_THROWS(validate_composite(F, F, x, {"a"}, {"c", "b"}));

  FormalComposite bad_sigma = x;
  bad_sigma.sigma[0] = 2;
  CHECK_THROWS(validate_composite(F, F, bad_sigma, {"a"}, {"b", "c"}));

  FormalComposite bad_tau = x;
  REQUIRE(!bad_tau.tau.empty());
  bad_tau.tau.pop_back();
  CHECK_THROWS(validate_composite(F, F, bad_tau, {"a"}, {"b", "c"}));

  FormalComposite doubled = x;
  doubled.tau.push_back(doubled.tau[0]);
  CHECK_THROWS(validate_composite(F, F, doubled, {"a"}, {"b", "c"}));
}

TEST_CASE("enumeration refuses boundaries beyond the stored bound") {
  PolyTable t = one_gen_table();
  HomTable F = hom_table(t);
  CHECK_THROWS(enumerate_composites(F, F, ObjList(5, "a"), {"b"}, 3));
}

TEST_CASE("monoid laws hold on the corpus") {
  auto run = [](const PolyTable& t) {
    return check_monad(t, 2, 3, 40, 20260826u);
  };
  for (const PolyTable& t :
       {terminal_table(3), one_gen_table(), two_gen_table(), multi_table(3)}) {
    auto r = run(t);
    INFO(r.to_text());
    CHECK(r.clean());
    // The run actually exercised every law family.
    for (const char* tag :
         {"mult-typed", "mult-welldefined", "unit-left", "unit-right", "assoc"}) {
      bool seen = false;
      for (const auto& s : r.stats)
        if (s.tag == tag && s.checked > 0) seen = true;
      INFO(tag);
      CHECK(seen);
    }
  }
}

TEST_CASE("monoid laws and polycategory axioms fail together") {
  // A healthy table passes both checkers; breaking one composition entry or
  // one identity breaks both.
  PolyTable t = two_gen_table();
  CHECK(polycat::check_polycategory_axioms(t).clean());
  CHECK(check_monad(t, 2, 3, 40, 20260826u).clean());

  PolyTable bad_id = t;
  // Point one identity at a non-identity element.
  polycat::TableWorld w(t);
  int f_ref = t.hom({"a"}, {"x", "y"}).at(0);
  bad_id.identities["a"] = f_ref;
  CHECK_FALSE(polycat::check_polycategory_axioms(bad_id).clean());
  CHECK_FALSE(check_monad(bad_id, 2, 3, 40, 20260826u).clean());

  PolyTable bad_comp = t;
  // Redirect the generator-on-generator composite to a wrong-boundary value.
  int g_ref = t.hom({"x"}, {"b"}).at(0);
  auto it = bad_comp.comp.find({g_ref, f_ref, 1, 1});
  REQUIRE(it != bad_comp.comp.end());
  REQUIRE(it->second != f_ref);
  it->second = f_ref;
  CHECK_FALSE(polycat::check_polycategory_axioms(bad_comp).clean());
  auto r = check_monad(bad_comp, 2, 3, 40, 20260826u);
  INFO(r.to_text());
  CHECK_FALSE(r.clean());
}
