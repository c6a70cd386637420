#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polylaw/matchings.hpp"

using namespace polylaw::matchings;
using polylaw::fincard::compose;
using polylaw::fincard::FinMap;
using polylaw::fincard::induced_spans;
using polylaw::fincard::is_suitable_span;
using polylaw::symcat::all_bijections;
using polylaw::symcat::enumerate_s2;
using polylaw::symcat::enumerate_s3;
using polylaw::symcat::s2_hom;
using polylaw::symcat::s2_identity;

namespace {

// Oracle: enumerate all bijections and test suitability of the whole span,
// with no pruning and no Euler precheck.
int delta1_count_oracle(const S2Obj& phi, const S2Obj& psi) {
  if (phi.n() != psi.n()) return 0;
  int count = 0;
  for (const FinMap& f : all_bijections(phi.n()))
    if (is_suitable_span(Span(phi.phi, compose(psi.phi, f)))) ++count;
  return count;
}

}  // namespace

TEST_CASE("delta1_elements on pinned small cases") {
  S2Obj merge2(FinMap(2, 1, {1, 1}));
  S2Obj id2(FinMap(2, 2, {1, 2}));
  S2Obj id1(FinMap::identity(1));

  auto a = delta1_elements(merge2, id2);
  CHECK(a.size() == 2);  // both bijections of 2 give a path
  CHECK(a[0].f_n.values == std::vector<int>{1, 2});
  CHECK(a[1].f_n.values == std::vector<int>{2, 1});

  CHECK(delta1_elements(id1, id1).size() == 1);
  CHECK(delta1_elements(id2, id2).empty());  // 2 + 2 != 2 + 1
  CHECK(delta1_elements(merge2, id1).empty());  // 1 + 1 != 2 + 1

  CHECK_THROWS(Matching(id2, id2, FinMap::identity(2)));
}

TEST_CASE("delta1_elements agrees with the unpruned oracle") {
  for (int n = 0; n <= 4; ++n)
    for (int mp = 0; mp <= 4; ++mp)
      for (int mq = 0; mq <= 4; ++mq)
        for (const S2Obj& phi : enumerate_s2(n, mp))
          for (const S2Obj& psi : enumerate_s2(n, mq)) {
            auto elems = delta1_elements(phi, psi);
            CHECK((int)elems.size() == delta1_count_oracle(phi, psi));
            if (!elems.empty()) {
              CHECK(phi.m() + psi.m() == phi.n() + 1);
              for (size_t i = 1; i < elems.size(); ++i)
                CHECK(elems[i - 1].f_n.values < elems[i].f_n.values);
            }
          }
}

TEST_CASE("two-sided action: functoriality, commutation, equivariance") {
  for (int n = 1; n <= 3; ++n)
    for (int mp = 0; mp <= n + 1; ++mp) {
      int mq = n + 1 - mp;
      if (mq < 0) continue;
      for (const S2Obj& phi : enumerate_s2(n, mp))
        for (const S2Obj& psi : enumerate_s2(n, mq))
          for (const Matching& x : delta1_elements(phi, psi)) {
            CHECK(delta1_act_left(s2_identity(psi), x) == x);
            CHECK(delta1_act_right(x, s2_identity(phi)) == x);
            for (const S2Mor& g : s2_hom(psi, psi))
              for (const S2Mor& h : s2_hom(phi, phi)) {
                // Result is again a valid matching (ctor revalidates).
                Matching gx = delta1_act_left(g, x);
                Matching xh = delta1_act_right(x, h);
                // Actions commute.
                CHECK(delta1_act_right(gx, h) == delta1_act_left(g, xh));
                // Functoriality of each action.
                for (const S2Mor& g2 : s2_hom(psi, psi))
                  CHECK(delta1_act_left(polylaw::symcat::s2_compose(g2, g), x) ==
                        delta1_act_left(g2, gx));
                // Equivariance of the projection.
                CHECK(delta1_project(delta1_act_right(gx, h)).perm ==
                      compose(compose(g.f_n, delta1_project(x).perm), h.f_n));
              }
          }
    }
}

TEST_CASE("left action by the swap automorphism exchanges the two matchings") {
  S2Obj merge2(FinMap(2, 1, {1, 1}));
  S2Obj id2(FinMap(2, 2, {1, 2}));
  auto elems = delta1_elements(merge2, id2);
  REQUIRE(elems.size() == 2);
  auto autos = s2_hom(id2, id2);
  REQUIRE(autos.size() == 2);
  const S2Mor& swap = autos[0] == s2_identity(id2) ? autos[1] : autos[0];
  CHECK(delta1_act_left(swap, elems[0]) == elems[1]);
  CHECK(delta1_act_left(swap, elems[1]) == elems[0]);
}

TEST_CASE("projection is injective on each hom-set") {
  for (int n = 1; n <= 3; ++n)
    for (int mp = 0; mp <= n + 1; ++mp) {
      int mq = n + 1 - mp;
      if (mq < 0) continue;
      for (const S2Obj& phi : enumerate_s2(n, mp))
        for (const S2Obj& psi : enumerate_s2(n, mq)) {
          auto elems = delta1_elements(phi, psi);
          for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = i + 1; j < elems.size(); ++j)
              CHECK(delta1_project(elems[i]).perm != delta1_project(elems[j]).perm);
        }
    }
}

TEST_CASE("whiskered right elements") {
  S3Obj triv(FinMap::identity(1), FinMap::identity(1));
  CHECK(whiskered_elements_right(triv, triv).size() == 1);

  // Oracle: brute force over all bijection pairs, no prechecks.
  for (const S3Obj& phi : enumerate_s3(2, 2, 1))
    for (const S3Obj& psi : enumerate_s3(2, 2, 2)) {
      int oracle = 0;
      for (const FinMap& fn : all_bijections(2))
        for (const FinMap& fm : all_bijections(2)) {
          if (compose(psi.phi1, fn) != compose(fm, phi.phi1)) continue;
          if (is_suitable_span(Span(phi.phi2, compose(psi.phi2, fm)))) ++oracle;
        }
      CHECK((int)whiskered_elements_right(phi, psi).size() == oracle);
    }
}

TEST_CASE("whiskered left elements: pushout form = per-fiber suitability") {
  // The cardinality equation rules this pair out immediately: 2+2 != 2+1.
  S3Obj a(FinMap::identity(2), FinMap::identity(2));
  S3Obj b(FinMap(2, 1, {1, 1}), FinMap(1, 2, {1}));
  CHECK(whiskered_elements_left(a, b).empty());

  for (int n = 1; n <= 3; ++n)
    for (int m1 = 1; m1 <= 3; ++m1)
      for (int m2 = 1; m2 <= 3; ++m2)
        for (int r = 1; r <= 3; ++r)
          for (const S3Obj& phi : enumerate_s3(n, m1, r))
            for (const S3Obj& psi : enumerate_s3(n, m2, r)) {
              // Oracle: rectangle commutes and every induced span of the
              // upper square is suitable.
              int oracle = 0;
              for (const FinMap& fn : all_bijections(n))
                for (const FinMap& fr : all_bijections(r)) {
                  if (compose(fr, compose(phi.phi2, phi.phi1)) !=
                      compose(psi.phi2, compose(psi.phi1, fn)))
                    continue;
                  polylaw::fincard::CommutingSquare sq(
                      Span(phi.phi1, compose(psi.phi1, fn)),
                      compose(fr, phi.phi2), psi.phi2);
                  bool all_ok = true;
                  for (const Span& f : induced_spans(sq))
                    all_ok = all_ok && is_suitable_span(f);
                  if (all_ok) ++oracle;
                }
              CHECK((int)whiskered_elements_left(phi, psi).size() == oracle);
            }
}
