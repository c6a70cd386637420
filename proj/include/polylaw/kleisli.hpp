#pragma once

#include <map>
#include <string>
#include <vector>

#include "polylaw/polycat.hpp"
#include "polylaw/report.hpp"

// Substitution tensor over a finite discrete object set. Elements of F (x) G
// at a boundary (Gamma; Delta) are formal two-layer composites: an outer
// permutation sigma, a family of F-elements, a suitable full matching of
// their outputs against the inputs of a family of G-elements, and a closing
// permutation upsilon. The coend quotient identifies composites differing by
// a symmetric re-indexing of the middle data. A finite polymap table is a
// monoid for this tensor (unit = identities, multiplication =
// polycomposition); check_monad verifies the monoid laws instance by
// instance.

namespace polylaw::kleisli {

using polycat::ObjList;

// Hom data of a finite table: elements with boundaries and both-sided
// symmetric actions given by adjacent-swap tables. No composition.
struct HomTable {
  ObjList objects;
  int bound = 0;
  std::vector<polycat::PolyTable::MapInfo> elems;
  std::map<std::pair<int, int>, int> exchange_dom_tbl;
  std::map<std::pair<int, int>, int> exchange_cod_tbl;

  const ObjList& dom(int e) const { return elems[e].dom; }
  const ObjList& cod(int e) const { return elems[e].cod; }
  int exchange_dom(int e, int i) const;  // swap of dom positions (i, i+1)
  int exchange_cod(int e, int i) const;
  std::vector<int> hom(const ObjList& dom, const ObjList& cod) const;
};

// The hom data of a table, forgetting identities and composition.
HomTable hom_table(const polycat::PolyTable& t);

// The tensor unit: one element per object, concentrated on ((x); (x)).
HomTable unit_table(const ObjList& objects);

// Whether the unit hom at (dom; cod) is a singleton (it is otherwise empty).
bool unit_inhabited(const ObjList& dom, const ObjList& cod);

// A formal two-layer composite of F-elements fs over G-elements gs.
//   sigma: permutation of Gamma, (sigma Gamma)[i] = Gamma[sigma[i]] (1-based);
//          sigma Gamma = dom(fs[0]), ..., dom(fs[k-1]) concatenated.
//   tau:   suitable full matching of all f-outputs against all g-inputs,
//          stored as pairs sorted by (f_index, out_pos).
//   upsilon: permutation closing the codomain, Delta[i] = Cat[upsilon[i]]
//          where Cat = cod(gs[0]), ..., cod(gs[l-1]) concatenated.
struct FormalComposite {
  std::vector<int> sigma;
  std::vector<int> fs;
  std::vector<polycat::FamilyMatching::Pair> tau;
  std::vector<int> gs;
  std::vector<int> upsilon;

  // Deterministic total order: lexicographic over
  // (k, l, fs, gs, tau, sigma, upsilon).
  std::vector<int> key() const;
  bool operator==(const FormalComposite&) const = default;
  bool operator<(const FormalComposite& o) const { return key() < o.key(); }
};

// Throws std::invalid_argument unless x is a valid composite from Gamma to
// Delta over (F, G): boundaries match, tau is a suitable full matching of
// equal objects, sigma and upsilon are permutations with the stated action.
void validate_composite(const HomTable& F, const HomTable& G,
                        const FormalComposite& x, const ObjList& gamma,
                        const ObjList& delta);

// All composites from Gamma to Delta with at most max_families members in
// each layer. Complete whenever every element of F and G has a nonempty
// domain and codomain and max_families >= max(|Gamma|, |Delta|); with
// nullary elements the hom can be infinite, so the cap is a genuine
// truncation. Throws when |Gamma| or |Delta| exceeds the bound.
std::vector<FormalComposite> enumerate_composites(const HomTable& F,
                                                  const HomTable& G,
                                                  const ObjList& gamma,
                                                  const ObjList& delta,
                                                  int max_families);

// One-step coend moves out of x: an adjacent swap inside one of the four
// boundary layers (acting on the member by exchange and on sigma / tau /
// upsilon accordingly) or a swap of two adjacent members of one family.
std::vector<FormalComposite> coend_moves(const HomTable& F, const HomTable& G,
                                         const FormalComposite& x);

struct CoendClass {
  FormalComposite rep;  // least member in the deterministic order
  int size = 0;
};

// Connected components of the move graph on the closure of elems under
// coend_moves. Classes are returned sorted by representative.
std::vector<CoendClass> coend_quotient(const HomTable& F, const HomTable& G,
                                       std::vector<FormalComposite> elems);

// enumerate_composites followed by coend_quotient.
std::vector<CoendClass> tensor_elements(const HomTable& F, const HomTable& G,
                                        const ObjList& gamma,
                                        const ObjList& delta,
                                        int max_families);

// Multiplication: polycompose x's two layers along tau, then exchange the
// boundary into (Gamma; Delta) order as dictated by sigma and upsilon.
// Returns the resulting table element.
int apply_mult(polycat::TableWorld& w, const FormalComposite& x,
               const ObjList& gamma, const ObjList& delta);

// Monoid laws for the substitution tensor on a finite table, with
// multiplication given by polycomposition.
//   mult-typed / mult-welldefined: apply_mult lands in the right hom and is
//     constant on coend classes, over all boundaries of length <= max_len
//     with <= max_families members per layer;
//   unit-left / unit-right: composing with identity layers returns the
//     element;
//   assoc: both bracketings of random three-layer composites agree after
//     transporting along the boundary re-indexing fixed by provenance
//     (trials attempts, fixed seed);
//   checker-error: a law check aborted (corrupt table).
report::Report check_monad(const polycat::PolyTable& table, int max_len,
                           int max_families, int trials, unsigned seed);

}  // namespace polylaw::kleisli
