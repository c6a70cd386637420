#pragma once

#include <vector>

#include "polylaw/matchings.hpp"
#include "polylaw/report.hpp"
#include "polylaw/symcat.hpp"

// Coherence of the matching calculus at a single object: the unit and
// multiplication compatibilities (matchings against identity chains count
// bijections; factorizations through middle chains collapse, up to chain
// isomorphism, to matchings of the flattened chain), and the ten
// local-monomorphism cells where a composite with one formal middle must
// carry an injective projection down to plain bijections.

namespace polylaw::coherence {

using fincard::Card;
using fincard::FinMap;

// A two-stage factorization of a matching: f whiskers the lower level of a
// chain phi into a middle chain psi, g pushes psi out against a second
// middle xi, and h identifies the first leg of xi with the target rho.
// Invariants: g starts where f ends, h starts at the first leg of g's
// target; the constructor rejects anything else.
struct KElement {
  matchings::WhiskeredElemR f;
  matchings::WhiskeredElemL g;
  symcat::S2Mor h;

  KElement() = default;
  KElement(matchings::WhiskeredElemR f_, matchings::WhiskeredElemL g_,
           symcat::S2Mor h_);
  const symcat::S3Obj& chain() const { return f.phi; }
  const symcat::S2Obj& target() const { return h.tgt; }
  bool operator==(const KElement&) const = default;
};

// The matching a factorization composes to: the bijection h_n . g_n . f_n
// from the flattened chain to the target. Always suitable for a valid
// element; the constructor of the result re-checks.
matchings::Matching pdd3_forward(const KElement& x);

// All factorizations of matchings flatten(phi) => rho through middle chains
// (the middles' sizes are forced by the endpoint arities), and their
// partition into classes under re-indexing the middles by chain
// isomorphisms. Classes and members are in a stable enumeration order.
std::vector<KElement> enumerate_k_elements(const symcat::S3Obj& phi,
                                           const symcat::S2Obj& rho);
std::vector<std::vector<KElement>> k_element_classes(const symcat::S3Obj& phi,
                                                     const symcat::S2Obj& rho);

// Unit compatibility: matchings into an identity chain and squares into a
// collapse chain both number n! exactly when the source has a one-point
// lower level of the right arity, and then project bijectively onto all
// bijections. The mirrored orientation (identity chain as the source of the
// matching) is verified alongside.
report::Report check_pdd2(Card bound);

// Multiplication compatibility: for every chain and target within bound,
// factorization classes correspond one-to-one with matchings of the
// flattened chain; the correspondence is constant on classes, the arity
// bookkeeping holds on every inhabited cell, and the whole statement
// survives orientation reversal. (No explicit inverse is constructed: its
// canonical middle chains carry pushout numberings that need not be
// monotone, so invertibility is certified by the class-count bijection.)
report::Report check_pdd3(Card bound);

// The ten local-monomorphism cells, tagged PDA1..PDA10: each composite cell
// with a formal middle collapses to a single matching set whose projection
// to bijections is injective.
report::Report check_pda_local_monos(Card bound);

}  // namespace polylaw::coherence
