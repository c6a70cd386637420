#pragma once

#include <vector>

#include "polylaw/fincard.hpp"

// Finite cardinals with bijections, and the one- and two-step towers of
// monotone maps over them: objects are monotone maps (resp. composable pairs
// of monotone maps), morphisms are ladders of bijections making every square
// commute. Together with the structure maps at a single object these are the
// raw material for the coherence checks.

namespace polylaw::symcat {

using fincard::Card;
using fincard::FinMap;

// A bijection between equal cardinals.
struct S1Mor {
  FinMap perm;  // invariant: perm.is_bijection()

  S1Mor() = default;
  explicit S1Mor(FinMap perm_);
  bool operator==(const S1Mor&) const = default;
};

// A monotone map n -> m.
struct S2Obj {
  FinMap phi;  // invariant: phi.is_monotone()

  S2Obj() = default;
  explicit S2Obj(FinMap phi_);
  Card n() const { return phi.dom; }
  Card m() const { return phi.cod; }
  bool operator==(const S2Obj&) const = default;
};

// A commuting square of bijections over two monotone maps:
// tgt.phi . f_n = f_m . src.phi.
struct S2Mor {
  S2Obj src;
  S2Obj tgt;
  FinMap f_n;
  FinMap f_m;

  S2Mor() = default;
  S2Mor(S2Obj src_, S2Obj tgt_, FinMap f_n_, FinMap f_m_);
  bool operator==(const S2Mor&) const = default;
};

// A composable pair of monotone maps n -> m -> r.
struct S3Obj {
  FinMap phi1;
  FinMap phi2;

  S3Obj() = default;
  S3Obj(FinMap phi1_, FinMap phi2_);
  Card n() const { return phi1.dom; }
  Card m() const { return phi1.cod; }
  Card r() const { return phi2.cod; }
  bool operator==(const S3Obj&) const = default;
};

// A ladder of three bijections with both squares commuting.
struct S3Mor {
  S3Obj src;
  S3Obj tgt;
  FinMap f_n;
  FinMap f_m;
  FinMap f_r;

  S3Mor() = default;
  S3Mor(S3Obj src_, S3Obj tgt_, FinMap f_n_, FinMap f_m_, FinMap f_r_);
  bool operator==(const S3Mor&) const = default;
};

// All bijections of n, in lexicographic order of their value sequences.
std::vector<FinMap> all_bijections(Card n);

// All commuting bijection squares phi => psi, ordered lexicographically by
// (f_n, f_m). Empty unless the fiber-size multisets agree.
std::vector<S2Mor> s2_hom(const S2Obj& phi, const S2Obj& psi);

S2Mor s2_compose(const S2Mor& g, const S2Mor& f);  // g after f
S2Mor s2_identity(const S2Obj& phi);

// All commuting bijection ladders phi => psi, ordered by (f_n, f_m, f_r).
std::vector<S3Mor> s3_hom(const S3Obj& phi, const S3Obj& psi);

S3Mor s3_compose(const S3Mor& g, const S3Mor& f);
S3Mor s3_identity(const S3Obj& phi);
S3Mor s3_inverse(const S3Mor& f);

// Structure maps at a single object.
S2Obj unit_chain(Card n);       // n -> n, identity
S2Obj collapse_chain(Card n);   // n -> 1, constant
Card mult_card(const S2Obj& phi);           // n_phi
S2Obj flatten_outer(const S3Obj& phi);      // n -> m, first leg
S2Obj flatten_inner(const S3Obj& phi);      // n -> r, composite leg

// All monotone maps n -> m in lexicographic order; count = C(n+m-1, n).
std::vector<S2Obj> enumerate_s2(Card n, Card m);

// All composable pairs n -> m -> r, lexicographic in (phi1, phi2).
std::vector<S3Obj> enumerate_s3(Card n, Card m, Card r);

}  // namespace polylaw::symcat
