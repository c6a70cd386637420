#pragma once

#include <vector>

#include "polylaw/fincard.hpp"
#include "polylaw/symcat.hpp"

// Suitable matchings between two monotone maps: bijections of their domains
// whose induced span of parts is a tree. These carry two one-sided actions
// by commuting bijection squares and project onto plain bijections. The
// whiskered variants pair matchings at one level of a two-step chain with a
// commuting square (right) or a pushout square (left) at the other level.

namespace polylaw::matchings {

using fincard::Card;
using fincard::FinMap;
using fincard::Span;
using symcat::S1Mor;
using symcat::S2Mor;
using symcat::S2Obj;
using symcat::S3Obj;

// A bijection f_n: n_phi -> n_psi whose span m_phi <-phi n_phi ->psi.f_n m_psi
// is suitable. Endpoints are stored inline so actions are self-validating.
struct Matching {
  S2Obj phi;
  S2Obj psi;
  FinMap f_n;

  Matching() = default;
  Matching(S2Obj phi_, S2Obj psi_, FinMap f_n_);
  Span span() const;  // m_phi <- n_phi -> m_psi
  bool operator==(const Matching&) const = default;
};

// Element over two chains phi, psi: the upper squares commute and the span
// r_phi <-phi2 m_phi ->psi2.f_m r_psi of the lower level is suitable.
struct WhiskeredElemR {
  S3Obj phi;
  S3Obj psi;
  FinMap f_n;
  FinMap f_m;

  WhiskeredElemR() = default;
  WhiskeredElemR(S3Obj phi_, S3Obj psi_, FinMap f_n_, FinMap f_m_);
  Span lower_span() const;
  bool operator==(const WhiskeredElemR&) const = default;
};

// Element over two chains phi, psi: the outer rectangle commutes, the square
// over m_phi <-phi1 n_phi ->psi1.f_n m_psi with cocone (f_r . phi2, psi2) is
// a pushout, and r_psi + n_phi = m_phi + m_psi.
struct WhiskeredElemL {
  S3Obj phi;
  S3Obj psi;
  FinMap f_n;
  FinMap f_r;

  WhiskeredElemL() = default;
  WhiskeredElemL(S3Obj phi_, S3Obj psi_, FinMap f_n_, FinMap f_r_);
  fincard::CommutingSquare upper_square() const;
  bool operator==(const WhiskeredElemL&) const = default;
};

// All suitable matchings phi => psi in lexicographic order of f_n. Empty
// unless n_phi = n_psi and m_phi + m_psi = n_phi + 1. Enumeration backtracks
// over partial bijections with union-find pruning: an edge closing a cycle
// (or doubling one) kills the whole branch.
std::vector<Matching> delta1_elements(const S2Obj& phi, const S2Obj& psi);

// Left action: g: psi -> rho carries x in delta1(phi; psi) to delta1(phi; rho).
Matching delta1_act_left(const S2Mor& g, const Matching& x);
// Right action: h: phi' -> phi carries x in delta1(phi; psi) to delta1(phi'; psi).
Matching delta1_act_right(const Matching& x, const S2Mor& h);

S1Mor delta1_project(const Matching& x);

enum class WhiskerSide { Right, Left };

std::vector<WhiskeredElemR> whiskered_elements_right(const S3Obj& phi, const S3Obj& psi);
std::vector<WhiskeredElemL> whiskered_elements_left(const S3Obj& phi, const S3Obj& psi);

}  // namespace polylaw::matchings
