#pragma once

#include <cstdint>
#include <vector>

// Finite cardinals {1,...,n}, maps between them, spans and their pushouts.
// A span n <- k -> m encodes an undirected bipartite multigraph with n+m
// vertices and k edges; component counts, connectivity and acyclicity are
// all read off from the pushout cardinality.

namespace polylaw::fincard {

using Card = int;  // a finite cardinal; the set is {1,...,n}, n >= 0

// A map between finite cardinals. values[i-1] is the image of i.
struct FinMap {
  Card dom = 0;
  Card cod = 0;
  std::vector<int> values;

  FinMap() = default;
  FinMap(Card dom_, Card cod_, std::vector<int> values_);

  static FinMap identity(Card n);
  static FinMap constant(Card n, Card cod, int value);

  int operator()(int i) const { return values[i - 1]; }
  bool operator==(const FinMap&) const = default;
  bool is_bijection() const;
  bool is_monotone() const;
};

// g after f.
FinMap compose(const FinMap& g, const FinMap& f);
FinMap inverse(const FinMap& f);  // f must be a bijection

// A span n <- k -> m in FinCard: left: k -> n, right: k -> m.
struct Span {
  FinMap left;
  FinMap right;

  Span() = default;
  Span(FinMap left_, FinMap right_);

  Card apex() const { return left.dom; }
  Card n() const { return left.cod; }
  Card m() const { return right.cod; }
  bool operator==(const Span&) const = default;
};

struct Pushout {
  Card r = 0;   // number of connected components of the induced multigraph
  FinMap tau1;  // n -> r
  FinMap tau2;  // m -> r
};

// Pushout of a span in FinCard. Components are numbered 1..r in order of
// their least vertex, n-side vertices before m-side vertices.
Pushout pushout(const Span& s);

// True iff the multigraph has exactly one connected component. The empty
// span (0 <- 0 -> 0) has r = 0 and is therefore not connected.
bool is_connected(const Span& s);

// True iff the multigraph has no cycle; a repeated edge counts as a cycle.
// Equivalently n + m = k + r.
bool is_acyclic(const Span& s);

// Acyclic and connected, i.e. the multigraph is a tree. Equivalently the
// pushout is 1 and n + m = k + 1.
bool is_suitable_span(const Span& s);

// A commuting square over a span: bottom_left . span.left =
// bottom_right . span.right.
struct CommutingSquare {
  Span span;
  FinMap bottom_left;   // n -> r
  FinMap bottom_right;  // m -> r

  CommutingSquare(Span s, FinMap bl, FinMap br);
  Card r() const { return bottom_left.cod; }
};

// The r spans obtained by pulling the square back along each i: 1 -> r.
// Element numbering within each fiber preserves the ambient order.
std::vector<Span> induced_spans(const CommutingSquare& sq);

// True iff the square is a pushout of its span (the canonical cocone maps
// isomorphically onto the given one).
bool is_pushout_square(const CommutingSquare& sq);

}  // namespace polylaw::fincard
