#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "polylaw/fincard.hpp"
#include "polylaw/report.hpp"

// Symmetric polycategories over a finite object set. Two backends share one
// interface: a free polycategory on a signature of generators (terms are
// boundary-anchored trees, equality by canonical form) and a finite table
// with explicit composition and exchange entries. On top of either backend:
// family matchings, binary composition, tree-peeling polycomposition with
// boundary provenance, the axiom checker, and the binary <-> polycomposite
// roundtrip check.

namespace polylaw::polycat {

using ObjList = std::vector<std::string>;

// Backend interface. Refs are dense non-negative handles owned by the world.
struct PolyWorld {
  virtual ~PolyWorld() = default;
  virtual ObjList dom(int ref) const = 0;
  virtual ObjList cod(int ref) const = 0;
  virtual int identity(const std::string& object) = 0;
  // Composite of f into g along f's output p and g's input q (1-based):
  // f: G -> (D1, x, D2), g: (L1, x, L2) -> S gives (L1, G, L2) -> (D1, S, D2).
  virtual int compose(int g, int f, int p, int q) = 0;
  // Swap of adjacent boundary positions (i, i+1) on the stated side.
  virtual int exchange_dom(int ref, int i) = 0;
  virtual int exchange_cod(int ref, int i) = 0;
};

// Apply a whole permutation to a boundary side by decomposition into
// adjacent swaps. perm is a bijection with perm(new position) = old position,
// i.e. new boundary list = old list reindexed through perm.
int exchange_perm_dom(PolyWorld& w, int ref, const std::vector<int>& perm);
int exchange_perm_cod(PolyWorld& w, int ref, const std::vector<int>& perm);

// --- free polycategory -----------------------------------------------------

struct Generator {
  std::string name;
  ObjList dom;
  ObjList cod;
};

// A polymap of the free polycategory: either a bare wire on one object, or a
// tree of generator instances joined output-to-input, with ordered free
// boundaries. Node count t always has exactly t-1 internal edges.
struct FreeTerm {
  bool wire = false;
  std::string wire_object;
  std::vector<int> nodes;  // generator index per node
  struct Edge {
    int a;        // source node
    int out_pos;  // 1-based output port of a
    int b;        // target node
    int in_pos;   // 1-based input port of b
    bool operator==(const Edge&) const = default;
  };
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> dom_ports;  // (node, in port), free inputs
  std::vector<std::pair<int, int>> cod_ports;  // (node, out port), free outputs
};

// Canonical serialization: node labels assigned by a traversal anchored at
// the first boundary port (minimized over roots for closed terms). Equal
// strings iff equal polymaps.
std::string canonical_key(const FreeTerm& t, const std::vector<Generator>& sig);

class FreeWorld : public PolyWorld {
 public:
  explicit FreeWorld(std::vector<Generator> signature);

  ObjList dom(int ref) const override;
  ObjList cod(int ref) const override;
  int identity(const std::string& object) override;
  int compose(int g, int f, int p, int q) override;
  int exchange_dom(int ref, int i) override;
  int exchange_cod(int ref, int i) override;

  int generator(int gen_index);  // ref of the one-node term
  const FreeTerm& term(int ref) const { return terms_[ref]; }
  const std::vector<Generator>& signature() const { return sig_; }
  int size() const { return (int)terms_.size(); }
  int intern(const FreeTerm& t);

 private:
  std::vector<Generator> sig_;
  std::vector<FreeTerm> terms_;
  std::map<std::string, int> by_key_;
};

// --- finite tables ----------------------------------------------------------

// A finite presentation: polymap ids with boundaries, identities, exchange
// entries for adjacent swaps, and a partial binary-composition table.
struct PolyTable {
  ObjList objects;
  int bound = 0;  // maximal boundary list length stored
  struct MapInfo {
    ObjList dom;
    ObjList cod;
  };
  std::vector<MapInfo> maps;
  std::map<std::string, int> identities;
  std::map<std::pair<int, int>, int> exchange_dom_tbl;  // (id, i) -> id
  std::map<std::pair<int, int>, int> exchange_cod_tbl;
  std::map<std::tuple<int, int, int, int>, int> comp;  // (g, f, p, q) -> id

  std::vector<int> hom(const ObjList& dom, const ObjList& cod) const;
};

class TableWorld : public PolyWorld {
 public:
  explicit TableWorld(const PolyTable& table) : t_(table) {}
  ObjList dom(int ref) const override { return t_.maps[ref].dom; }
  ObjList cod(int ref) const override { return t_.maps[ref].cod; }
  int identity(const std::string& object) override;
  int compose(int g, int f, int p, int q) override;
  int exchange_dom(int ref, int i) override;
  int exchange_cod(int ref, int i) override;
  const PolyTable& table() const { return t_; }

 private:
  const PolyTable& t_;
};

// Truncation of a free polycategory: all polymaps reachable from identities
// and generators by composition and exchange, with boundary lengths <= bound
// and at most max_nodes generator instances. Composition entries are stored
// whenever both factors and the composite fall inside the truncation.
PolyTable build_free_table(FreeWorld& w, int bound, int max_nodes);

// --- family matchings and polycomposition -----------------------------------

// Families fs, gs of refs with a pairing of f-outputs against g-inputs.
struct FamilyMatching {
  std::vector<int> fs;
  std::vector<int> gs;
  struct Pair {
    int f_index;   // 0-based into fs
    int out_pos;   // 1-based output position
    int g_index;   // 0-based into gs
    int in_pos;    // 1-based input position
    bool operator==(const Pair&) const = default;
  };
  std::vector<Pair> pairs;
};

// The span j <- l -> k of the pairing's bipartite multigraph. Throws when a
// paired pair of positions carries different object names.
fincard::Span family_matching_span(PolyWorld& w, const FamilyMatching& fm);

// Acyclic, connected, no repeated edge; exactly the matchings along which
// polycomposition is defined.
bool is_suitable_matching(PolyWorld& w, const FamilyMatching& fm);

// Where each boundary slot of a polycomposite came from.
struct BoundarySource {
  bool from_g;  // false: f-family member, true: g-family member
  int member;   // 0-based index into the original family
  int pos;      // 1-based position in that member's boundary
  bool operator==(const BoundarySource&) const = default;
};

struct PolyComposite {
  int ref;
  std::vector<BoundarySource> dom_src;
  std::vector<BoundarySource> cod_src;
};

// Tree peeling: repeatedly binary-compose at the unique edge of a degree-1
// vertex. peel_order, when given, names the member peeled at each step
// (0..j-1 the f's, j..j+k-1 the g's); otherwise the least eligible member is
// taken, which makes the result deterministic. Different peel orders give
// the same polymap up to the boundary exchange fixed by provenance: aligning
// any order's result onto the default order's boundary yields equal refs.
PolyComposite polycompose(PolyWorld& w, const FamilyMatching& fm,
                          const std::vector<int>* peel_order = nullptr);

// Exchange c's boundary into target source order; both must carry the same
// source multisets. Returns the re-indexed ref.
int align_boundary(PolyWorld& w, const PolyComposite& c,
                   const std::vector<BoundarySource>& dom_target,
                   const std::vector<BoundarySource>& cod_target);

// All peel orders admissible for fm (each step any degree-1 vertex).
std::vector<std::vector<int>> all_peel_orders(PolyWorld& w, const FamilyMatching& fm);

// Law checker over a finite table. Each law carries a tag; violations are
// reported with a witness naming the ids involved.
report::Report check_polycategory_axioms(const PolyTable& table);

// Binary composition recovered from polycomposition by padding with
// identities: f-family = (identities of L1, f, identities of L2) star-matched
// into g. Checks this reproduces every stored composition entry, and that
// polycomposites derived from the binary data are peel-order stable.
report::Report roundtrip_check(const PolyTable& table);

}  // namespace polylaw::polycat
