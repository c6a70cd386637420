#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylaw/coherence.hpp"
#include "polylaw/fincard.hpp"
#include "polylaw/kleisli.hpp"
#include "polylaw/matchings.hpp"
#include "polylaw/polycat.hpp"
#include "polylaw/report.hpp"
#include "polylaw/symcat.hpp"

using json = nlohmann::json;
using namespace polylaw;
using fincard::FinMap;
using fincard::Span;
using polycat::ObjList;
using polycat::PolyTable;
using symcat::S2Obj;
using symcat::S3Obj;

namespace {

// Thrown for malformed input of any kind; mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- encodings ---------------------------------------------------------------

// Monotone maps and bijections as "v1,...,vn@m"; "@m" is the empty map.
FinMap parse_finmap(const std::string& s) {
  auto at = s.find('@');
  if (at == std::string::npos)
    throw InputError("map '" + s + "': expected \"v1,...,vn@m\"");
  int cod = 0;
  std::vector<int> values;
  try {
    cod = std::stoi(s.substr(at + 1));
    std::stringstream body(s.substr(0, at));
    std::string item;
    while (std::getline(body, item, ',')) values.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw InputError("map '" + s + "': expected \"v1,...,vn@m\"");
  }
  if (cod < 0) throw InputError("map '" + s + "': negative codomain");
  for (int v : values)
    if (v < 1 || v > cod)
      throw InputError("map '" + s + "': value " + std::to_string(v) +
                       " outside 1.." + std::to_string(cod));
  return FinMap(static_cast<int>(values.size()), cod, values);
}

std::string show_finmap(const FinMap& f) {
  std::string out;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.values[i]);
  }
  out += '@';
  out += std::to_string(f.cod);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream body(s);
  std::string item;
  try {
    while (std::getline(body, item, ',')) out.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw InputError("expected a comma-separated integer list, got '" + s + "'");
  }
  return out;
}

// Matching pairs as "f.out:g.in" joined by commas, all 0-based members and
// 1-based ports, e.g. "0.1:0.1,0.2:1.1".
std::vector<polycat::FamilyMatching::Pair> parse_pairs(const std::string& s) {
  std::vector<polycat::FamilyMatching::Pair> out;
  if (s.empty()) return out;
  std::stringstream body(s);
  std::string item;
  while (std::getline(body, item, ',')) {
    int f, op, g, ip;
    if (std::sscanf(item.c_str(), "%d.%d:%d.%d", &f, &op, &g, &ip) != 4)
      throw InputError("pair '" + item + "': expected \"f.out:g.in\"");
    out.push_back({f, op, g, ip});
  }
  return out;
}

// --- PolyTable JSON ----------------------------------------------------------

json table_to_json(const PolyTable& t) {
  json j;
  j["objects"] = t.objects;
  j["bound"] = t.bound;
  json homs = json::array();
  for (std::size_t i = 0; i < t.maps.size(); ++i)
    homs.push_back({{"id", i}, {"dom", t.maps[i].dom}, {"cod", t.maps[i].cod}});
  j["homs"] = homs;
  j["identities"] = t.identities;
  json xd = json::array();
  for (const auto& [k, v] : t.exchange_dom_tbl) xd.push_back({k.first, k.second, v});
  json xc = json::array();
  for (const auto& [k, v] : t.exchange_cod_tbl) xc.push_back({k.first, k.second, v});
  j["exchange"] = {{"dom", xd}, {"cod", xc}};
  json comp = json::array();
  for (const auto& [k, v] : t.comp) {
    auto [g, f, p, q] = k;
    comp.push_back({g, f, p, q, v});
  }
  j["composition"] = comp;
  return j;
}

PolyTable table_from_json(const json& j) {
  PolyTable t;
  try {
    t.objects = j.at("objects").get<ObjList>();
    t.bound = j.at("bound").get<int>();
    for (const auto& h : j.at("homs"))
      t.maps.push_back({h.at("dom").get<ObjList>(), h.at("cod").get<ObjList>()});
    t.identities = j.at("identities").get<std::map<std::string, int>>();
    for (const auto& e : j.at("exchange").at("dom"))
      t.exchange_dom_tbl[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<int>();
    for (const auto& e : j.at("exchange").at("cod"))
      t.exchange_cod_tbl[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<int>();
    for (const auto& e : j.at("composition"))
      t.comp[{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
              e.at(3).get<int>()}] = e.at(4).get<int>();
  } catch (const json::exception& e) {
    throw InputError(std::string("table structure: ") + e.what());
  }

  const int n = static_cast<int>(t.maps.size());
  auto need = [&](int id, const std::string& where) {
    if (id < 0 || id >= n)
      throw InputError("reference error: id " + std::to_string(id) +
                       " in " + where + " names no hom entry");
  };
  for (const auto& [obj, id] : t.identities) {
    need(id, "identities");
    bool known = false;
    for (const auto& o : t.objects) known = known || o == obj;
    if (!known) throw InputError("reference error: identity object '" + obj + "' not declared");
    if (t.maps[id].dom != ObjList{obj} || t.maps[id].cod != ObjList{obj})
      throw InputError("invariant error: identity of '" + obj +
                       "' has boundary not ((" + obj + ");(" + obj + "))");
  }
  for (const auto& m : t.maps) {
    if (static_cast<int>(m.dom.size()) > t.bound ||
        static_cast<int>(m.cod.size()) > t.bound)
      throw InputError("invariant error: hom boundary exceeds bound");
    for (const auto& o : m.dom)
      for (const auto& known : std::vector<ObjList>{t.objects})
        if (std::find(known.begin(), known.end(), o) == known.end())
          throw InputError("reference error: object '" + o + "' not declared");
    for (const auto& o : m.cod)
      if (std::find(t.objects.begin(), t.objects.end(), o) == t.objects.end())
        throw InputError("reference error: object '" + o + "' not declared");
  }
  for (const auto& [k, v] : t.exchange_dom_tbl) {
    need(k.first, "exchange.dom");
    need(v, "exchange.dom");
    if (k.second < 1 || k.second >= static_cast<int>(t.maps[k.first].dom.size()))
      throw InputError("invariant error: exchange.dom entry (" +
                       std::to_string(k.first) + "," + std::to_string(k.second) +
                       ") swaps outside the boundary");
  }
  for (const auto& [k, v] : t.exchange_cod_tbl) {
    need(k.first, "exchange.cod");
    need(v, "exchange.cod");
    if (k.second < 1 || k.second >= static_cast<int>(t.maps[k.first].cod.size()))
      throw InputError("invariant error: exchange.cod entry (" +
                       std::to_string(k.first) + "," + std::to_string(k.second) +
                       ") swaps outside the boundary");
  }
  for (const auto& [k, v] : t.comp) {
    auto [g, f, p, q] = k;
    const std::string entry = "composition entry (" + std::to_string(g) + "," +
                              std::to_string(f) + "," + std::to_string(p) + "," +
                              std::to_string(q) + ")";
    need(g, entry);
    need(f, entry);
    need(v, entry);
    const auto& gm = t.maps[g];
    const auto& fm = t.maps[f];
    if (p < 1 || p > static_cast<int>(fm.cod.size()) || q < 1 ||
        q > static_cast<int>(gm.dom.size()))
      throw InputError("invariant error: " + entry + " cuts outside the boundaries");
    if (fm.cod[p - 1] != gm.dom[q - 1])
      throw InputError("invariant error: " + entry + " cut objects differ ('" +
                       fm.cod[p - 1] + "' vs '" + gm.dom[q - 1] + "')");
  }
  return t;
}

PolyTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    // nlohmann reports human line/column positions in the message.
    throw InputError("parse error in '" + path + "': " + e.what());
  }
  return table_from_json(j);
}

// --- built-in verification corpus --------------------------------------------

// One object, one polymap per boundary shape up to the bound: the terminal
// polycategory truncation.
PolyTable terminal_table(int bound) {
  PolyTable t;
  t.objects = {"*"};
  t.bound = bound;
  auto id_of = [&](int a, int b) { return a * (bound + 1) + b; };
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      t.maps.push_back({ObjList(a, "*"), ObjList(b, "*")});
  t.identities["*"] = id_of(1, 1);
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      for (int i = 1; i < a; ++i) t.exchange_dom_tbl[{id_of(a, b), i}] = id_of(a, b);
      for (int i = 1; i < b; ++i) t.exchange_cod_tbl[{id_of(a, b), i}] = id_of(a, b);
    }
  for (int a = 0; a <= bound; ++a)
    for (int b = 1; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (int d = 0; d <= bound; ++d) {
          int a2 = c + a - 1, b2 = d + b - 1;
          if (a2 > bound || b2 > bound || c < 1) continue;
          for (int p = 1; p <= b; ++p)
            for (int q = 1; q <= c; ++q)
              t.comp[{id_of(c, d), id_of(a, b), p, q}] = id_of(a2, b2);
        }
  return t;
}

std::vector<std::pair<std::string, PolyTable>> builtin_corpus(int bound) {
  std::vector<std::pair<std::string, PolyTable>> out;
  out.emplace_back("terminal", terminal_table(std::min(bound, 3)));
  {
    polycat::FreeWorld w({{"f", {"a"}, {"b", "c"}}});
    out.emplace_back("free-1gen", polycat::build_free_table(w, 4, 2));
  }
  {
    polycat::FreeWorld w({{"f", {"a"}, {"x", "y"}}, {"g", {"x"}, {"b"}}});
    out.emplace_back("free-2gen", polycat::build_free_table(w, 4, 3));
  }
  return out;
}

// --- span and matching suites -------------------------------------------------

// Independent multigraph oracles: explicit BFS component count and DFS cycle
// search (a repeated edge is a cycle), never consulting the pushout.
struct GraphOracle {
  int vertices;
  std::vector<std::pair<int, int>> edges;

  explicit GraphOracle(const Span& s) : vertices(s.n() + s.m()) {
    for (int e = 1; e <= s.apex(); ++e)
      edges.emplace_back(s.left(e) - 1, s.n() + s.right(e) - 1);
  }
  int components() const {
    std::vector<int> color(vertices, -1);
    int c = 0;
    for (int v = 0; v < vertices; ++v) {
      if (color[v] != -1) continue;
      std::vector<int> stack{v};
      color[v] = c;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < edges.size(); ++e) {
          int w = -1;
          if (edges[e].first == u) w = edges[e].second;
          if (edges[e].second == u) w = edges[e].first;
          if (w != -1 && color[w] == -1) {
            color[w] = c;
            stack.push_back(w);
          }
        }
      }
      ++c;
    }
    return c;
  }
  bool acyclic() const {
    // DFS from every root, never reusing the edge that discovered a vertex;
    // reaching a visited vertex again closes a cycle.
    std::vector<bool> seen(vertices, false);
    for (int v = 0; v < vertices; ++v) {
      if (seen[v]) continue;
      std::vector<std::pair<int, int>> stack{{v, -1}};  // (vertex, via edge)
      seen[v] = true;
      while (!stack.empty()) {
        auto [u, via] = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (static_cast<int>(e) == via) continue;
          int w = -1;
          if (edges[e].first == u) w = edges[e].second;
          if (edges[e].second == u) w = edges[e].first;
          if (w == -1) continue;
          if (seen[w]) return false;
          seen[w] = true;
          stack.push_back({w, static_cast<int>(e)});
        }
      }
    }
    return true;
  }
};

void all_maps_rec(int k, int n, std::vector<int>& cur,
                  std::vector<FinMap>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.emplace_back(k, n, cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    cur.push_back(v);
    all_maps_rec(k, n, cur, out);
    cur.pop_back();
  }
}

std::vector<FinMap> all_maps(int k, int n) {
  std::vector<FinMap> out;
  if (k == 0) {
    out.emplace_back(0, n, std::vector<int>{});
    return out;
  }
  if (n == 0) return out;
  std::vector<int> cur;
  all_maps_rec(k, n, cur, out);
  return out;
}

report::Report span_suite(int bound) {
  report::Report rep;
  for (int k = 0; k <= bound; ++k)
    for (int n = 0; n <= bound; ++n)
      for (int m = 0; m <= bound; ++m)
        for (const FinMap& l : all_maps(k, n))
          for (const FinMap& r : all_maps(k, m)) {
            Span s(l, r);
            GraphOracle g(s);
            std::string cell = "left=" + show_finmap(l) + " right=" + show_finmap(r);
            int rr = fincard::pushout(s).r;
            bool ac = fincard::is_acyclic(s);
            bool co = fincard::is_connected(s);
            rep.check("span-components", rr == g.components(), cell);
            rep.check("span-acyclic", ac == g.acyclic(), cell);
            rep.check("span-connected", co == (g.components() == 1), cell);
            // Euler two-of-three: any two of acyclic / connected / n+m=k+1
            // force the third.
            bool euler = n + m == k + 1;
            bool two_of_three = (!(ac && co) || euler) && (!(ac && euler) || co) &&
                                (!(co && euler) || ac);
            rep.check("span-euler", two_of_three, cell);
          }
  return rep;
}

report::Report delta1_suite(int bound) {
  report::Report rep;
  std::vector<S2Obj> objs;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (const S2Obj& phi : symcat::enumerate_s2(n, m)) objs.push_back(phi);

  for (const S2Obj& phi : objs)
    for (const S2Obj& psi : objs) {
      std::string cell = "phi=" + show_finmap(phi.phi) + " psi=" + show_finmap(psi.phi);
      auto d = matchings::delta1_elements(phi, psi);
      // Independent count: test every bijection's whole span.
      int oracle = 0;
      if (phi.n() == psi.n())
        for (const FinMap& f : symcat::all_bijections(phi.n()))
          if (fincard::is_suitable_span(Span(phi.phi, fincard::compose(psi.phi, f))))
            ++oracle;
      rep.check("delta1-count", static_cast<int>(d.size()) == oracle, cell);
      rep.check("delta1-euler",
                d.empty() || phi.m() + psi.m() == phi.n() + 1, cell);
      if (d.empty()) continue;
      // Action functoriality: identities act trivially; composites act as
      // composed actions, on both sides.
      bool ok = true;
      for (const auto& x : d) {
        if (!(matchings::delta1_act_left(symcat::s2_identity(psi), x) == x)) ok = false;
        if (!(matchings::delta1_act_right(x, symcat::s2_identity(phi)) == x)) ok = false;
      }
      for (const S2Obj& rho : symcat::enumerate_s2(psi.n(), psi.m()))
        for (const auto& g1 : symcat::s2_hom(psi, rho))
          for (const S2Obj& rho2 : symcat::enumerate_s2(psi.n(), psi.m()))
            for (const auto& g2 : symcat::s2_hom(rho, rho2))
              for (const auto& x : d) {
                auto lhs = matchings::delta1_act_left(symcat::s2_compose(g2, g1), x);
                auto rhs = matchings::delta1_act_left(g2, matchings::delta1_act_left(g1, x));
                if (!(lhs == rhs)) ok = false;
              }
      for (const S2Obj& rho : symcat::enumerate_s2(phi.n(), phi.m()))
        for (const auto& h1 : symcat::s2_hom(rho, phi))
          for (const S2Obj& rho2 : symcat::enumerate_s2(phi.n(), phi.m()))
            for (const auto& h2 : symcat::s2_hom(rho2, rho))
              for (const auto& x : d) {
                auto lhs = matchings::delta1_act_right(x, symcat::s2_compose(h1, h2));
                auto rhs = matchings::delta1_act_right(matchings::delta1_act_right(x, h1), h2);
                if (!(lhs == rhs)) ok = false;
              }
      rep.check("delta1-actions", ok, cell);
    }
  return rep;
}

// --- suite orchestration -------------------------------------------------------

report::Report run_one_suite(const std::string& suite, int bound, unsigned seed,
                             const std::optional<PolyTable>& table) {
  report::Report rep;
  auto tables = [&]() {
    std::vector<std::pair<std::string, PolyTable>> out;
    if (table)
      out.emplace_back("given", *table);
    else
      out = builtin_corpus(bound);
    return out;
  };
  if (suite == "spans") return span_suite(bound);
  if (suite == "delta1") return delta1_suite(bound);
  if (suite == "pdd2") return coherence::check_pdd2(bound);
  if (suite == "pdd3") return coherence::check_pdd3(bound);
  if (suite == "pda") return coherence::check_pda_local_monos(bound);
  if (suite == "polyaxioms") {
    for (const auto& [name, t] : tables()) rep.merge(polycat::check_polycategory_axioms(t));
    return rep;
  }
  if (suite == "roundtrip") {
    for (const auto& [name, t] : tables()) rep.merge(polycat::roundtrip_check(t));
    return rep;
  }
  if (suite == "monad") {
    for (const auto& [name, t] : tables())
      rep.merge(kleisli::check_monad(t, 2, 3, 40, seed));
    return rep;
  }
  if (suite == "all") {
    for (const std::string& s : {"spans", "delta1", "pdd2", "pdd3", "pda",
                                 "polyaxioms", "roundtrip", "monad"})
      rep.merge(run_one_suite(s, bound, seed, table));
    return rep;
  }
  throw InputError("unknown suite '" + suite + "'");
}

void emit_report(const report::Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_text();
}

void emit_listing(const std::vector<std::string>& lines, const std::string& format) {
  if (format == "json") {
    json j;
    j["entries"] = lines;
    j["count"] = lines.size();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << "count " << lines.size() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polylaw: suitable-matching calculus and bounded law verification"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand name
  std::string format = "text";
  app.add_option("--format", format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  // span: analyze one span.
  auto* span_cmd = app.add_subcommand("span", "analyze a span of finite cardinals");
  std::string left_s, right_s;
  span_cmd->add_option("--left", left_s, "left leg \"v1,...,vk@n\"")->required();
  span_cmd->add_option("--right", right_s, "right leg \"v1,...,vk@m\"")->required();

  // enumerate: canonical listings.
  auto* enum_cmd = app.add_subcommand("enumerate", "list combinatorial data");
  std::string kind;
  enum_cmd->add_option("kind", kind, "s2|s3|delta1|whiskered")->required();
  int en = 0, em = 0, er = 0;
  std::string phi_s, psi_s, phi2_s, psi2_s, side = "right";
  enum_cmd->add_option("--n", en, "domain cardinal");
  enum_cmd->add_option("--m", em, "middle/codomain cardinal");
  enum_cmd->add_option("--r", er, "final cardinal (s3)");
  enum_cmd->add_option("--phi", phi_s, "first map (delta1) or first leg (whiskered)");
  enum_cmd->add_option("--psi", psi_s, "second map (delta1) or first leg (whiskered)");
  enum_cmd->add_option("--phi2", phi2_s, "second leg of the first chain (whiskered)");
  enum_cmd->add_option("--psi2", psi2_s, "second leg of the second chain (whiskered)");
  enum_cmd->add_option("--side", side, "whiskered side (left|right)")
      ->check(CLI::IsMember({"left", "right"}));

  // compose: polycomposition inside a table, or table normalization.
  auto* comp_cmd = app.add_subcommand("compose", "polycompose families in a table");
  std::string table_path, fs_s, gs_s, pairs_s;
  bool print_table = false;
  comp_cmd->add_option("--table", table_path, "PolyTable JSON file")->required();
  comp_cmd->add_option("--fs", fs_s, "comma-separated ids of the f-family");
  comp_cmd->add_option("--gs", gs_s, "comma-separated ids of the g-family");
  comp_cmd->add_option("--pairs", pairs_s, "matching \"f.out:g.in,...\"");
  comp_cmd->add_flag("--print", print_table, "parse, validate and reprint the table");

  // verify: orchestrated suites.
  auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int bound = 3;
  unsigned seed = 1;
  std::string ver_table_path;
  ver_cmd->add_option("--suite", suite,
                      "spans|delta1|pdd2|pdd3|pda|polyaxioms|monad|roundtrip|all");
  ver_cmd->add_option("--bound", bound, "size bound")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--seed", seed, "seed for sampled checks");
  ver_cmd->add_option("--table", ver_table_path,
                      "run table suites on this file instead of the corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (span_cmd->parsed()) {
      Span s(parse_finmap(left_s), parse_finmap(right_s));
      auto p = fincard::pushout(s);
      if (format == "json") {
        json j;
        j["apex"] = s.apex();
        j["n"] = s.n();
        j["m"] = s.m();
        j["components"] = p.r;
        j["acyclic"] = fincard::is_acyclic(s);
        j["connected"] = fincard::is_connected(s);
        j["suitable"] = fincard::is_suitable_span(s);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "apex " << s.apex() << " n " << s.n() << " m " << s.m()
                  << "\ncomponents " << p.r
                  << "\nacyclic " << (fincard::is_acyclic(s) ? "yes" : "no")
                  << "\nconnected " << (fincard::is_connected(s) ? "yes" : "no")
                  << "\nsuitable " << (fincard::is_suitable_span(s) ? "yes" : "no")
                  << "\n";
      }
      return 0;
    }

    if (enum_cmd->parsed()) {
      std::vector<std::string> lines;
      if (kind == "s2") {
        for (const auto& phi : symcat::enumerate_s2(en, em))
          lines.push_back(show_finmap(phi.phi));
      } else if (kind == "s3") {
        for (const auto& phi : symcat::enumerate_s3(en, em, er))
          lines.push_back(show_finmap(phi.phi1) + " ; " + show_finmap(phi.phi2));
      } else if (kind == "delta1") {
        S2Obj phi(parse_finmap(phi_s)), psi(parse_finmap(psi_s));
        for (const auto& x : matchings::delta1_elements(phi, psi))
          lines.push_back(show_finmap(x.f_n));
      } else if (kind == "whiskered") {
        if (phi2_s.empty() || psi2_s.empty())
          throw InputError("whiskered: --phi/--phi2 and --psi/--psi2 required");
        S3Obj phi(parse_finmap(phi_s), parse_finmap(phi2_s));
        S3Obj psi(parse_finmap(psi_s), parse_finmap(psi2_s));
        if (side == "right") {
          for (const auto& x : matchings::whiskered_elements_right(phi, psi))
            lines.push_back(show_finmap(x.f_n) + " ; " + show_finmap(x.f_m));
        } else {
          for (const auto& x : matchings::whiskered_elements_left(phi, psi))
            lines.push_back(show_finmap(x.f_n) + " ; " + show_finmap(x.f_r));
        }
      } else {
        throw InputError("unknown enumeration kind '" + kind + "'");
      }
      emit_listing(lines, format);
      return 0;
    }

    if (comp_cmd->parsed()) {
      PolyTable t = load_table(table_path);
      if (print_table) {
        std::cout << table_to_json(t).dump(2) << "\n";
        return 0;
      }
      if (fs_s.empty() || gs_s.empty())
        throw InputError("compose: --fs and --gs required (or use --print)");
      polycat::FamilyMatching fm;
      fm.fs = parse_int_list(fs_s);
      fm.gs = parse_int_list(gs_s);
      fm.pairs = parse_pairs(pairs_s);
      for (int id : fm.fs)
        if (id < 0 || id >= static_cast<int>(t.maps.size()))
          throw InputError("reference error: id " + std::to_string(id));
      for (int id : fm.gs)
        if (id < 0 || id >= static_cast<int>(t.maps.size()))
          throw InputError("reference error: id " + std::to_string(id));
      polycat::TableWorld w(t);
      if (!polycat::is_suitable_matching(w, fm))
        throw InputError("matching is not suitable (must be acyclic, connected, no repeats)");
      auto c = polycat::polycompose(w, fm);
      auto show_src = [](const polycat::BoundarySource& s) {
        return std::string(s.from_g ? "g" : "f") + std::to_string(s.member) + "." +
               std::to_string(s.pos);
      };
      if (format == "json") {
        json j;
        j["ref"] = c.ref;
        j["dom"] = w.dom(c.ref);
        j["cod"] = w.cod(c.ref);
        json ds = json::array(), cs = json::array();
        for (const auto& s : c.dom_src) ds.push_back(show_src(s));
        for (const auto& s : c.cod_src) cs.push_back(show_src(s));
        j["dom_sources"] = ds;
        j["cod_sources"] = cs;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "ref " << c.ref << "\ndom";
        for (std::size_t i = 0; i < c.dom_src.size(); ++i)
          std::cout << " " << w.dom(c.ref)[i] << "<" << show_src(c.dom_src[i]) << ">";
        std::cout << "\ncod";
        for (std::size_t i = 0; i < c.cod_src.size(); ++i)
          std::cout << " " << w.cod(c.ref)[i] << "<" << show_src(c.cod_src[i]) << ">";
        std::cout << "\n";
      }
      return 0;
    }

    if (ver_cmd->parsed()) {
      std::optional<PolyTable> t;
      if (!ver_table_path.empty()) t = load_table(ver_table_path);
      report::Report rep = run_one_suite(suite, bound, seed, t);
      emit_report(rep, format);
      return rep.clean() ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
