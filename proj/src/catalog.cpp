#include "k24/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "k24/blocks.hpp"
#include "k24/hamilton.hpp"
#include "k24/isomorphism.hpp"
#include "k24/minor_oracle.hpp"

namespace k24 {

// --- FamilySpec ---

std::string FamilySpec::id() const {
  if (is_wheel()) return "W" + std::to_string(n);
  std::ostringstream out;
  out << (plus ? "G+(" : "G(") << n << "," << r << "," << s << ")";
  return out.str();
}

std::vector<Edge> FamilySpec::spine_edges() const {
  std::vector<Edge> out;
  for (int i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
  return out;
}

std::vector<Edge> FamilySpec::second_spine_edges() const {
  std::vector<Edge> out;
  if (r == 2) {
    // v_{n-2} v_{n-3} ... v_1 v_{n-1} v_n, 0-indexed.
    for (int i = 0; i + 1 <= n - 3; ++i) out.emplace_back(i, i + 1);
    out.emplace_back(0, n - 2);
    out.emplace_back(n - 2, n - 1);
  } else if (s == 2) {
    // Reversal image: v_1 v_2 v_n v_{n-1} ... v_3.
    out.emplace_back(0, 1);
    out.emplace_back(1, n - 1);
    for (int i = 2; i + 1 <= n - 1; ++i) out.emplace_back(i, i + 1);
  } else {
    throw GraphError("second spine defined only when r == 2 or s == 2");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> FamilySpec::rim_and_spoke(int rim_vertex) const {
  if (!(plus && r == 1 && s == n - 3))
    throw GraphError("rim_and_spoke requires the hub-last wheel form");
  if (rim_vertex < 0 || rim_vertex > n - 2)
    throw GraphError("rim vertex out of range");
  std::vector<Edge> out;
  for (int i = 0; i + 1 <= n - 2; ++i) out.emplace_back(i, i + 1);
  out.emplace_back(0, n - 2);
  out.emplace_back(rim_vertex, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

Graph build_family(const FamilySpec& spec) {
  if (!spec.valid()) throw GraphError("family parameters out of range");
  Graph g(spec.n);
  const int n = spec.n;
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  for (int i = 1; i <= spec.r; ++i) g.add_edge(0, n - 1 - i);
  for (int j = 1; j <= spec.s; ++j) g.add_edge(n - 1, j);
  if (spec.plus) g.add_edge(0, n - 1);
  return g;
}

bool in_class_g(const FamilySpec& spec) {
  if (!spec.valid()) return false;
  if (spec.n >= 4 && spec.is_wheel()) return true;
  return spec.n >= 5 && spec.r >= 2 && spec.s >= 2 &&
         (spec.r + spec.s == spec.n - 1 || spec.r + spec.s == spec.n - 2);
}

// --- Fixed small graphs ---

namespace {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph build_k33() { return complete_bipartite(3, 3); }

Graph build_a() { return with_edge(build_k33(), 1, 2); }

Graph build_a_plus() { return with_edge(build_a(), 4, 5); }

// Two degree-4 vertices 3,4 on four triangles {0,1,2}, {3,4,5}, {3,4,6},
// {3,4,7}; remaining matching {2,5}, {1,7}, {0,6}.
Graph build_c_plus() {
  return Graph(8, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                   {3, 6}, {4, 6}, {3, 7}, {4, 7}, {2, 5}, {1, 7}, {0, 6}});
}

Graph build_c() { return delete_edge(build_c_plus(), Edge(3, 4)); }

// Common 3-sum of K4 and the triangular prism keeping the common
// triangle; labeled to match the fixed deletion/contraction rows.
Graph build_d() {
  return Graph(7, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 3}, {1, 6},
                   {2, 3}, {2, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}});
}

Graph build_q3() {
  Graph g(8);
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v)
      if (__builtin_popcount(u ^ v) == 1) g.add_edge(u, v);
  return g;
}

Graph build_v8() {
  Graph g(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

Graph build_oct_minus_e() {
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) g.add_edge(u, v);
  g.remove_edge(0, 1);
  g.remove_edge(2, 3);
  g.remove_edge(4, 5);
  g.remove_edge(0, 2);
  return g;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  // perm[old] = new label.
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

// Constraint row for the labeling searches.
struct LabelRule {
  Edge e;
  bool contract;
  // Target canonical key, or empty = must lose 3-connectivity.
  std::string target_key;
};

bool satisfies(const Graph& g, const std::vector<LabelRule>& rules) {
  for (const LabelRule& rule : rules)
    if (!g.has_edge(rule.e.u, rule.e.v)) return false;
  for (const LabelRule& rule : rules) {
    Graph res = rule.contract ? contract_edge(g, rule.e) : delete_edge(g, rule.e);
    if (rule.target_key.empty()) {
      if (is_k_connected(res, 3)) return false;
    } else {
      if (!is_k_connected(res, 3)) return false;
      if (canonical_key(res) != rule.target_key) return false;
    }
  }
  return true;
}

// Finds the lexicographically least relabeling of `g` satisfying all
// rules.  The fixed deletion/contraction rows determine these labelings;
// any satisfying labeling is equivalent for downstream use.
Graph derive_labeling(const Graph& g, const std::vector<LabelRule>& rules,
                      const std::vector<LabelRule>& extra_on_subgraph = {},
                      std::optional<Edge> subgraph_minus = std::nullopt) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  do {
    Graph cand = apply_permutation(g, perm);
    if (!satisfies(cand, rules)) continue;
    if (subgraph_minus) {
      if (!cand.has_edge(subgraph_minus->u, subgraph_minus->v)) continue;
      Graph sub = delete_edge(cand, *subgraph_minus);
      if (!satisfies(sub, extra_on_subgraph)) continue;
      // Deleting any edge of the subgraph must lose 3-connectivity.
      bool ok = true;
      for (const Edge& e : sub.edges())
        if (is_k_connected(delete_edge(sub, e), 3)) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    return cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw GraphError("labeling derivation failed: no labeling satisfies the conformance rows");
}

std::string key_of(const Graph& g) { return canonical_key(g); }

const Graph& build_b_plus() {
  static const Graph cached = [] {
    Graph base = contract_edge(build_c_plus(), Edge(0, 6));  // C+ / v1v7
    const std::string kW6 = key_of(build_family({6, 1, 3, true}));
    const std::string kG623 = key_of(build_family({6, 2, 3, false}));
    const std::string kG723 = key_of(build_family({7, 2, 3, false}));
    const std::string kA = key_of(build_a());
    const std::string kAp = key_of(build_a_plus());
    const std::string kK33 = key_of(build_k33());
    std::vector<LabelRule> bplus_rules = {
        {Edge(0, 1), false, ""},      {Edge(0, 2), false, ""},
        {Edge(0, 3), false, ""},      {Edge(3, 5), false, ""},
        {Edge(2, 5), false, kG723},   {Edge(0, 2), true, ""},
        {Edge(5, 6), true, ""},       {Edge(0, 1), true, kA},
        {Edge(0, 3), true, kAp},      {Edge(2, 5), true, kW6},
        {Edge(3, 5), true, kG623},
    };
    std::vector<LabelRule> b_rules = {
        {Edge(0, 1), true, kK33}, {Edge(0, 2), true, ""},
        {Edge(0, 3), true, kA},   {Edge(2, 5), true, kW6},
        {Edge(3, 5), true, kG623},
    };
    return derive_labeling(base, bplus_rules, b_rules, Edge(5, 6));
  }();
  return cached;
}

Graph build_b() { return delete_edge(build_b_plus(), Edge(5, 6)); }

const Graph& build_q3e() {
  static const Graph cached = [] {
    Graph base = contract_edge(build_q3(), Edge(0, 1));
    const std::string kG623 = key_of(build_family({6, 2, 3, false}));
    const std::string kPrism = key_of(build_family({6, 2, 2, false}));
    std::vector<LabelRule> rules = {
        {Edge(2, 3), true, ""},
        {Edge(1, 5), true, ""},
        {Edge(0, 1), true, kG623},
        {Edge(2, 6), true, kPrism},
    };
    return derive_labeling(base, rules);
  }();
  return cached;
}

}  // namespace

Graph named_graph(const std::string& name) {
  if (name == "K5") return complete_graph(5);
  if (name == "K33") return build_k33();
  if (name == "A") return build_a();
  if (name == "A+") return build_a_plus();
  if (name == "B") return build_b();
  if (name == "B+") return build_b_plus();
  if (name == "C") return build_c();
  if (name == "C+") return build_c_plus();
  if (name == "D") return build_d();
  if (name == "Q3") return build_q3();
  if (name == "Q3e") return build_q3e();
  if (name == "V8") return build_v8();
  if (name == "Octe") return build_oct_minus_e();
  if (name == "K24") return complete_bipartite(2, 4);
  if (name == "K23") return complete_bipartite(2, 3);
  if (name.size() >= 2 && name[0] == 'W') {
    int n = std::stoi(name.substr(1));
    return build_family({n, 1, n - 3, true});
  }
  if (name.rfind("G(", 0) == 0 || name.rfind("G+(", 0) == 0) {
    bool plus = name[1] == '+';
    std::string body = name.substr(plus ? 3 : 2);
    if (body.empty() || body.back() != ')') throw GraphError("bad family id: " + name);
    body.pop_back();
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    int n, r, s;
    if (!(in >> n >> r >> s)) throw GraphError("bad family id: " + name);
    return build_family({n, r, s, plus});
  }
  throw GraphError("unknown graph name: " + name);
}

// --- Subdividable sets ---

namespace {

SubdividableScan scan_subdividable_impl(const Graph& g, const OracleOptions& opt) {
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 20) throw GraphError("subdividable scan limited to 20 edges");
  SubdividableScan out;
  auto subdividable = [&](std::uint32_t mask) {
    std::vector<Edge> f;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) f.push_back(edges[e]);
    ++out.oracle_calls;
    return !find_k2t_minor(subdivide_edges(g, f), 4, opt).has_value();
  };
  if (!subdividable(0)) throw GraphError("graph is not K_{2,4}-minor-free");
  std::unordered_set<std::uint32_t> good = {0};
  std::vector<std::uint32_t> level = {0};
  while (!level.empty()) {
    std::set<std::uint32_t> candidates;
    for (std::uint32_t mask : level) {
      int top = mask == 0 ? -1 : 31 - __builtin_clz(mask);
      for (int e = top + 1; e < m; ++e) candidates.insert(mask | (1u << e));
    }
    std::vector<std::uint32_t> next;
    for (std::uint32_t cand : candidates) {
      bool all_subsets_good = true;
      std::uint32_t rem = cand;
      while (rem) {
        std::uint32_t low = rem & (~rem + 1);
        rem ^= low;
        if (!good.count(cand ^ low)) {
          all_subsets_good = false;
          break;
        }
      }
      if (!all_subsets_good) continue;
      if (subdividable(cand)) {
        good.insert(cand);
        next.push_back(cand);
      } else if (!out.converse_failure && __builtin_popcount(cand) >= 2) {
        std::vector<Edge> f;
        for (int e = 0; e < m; ++e)
          if (cand & (1u << e)) f.push_back(edges[e]);
        out.converse_failure = f;
      }
    }
    level = std::move(next);
  }
  for (std::uint32_t mask : good) {
    bool is_max = true;
    for (int e = 0; e < m && is_max; ++e)
      if (!(mask & (1u << e)) && good.count(mask | (1u << e))) is_max = false;
    if (is_max) {
      std::vector<Edge> f;
      for (int e = 0; e < m; ++e)
        if (mask & (1u << e)) f.push_back(edges[e]);
      out.maximal.push_back(f);
    }
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

const SubdividableScan& scan_subdividable_cached(const std::string& id,
                                                 const Graph& g) {
  static std::mutex mu;
  static std::map<std::string, SubdividableScan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, scan_subdividable_impl(g, {})).first;
  return it->second;
}

// The graphs whose maximal subdividable sets come from the brute-force
// scan rather than a closed form.
bool needs_scan(const std::string& id) {
  static const std::set<std::string> ids = {
      "W4",  "W5", "G+(5,2,2)", "G(6,2,2)", "G+(6,2,2)", "K33",
      "A",   "A+", "B",         "B+",       "C",         "C+",
      "D"};
  return ids.count(id) > 0;
}

std::vector<std::vector<Edge>> sets_for_entry(const std::string& id,
                                              const Graph& g,
                                              const std::optional<FamilySpec>& fam) {
  if (id == "K5") return {{}};
  if (id == "G(7,2,3)") {
    FamilySpec spec{7, 2, 3, false};
    std::vector<Edge> third = {Edge(0, 1), Edge(3, 4), Edge(5, 6), Edge(2, 6)};
    std::sort(third.begin(), third.end());
    std::vector<std::vector<Edge>> sets = {spec.spine_edges(),
                                           spec.second_spine_edges(), third};
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    return sets;
  }
  if (needs_scan(id)) return scan_subdividable_cached(id, g).maximal;
  if (!fam) throw GraphError("no subdividable data for " + id);
  std::vector<std::vector<Edge>> sets;
  if (fam->is_wheel()) {
    for (int j = 0; j <= fam->n - 2; ++j) sets.push_back(fam->rim_and_spoke(j));
  } else if (fam->r == 2 || fam->s == 2) {
    auto spine = fam->spine_edges();
    std::sort(spine.begin(), spine.end());
    sets.push_back(spine);
    sets.push_back(fam->second_spine_edges());
  } else {
    auto spine = fam->spine_edges();
    std::sort(spine.begin(), spine.end());
    sets.push_back(spine);
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

// --- Catalog caches ---

struct CatalogStore {
  std::mutex mu;
  std::map<int, std::vector<CatalogEntry>> by_order;
  std::vector<CatalogEntry> exceptions;
  bool exceptions_ready = false;

  static CatalogStore& instance() {
    static CatalogStore store;
    return store;
  }
};

CatalogEntry make_entry(const std::string& id, Graph g,
                        std::optional<FamilySpec> fam) {
  CatalogEntry entry;
  entry.id = id;
  entry.graph = std::move(g);
  entry.family = fam;
  std::vector<std::string> labels;
  for (int v = 0; v < entry.graph.order(); ++v)
    labels.push_back("v" + std::to_string(v + 1));
  entry.graph.set_labels(std::move(labels));
  entry.max_subdividable_sets = sets_for_entry(id, entry.graph, fam);
  entry.hamilton_bases = derive_hamilton_bases(entry);
  return entry;
}

std::vector<std::pair<std::string, Graph>> exceptions_of_order(int n) {
  std::vector<std::pair<std::string, Graph>> out;
  if (n == 5) out.emplace_back("K5", complete_graph(5));
  if (n == 6) {
    out.emplace_back("K33", build_k33());
    out.emplace_back("A", build_a());
    out.emplace_back("A+", build_a_plus());
  }
  if (n == 7) {
    out.emplace_back("B", build_b());
    out.emplace_back("B+", build_b_plus());
    out.emplace_back("D", build_d());
  }
  if (n == 8) {
    out.emplace_back("C", build_c());
    out.emplace_back("C+", build_c_plus());
  }
  return out;
}

std::vector<CatalogEntry> build_order_entries(int n) {
  if (n < 4) throw GraphError("enumerate_3connected requires n >= 4");
  std::vector<FamilySpec> candidates;
  candidates.push_back({n, 1, n - 3, true});  // the wheel
  for (int r = 2; r <= n - 3; ++r)
    for (int s = r; s <= n - 3; ++s) {
      if (r + s != n - 2 && r + s != n - 1) continue;
      candidates.push_back({n, r, s, false});
      candidates.push_back({n, r, s, true});
    }
  std::vector<CatalogEntry> out;
  std::unordered_set<std::string> seen;
  for (const FamilySpec& spec : candidates) {
    if (!in_class_g(spec)) continue;
    Graph g = build_family(spec);
    std::string key = canonical_key(g);
    if (!seen.insert(key).second) continue;
    out.push_back(make_entry(spec.id(), std::move(g), spec));
  }
  for (auto& [id, g] : exceptions_of_order(n)) {
    std::string key = canonical_key(g);
    if (!seen.insert(key).second)
      throw GraphError("exception duplicates a class member: " + id);
    out.push_back(make_entry(id, std::move(g), std::nullopt));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& enumerate_3connected(int n) {
  CatalogStore& store = CatalogStore::instance();
  std::lock_guard<std::mutex> lock(store.mu);
  auto it = store.by_order.find(n);
  if (it == store.by_order.end())
    it = store.by_order.emplace(n, build_order_entries(n)).first;
  return it->second;
}

const std::vector<CatalogEntry>& small_exceptions() {
  CatalogStore& store = CatalogStore::instance();
  std::lock_guard<std::mutex> lock(store.mu);
  if (!store.exceptions_ready) {
    for (int n : {5, 6, 7, 8})
      for (auto& [id, g] : exceptions_of_order(n))
        store.exceptions.push_back(make_entry(id, std::move(g), std::nullopt));
    store.exceptions_ready = true;
  }
  return store.exceptions;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  int n = -1;
  static const std::map<std::string, int> exception_orders = {
      {"K5", 5}, {"K33", 6}, {"A", 6},  {"A+", 6}, {"B", 7},
      {"B+", 7}, {"D", 7},   {"C", 8},  {"C+", 8}};
  auto it = exception_orders.find(id);
  if (it != exception_orders.end()) {
    n = it->second;
  } else {
    n = named_graph(id).order();
  }
  for (const CatalogEntry& e : enumerate_3connected(n))
    if (e.id == id) return e;
  throw GraphError("not a canonical catalog id: " + id);
}

const std::vector<std::vector<Edge>>& maximal_subdividable_sets(
    const std::string& id) {
  return catalog_entry(id).max_subdividable_sets;
}

std::optional<CatalogMatch> catalog_match(const Graph& g) {
  const int n = g.order();
  if (n < 4) return std::nullopt;
  for (const CatalogEntry& entry : enumerate_3connected(n)) {
    auto map = are_isomorphic(entry.graph, g);
    if (map) return CatalogMatch{&entry, std::move(*map)};
  }
  return std::nullopt;
}

// --- Hasse facts ---

namespace {

void push_all_edges(std::vector<HasseFact>& out, const std::string& name,
                    const Graph& g, bool contract,
                    std::optional<std::string> result) {
  for (const Edge& e : g.edges()) out.push_back({name, e, contract, result});
}

std::vector<HasseFact> build_hasse_facts() {
  std::vector<HasseFact> out;
  const auto loses = std::nullopt;

  Graph k33 = build_k33();
  push_all_edges(out, "K33", k33, false, loses);
  push_all_edges(out, "K33", k33, true, "W5");

  // A: label rows per the consecutive top/bottom labeling.
  Graph a = build_a();
  for (const Edge& e : a.edges())
    out.push_back({"A", e, false,
                   e == Edge(1, 2) ? std::optional<std::string>("K33") : loses});
  for (const Edge& e : a.edges()) {
    std::optional<std::string> res;
    if (e.u == 0)
      res = "G+(5,2,2)";
    else if (e == Edge(1, 2))
      res = loses;
    else
      res = "W5";
    out.push_back({"A", e, true, res});
  }

  out.push_back({"A+", Edge(0, 3), false, loses});
  out.push_back({"A+", Edge(0, 4), false, loses});
  out.push_back({"A+", Edge(1, 2), false, "A"});
  out.push_back({"A+", Edge(1, 4), false, "G(6,2,3)"});
  out.push_back({"A+", Edge(0, 3), true, "K5"});
  out.push_back({"A+", Edge(0, 4), true, "G+(5,2,2)"});
  out.push_back({"A+", Edge(1, 2), true, loses});
  out.push_back({"A+", Edge(1, 4), true, "W5"});

  Graph b = build_b();
  push_all_edges(out, "B", b, false, loses);
  out.push_back({"B", Edge(0, 1), true, "K33"});
  out.push_back({"B", Edge(0, 2), true, loses});
  out.push_back({"B", Edge(0, 3), true, "A"});
  out.push_back({"B", Edge(2, 5), true, "W6"});
  out.push_back({"B", Edge(3, 5), true, "G(6,2,3)"});

  out.push_back({"B+", Edge(0, 1), false, loses});
  out.push_back({"B+", Edge(0, 2), false, loses});
  out.push_back({"B+", Edge(0, 3), false, loses});
  out.push_back({"B+", Edge(3, 5), false, loses});
  out.push_back({"B+", Edge(2, 5), false, "G(7,2,3)"});
  out.push_back({"B+", Edge(5, 6), false, "B"});
  out.push_back({"B+", Edge(0, 2), true, loses});
  out.push_back({"B+", Edge(5, 6), true, loses});
  out.push_back({"B+", Edge(0, 1), true, "A"});
  out.push_back({"B+", Edge(0, 3), true, "A+"});
  out.push_back({"B+", Edge(2, 5), true, "W6"});
  out.push_back({"B+", Edge(3, 5), true, "G(6,2,3)"});

  Graph c = build_c();
  push_all_edges(out, "C", c, false, loses);
  out.push_back({"C", Edge(0, 1), true, loses});
  out.push_back({"C", Edge(0, 6), true, "B"});
  out.push_back({"C", Edge(3, 5), true, "G(7,2,3)"});

  Graph cp = build_c_plus();
  for (const Edge& e : cp.edges())
    out.push_back({"C+", e, false,
                   e == Edge(3, 4) ? std::optional<std::string>("C") : loses});
  out.push_back({"C+", Edge(0, 1), true, loses});
  out.push_back({"C+", Edge(3, 4), true, loses});
  out.push_back({"C+", Edge(0, 6), true, "B+"});
  out.push_back({"C+", Edge(3, 5), true, "G(7,2,3)"});

  out.push_back({"D", Edge(0, 2), false, "G(7,2,3)"});
  out.push_back({"D", Edge(1, 3), false, loses});
  out.push_back({"D", Edge(4, 5), false, loses});
  out.push_back({"D", Edge(5, 6), false, loses});
  out.push_back({"D", Edge(0, 2), true, loses});
  out.push_back({"D", Edge(1, 3), true, loses});
  out.push_back({"D", Edge(4, 5), true, "G(6,2,2)"});
  out.push_back({"D", Edge(5, 6), true, "G+(6,2,3)"});

  Graph q3e = build_q3e();
  push_all_edges(out, "Q3e", q3e, false, loses);
  out.push_back({"Q3e", Edge(2, 3), true, loses});
  out.push_back({"Q3e", Edge(1, 5), true, loses});
  out.push_back({"Q3e", Edge(0, 1), true, "G(6,2,3)"});
  out.push_back({"Q3e", Edge(2, 6), true, "G(6,2,2)"});

  Graph q3 = build_q3();
  push_all_edges(out, "Q3", q3, false, loses);
  push_all_edges(out, "Q3", q3, true, "Q3e");

  Graph v8 = build_v8();
  push_all_edges(out, "V8", v8, false, loses);
  for (int i = 0; i < 8; ++i)
    out.push_back({"V8", Edge(i, (i + 1) % 8), true, "B"});
  for (int i = 0; i < 4; ++i)
    out.push_back({"V8", Edge(i, i + 4), true, "Q3e"});

  return out;
}

}  // namespace

const std::vector<HasseFact>& hasse_facts() {
  static const std::vector<HasseFact> facts = build_hasse_facts();
  return facts;
}

SubdividableScan scan_subdividable(const Graph& g, const OracleOptions& opt) {
  return scan_subdividable_impl(g, opt);
}

}  // namespace k24
