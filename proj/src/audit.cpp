#include "k24/audit.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "k24/blocks.hpp"
#include "k24/graph_io.hpp"
#include "k24/isomorphism.hpp"
#include "k24/recognizer.hpp"

namespace k24 {

void AuditReport::merge(const AuditReport& other) {
  issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  items += other.items;
  budget_exceeded += other.budget_exceeded;
}

AuditReport compare_corpus(const std::vector<Graph>& corpus,
                           const OracleOptions& opt, int jobs) {
  struct Item {
    bool budget = false;
    std::string issue;
  };
  std::vector<Item> results(corpus.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      const Graph& g = corpus[i];
      Item& item = results[i];
      try {
        bool oracle_minor = find_k2t_minor(g, 4, opt).has_value();
        K24Certificate cert = recognize(g, opt);
        if (cert.has_minor != oracle_minor) {
          std::ostringstream msg;
          msg << "graph " << i << " (" << emit_graph6(g) << "): recognizer says "
              << (cert.has_minor ? "minor" : "free") << ", oracle says "
              << (oracle_minor ? "minor" : "free");
          item.issue = msg.str();
        } else if (!verify_certificate(g, cert)) {
          item.issue = "graph " + std::to_string(i) + " (" + emit_graph6(g) +
                       "): certificate failed verification";
        }
      } catch (const BudgetExceededError&) {
        item.budget = true;
      } catch (const std::exception& e) {
        item.issue = "graph " + std::to_string(i) + " (" + emit_graph6(g) +
                     "): exception: " + e.what();
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  AuditReport report;
  report.items = corpus.size();
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (results[i].budget) {
      ++report.budget_exceeded;
      report.add("compare", "graph " + std::to_string(i) + ": budget exceeded");
    } else if (!results[i].issue.empty()) {
      report.add("compare", results[i].issue);
    }
  }
  return report;
}

std::pair<int, int> check_counting(int n) {
  int expected;
  if (n == 4) {
    expected = 1;
  } else {
    expected = 2 * n - 8;
    if (n == 5) expected += 1;  // K5
    if (n == 6) expected += 3;  // K33, A, A+
    if (n == 7) expected += 3;  // B, B+, D
    if (n == 8) expected += 2;  // C, C+
  }
  return {expected, static_cast<int>(enumerate_3connected(n).size())};
}

Graph dense_free_witness(int n) {
  if (n < 6) throw GraphError("dense witness requires n >= 6");
  const CatalogEntry& aplus = catalog_entry("A+");
  if (aplus.max_subdividable_sets.empty() ||
      aplus.max_subdividable_sets[0].empty())
    throw GraphError("A+ has no nonempty subdividable set");
  if (n == 6) return aplus.graph;
  const Edge e = aplus.max_subdividable_sets[0][0];
  // Replace e by a maximal uv-outerplanar strip on n-4 vertices: a path
  // with a full fan of chords from one end.
  const int k = n - 4;
  Graph g(n);
  for (const Edge& f : aplus.graph.edges())
    if (!(f == e)) g.add_edge(f.u, f.v);
  std::vector<int> strip = {e.u};
  for (int i = 0; i < k - 2; ++i) strip.push_back(6 + i);
  strip.push_back(e.v);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(strip[i], strip[i + 1]);
  for (int i = 2; i < k; ++i) g.add_edge(strip[0], strip[i]);
  return g;
}

AuditReport check_edge_bounds(int n_min, int n_max) {
  AuditReport report;
  for (int n = std::max(7, n_min); n <= n_max; ++n) {
    int max_edges = 0;
    std::string argmax;
    for (const CatalogEntry& e : enumerate_3connected(n))
      if (e.graph.edge_count() > max_edges) {
        max_edges = e.graph.edge_count();
        argmax = e.id;
      }
    ++report.items;
    if (max_edges != 2 * n - 2) {
      std::ostringstream msg;
      msg << "n=" << n << ": max edges over 3-connected graphs is " << max_edges
          << " (" << argmax << "), stated bound is " << (2 * n - 2);
      report.add("edges", msg.str());
    }
  }
  for (int n = std::max(6, n_min); n <= n_max; ++n) {
    Graph w = dense_free_witness(n);
    ++report.items;
    if (w.edge_count() != 2 * n - 1) {
      report.add("edges", "witness at n=" + std::to_string(n) +
                              " does not have 2n-1 edges");
      continue;
    }
    if (!is_k_connected(w, 2)) {
      report.add("edges", "witness at n=" + std::to_string(n) +
                              " is not 2-connected");
      continue;
    }
    if (recognize(w).has_minor)
      report.add("edges", "witness at n=" + std::to_string(n) +
                              " is not K_{2,4}-minor-free");
  }
  // Randomized 2-connected free graphs never exceed 2n-1 edges.
  for (const Graph& g : random_corpus(60, 9, 0x5eed)) {
    ++report.items;
    try {
      if (!recognize(g).has_minor &&
          g.edge_count() > 2 * g.order() - 1)
        report.add("edges", "random free graph with " +
                                std::to_string(g.edge_count()) + " edges on " +
                                std::to_string(g.order()) + " vertices");
    } catch (const BudgetExceededError&) {
      ++report.budget_exceeded;
    }
  }
  return report;
}

// --- Table 1 ---

namespace {

struct RowExpectation {
  Graph expected;
  bool three_connected;
  bool in_class;
};

Graph family_minus(const FamilySpec& spec, std::optional<Edge> minus) {
  Graph g = build_family(spec);
  if (minus) g.remove_edge(minus->u, minus->v);
  return g;
}

// K_1 + P_{n-2}: a fan.
Graph fan_graph(int n) {
  Graph g(n);
  for (int i = 1; i + 1 < n; ++i) g.add_edge(i, i + 1);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

// Contraction-table row for edge e of G^{(+)}_{n,r,s} with r,s >= 2;
// nullopt when the edge is covered by the reversal symmetry instead.
std::optional<RowExpectation> classify_contraction(const FamilySpec& spec,
                                                   Edge e) {
  const int n = spec.n, r = spec.r, s = spec.s;
  const bool plus = spec.plus;
  auto is_pair = [&](int a, int b) { return e == Edge(a, b); };

  // Spine edges.
  if (r + s == n - 2 && is_pair(s, n - r - 1))
    return RowExpectation{build_family({n - 1, r, s, plus}), true, true};
  for (int i = 2; i <= r && r >= 3; ++i)
    if (is_pair(n - 1 - i, n - i))
      return RowExpectation{build_family({n - 1, r - 1, s, plus}), true, true};
  if (r == 2 && is_pair(n - 3, n - 2))
    return RowExpectation{build_family({n - 1, 1, n - 4, plus}), plus, plus};
  if (is_pair(n - 2, n - 1)) {
    if (r >= 3)
      return RowExpectation{build_family({n - 1, r - 1, s, true}), true, true};
    return RowExpectation{build_family({n - 1, 1, n - 4, true}), true, true};
  }
  // Non-spine edges at v_1.
  if (plus && is_pair(0, n - 1))
    return RowExpectation{fan_graph(n - 1), false, false};
  for (int i = 2; i <= r - 1; ++i)
    if (is_pair(0, n - 1 - i))
      return RowExpectation{
          family_minus({n - 1, r - 1, s, plus}, Edge(n - i - 2, n - i - 1)),
          false, false};
  if (is_pair(0, n - 2)) {
    if (r == 2 && s == n - 3)
      return RowExpectation{build_family({n - 1, 1, n - 4, true}), true, true};
    return RowExpectation{
        family_minus({n - 1, r - 1, s, true}, Edge(n - 3, n - 2)), false, false};
  }
  if (is_pair(0, n - 1 - r)) {
    if (r + s == n - 2)
      return RowExpectation{
          family_minus({n - 1, r, s, plus}, Edge(n - r - 2, n - r - 1)), false,
          false};
    if (s >= 3)
      return RowExpectation{
          family_minus({n - 1, r, s - 1, true}, Edge(n - r - 2, n - r - 1)),
          false, false};
    return RowExpectation{family_minus({n - 1, n - 4, 1, true}, Edge(1, 2)),
                          false, false};
  }
  return std::nullopt;
}

bool class_member(const Graph& g) {
  auto match = catalog_match(g);
  return match && match->entry->family.has_value();
}

}  // namespace

AuditReport check_table1(int n_min, int n_max) {
  AuditReport report;
  for (int n = n_min; n <= n_max; ++n)
    for (int r = 2; r <= n - 3; ++r)
      for (int s = 2; s <= n - 3; ++s) {
        if (r + s != n - 2 && r + s != n - 1) continue;
        for (bool plus : {false, true}) {
          FamilySpec spec{n, r, s, plus};
          Graph g = build_family(spec);
          for (const Edge& e : g.edges()) {
            auto row = classify_contraction(spec, e);
            Edge used = e;
            FamilySpec used_spec = spec;
            if (!row) {
              // Reversal symmetry: v_i -> v_{n+1-i} swaps r and s.
              used = Edge(n - 1 - e.u, n - 1 - e.v);
              used_spec = FamilySpec{n, s, r, plus};
              row = classify_contraction(used_spec, used);
            }
            ++report.items;
            std::ostringstream where;
            where << spec.id() << " / (" << e.u << "," << e.v << ")";
            if (!row) {
              report.add("table1", where.str() + ": no row covers this edge");
              continue;
            }
            Graph res = contract_edge(build_family(used_spec), used);
            if (!are_isomorphic(res, row->expected))
              report.add("table1", where.str() + ": contraction does not match the stated class");
            if (is_k_connected(res, 3) != row->three_connected)
              report.add("table1", where.str() + ": 3-connectivity column mismatch");
            if (class_member(res) != row->in_class)
              report.add("table1", where.str() + ": class-membership column mismatch");
          }
        }
      }
  return report;
}

AuditReport check_hasse() {
  AuditReport report;
  for (const HasseFact& fact : hasse_facts()) {
    ++report.items;
    Graph src = named_graph(fact.source);
    std::ostringstream where;
    where << fact.source << (fact.contract ? " / " : " \\ ") << "(" << fact.e.u
          << "," << fact.e.v << ")";
    if (!src.has_edge(fact.e.u, fact.e.v)) {
      report.add("hasse", where.str() + ": edge not present");
      continue;
    }
    Graph res = fact.contract ? contract_edge(src, fact.e)
                              : delete_edge(src, fact.e);
    if (!fact.result) {
      if (is_k_connected(res, 3))
        report.add("hasse", where.str() + ": expected loss of 3-connectivity");
      continue;
    }
    Graph expect = named_graph(*fact.result);
    if (!are_isomorphic(res, expect))
      report.add("hasse", where.str() + ": expected " + *fact.result);
  }
  return report;
}

AuditReport check_subdividable_bruteforce(const std::string& id, int max_order,
                                          const OracleOptions& opt) {
  AuditReport report;
  const CatalogEntry& entry = catalog_entry(id);
  if (entry.graph.order() > max_order)
    throw GraphError("entry order exceeds max_order");
  try {
    SubdividableScan scan = scan_subdividable(entry.graph, opt);
    report.items = scan.oracle_calls;
    auto normalize = [](std::vector<std::vector<Edge>> sets) {
      for (auto& s : sets) std::sort(s.begin(), s.end());
      std::sort(sets.begin(), sets.end());
      return sets;
    };
    if (normalize(scan.maximal) != normalize(entry.max_subdividable_sets))
      report.add("subdividable",
                 id + ": exhaustive scan disagrees with the declared maximal sets");
  } catch (const BudgetExceededError&) {
    ++report.budget_exceeded;
    report.add("subdividable", id + ": budget exceeded");
  }
  return report;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open corpus file: " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    // Optional header emitted by some graph6 writers.
    if (out.empty() && line.rfind(">>graph6<<", 0) == 0) {
      line = line.substr(10);
      if (line.empty()) continue;
    }
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> random_corpus(int count, int max_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 4 + static_cast<int>(rng() % (max_order - 3));
    double p = 0.3 + 0.2 * static_cast<double>(rng() % 3);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
          g.add_edge(u, v);
    if (is_k_connected(g, 2)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace k24
