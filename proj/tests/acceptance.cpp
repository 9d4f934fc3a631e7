// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails.  Each criterion pins its thresholds in code.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "k24/audit.hpp"
#include "k24/blocks.hpp"
#include "k24/catalog.hpp"
#include "k24/graph_io.hpp"
#include "k24/hamilton.hpp"
#include "k24/isomorphism.hpp"
#include "k24/minor_oracle.hpp"
#include "k24/outerplanar.hpp"
#include "k24/recognizer.hpp"

#ifndef K24_DATA_DIR
#define K24_DATA_DIR "data"
#endif

using namespace k24;

namespace {

int failures = 0;

// Random uv-outerplanar strip on 3..6 vertices: a path with random
// non-crossing chords.
Graph random_strip36(std::mt19937_64& rng) {
  int m = 3 + static_cast<int>(rng() % 4);
  Graph g(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) chords.push_back({i, j});
  std::shuffle(chords.begin(), chords.end(), rng);
  std::vector<std::pair<int, int>> chosen;
  for (auto [i, j] : chords) {
    if (rng() % 2) continue;
    bool crosses = false;
    for (auto [k, l] : chosen) {
      if (i == k || i == l || j == k || j == l) continue;
      int a = i, b = j, c = k, d = l;
      if (a > c) {
        std::swap(a, c);
        std::swap(b, d);
      }
      if (a < c && c < b && b < d) crosses = true;
    }
    if (!crosses) {
      chosen.push_back({i, j});
      g.add_edge(i, j);
    }
  }
  return g;
}

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  std::printf("%s criterion %d: %s — %s (%.1fs)\n", pass ? "PASS" : "FAIL",
              criterion, name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <class Fn>
void run(int criterion, const std::string& name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = fn(pass);
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  report(criterion, name, pass, detail, secs);
}

std::vector<Graph> load_corpus() {
  return load_graph6_file(std::string(K24_DATA_DIR) + "/connected_le8.g6");
}

Graph random_member_expansion(std::mt19937_64& rng, bool& used_sheets) {
  used_sheets = rng() % 4 == 0;
  if (used_sheets) {
    // Case (ii): three random sheets between two hubs.
    std::vector<Graph> sheets;
    int total = 2;
    for (int i = 0; i < 3; ++i) {
      sheets.push_back(random_strip36(rng));
      total += sheets.back().order() - 2;
    }
    Graph g(total);
    int next = 2;
    for (const Graph& s : sheets) {
      const int m = s.order();
      std::vector<int> map(m);
      map[0] = 0;
      map[m - 1] = 1;
      for (int v = 1; v + 1 < m; ++v) map[v] = next++;
      for (const Edge& e : s.edges()) g.add_edge(map[e.u], map[e.v]);
    }
    if (rng() % 2) g.add_edge(0, 1);
    return g;
  }
  const auto& entries = enumerate_3connected(4 + rng() % 7);
  const CatalogEntry& entry = entries[rng() % entries.size()];
  const auto& sets = entry.max_subdividable_sets;
  const auto& f = sets[rng() % sets.size()];
  Graph g = entry.graph;
  // Replace a random subset of the set by strips of up to 6 vertices.
  for (const Edge& e : f) {
    if (rng() % 2) continue;
    Graph strip = random_strip36(rng);
    Graph out(g.order() + strip.order() - 2);
    for (const Edge& ge : g.edges())
      if (!(ge == e)) out.add_edge(ge.u, ge.v);
    const int m = strip.order();
    std::vector<int> map(m);
    map[0] = e.u;
    map[m - 1] = e.v;
    for (int v = 1; v + 1 < m; ++v) map[v] = g.order() + v - 1;
    for (const Edge& se : strip.edges()) out.add_edge(map[se.u], map[se.v]);
    g = std::move(out);
  }
  return g;
}

}  // namespace

int main() {
  run(1, "exhaustive agreement, connected graphs with <= 8 vertices",
      [&](bool& pass) {
        std::vector<Graph> corpus = load_corpus();
        // Codec identity over the whole reference corpus.
        std::ifstream in(std::string(K24_DATA_DIR) + "/connected_le8.g6");
        std::string line;
        size_t bad_roundtrip = 0;
        while (std::getline(in, line))
          if (!line.empty() && emit_graph6(parse_graph6(line)) != line)
            ++bad_roundtrip;
        AuditReport r = compare_corpus(corpus, {}, 2);
        pass = r.ok() && corpus.size() == 12113 && bad_roundtrip == 0;
        std::ostringstream out;
        out << corpus.size() << " graphs, " << r.issues.size()
            << " disagreements, " << r.budget_exceeded << " over budget, "
            << bad_roundtrip << " codec round-trip failures";
        return out.str();
      });

  run(2, "class membership formula vs oracle, 5 <= n <= 10", [&](bool& pass) {
    int mismatches = 0, checked = 0;
    for (int n = 5; n <= 10; ++n)
      for (int r = 0; r <= n - 3; ++r)
        for (int s = 0; s <= n - 3; ++s)
          for (bool plus : {false, true}) {
            FamilySpec spec{n, r, s, plus};
            Graph g = build_family(spec);
            bool semantic =
                is_k_connected(g, 3) && !find_k2t_minor(g, 4).has_value();
            ++checked;
            if (in_class_g(spec) != semantic) ++mismatches;
          }
    pass = mismatches == 0;
    std::ostringstream out;
    out << checked << " parameter triples, " << mismatches << " mismatches";
    return out.str();
  });

  run(3, "counting 2n-8 for 9 <= n <= 20", [&](bool& pass) {
    pass = true;
    int bad = 0;
    for (int n = 9; n <= 20; ++n) {
      const auto& entries = enumerate_3connected(n);
      if (static_cast<int>(entries.size()) != 2 * n - 8) {
        pass = false;
        ++bad;
        continue;
      }
      std::set<std::string> keys;
      for (const CatalogEntry& e : entries) {
        keys.insert(canonical_key(e.graph));
        K24Certificate cert = recognize(e.graph);
        if (cert.has_minor || !verify_certificate(e.graph, cert)) {
          pass = false;
          ++bad;
        }
      }
      if (keys.size() != entries.size()) {
        pass = false;
        ++bad;
      }
    }
    std::ostringstream out;
    out << "orders 9..20, " << bad << " failures";
    return out.str();
  });

  run(4, "table-1 conformance (6 <= n <= 10) and hasse facts",
      [&](bool& pass) {
        AuditReport t1 = check_table1(6, 10);
        AuditReport hf = check_hasse();
        pass = t1.ok() && hf.ok();
        std::ostringstream out;
        out << t1.items << " table rows (" << t1.issues.size() << " bad), "
            << hf.items << " hasse rows (" << hf.issues.size() << " bad)";
        return out.str();
      });

  run(5, "subdividable brute force, catalog order <= 7", [&](bool& pass) {
    pass = true;
    std::uint64_t calls = 0;
    int bad = 0;
    for (int n = 4; n <= 7; ++n)
      for (const CatalogEntry& e : enumerate_3connected(n)) {
        AuditReport r = check_subdividable_bruteforce(e.id, 7);
        calls += r.items;
        if (!r.ok()) {
          pass = false;
          ++bad;
        }
      }
    std::ostringstream out;
    out << calls << " oracle calls, " << bad << " entries disagree";
    return out.str();
  });

  run(6, "hamiltonicity: cycles to n = 30, 200 randomized 2-connected paths",
      [&](bool& pass) {
        pass = true;
        int cycles = 0;
        for (int n = 4; n <= 30; ++n)
          for (const CatalogEntry& e : enumerate_3connected(n)) {
            if (!verify_hamilton(e.graph, hamilton_cycle_3conn(e.graph)))
              pass = false;
            ++cycles;
          }
        std::mt19937_64 rng(20240808);
        int paths = 0;
        for (int trial = 0; trial < 200; ++trial) {
          bool sheets;
          Graph g = random_member_expansion(rng, sheets);
          HamiltonCertificate p = hamilton_path_2conn(g);
          if (!verify_hamilton(g, p)) pass = false;
          ++paths;
        }
        std::ostringstream out;
        out << cycles << " cycles, " << paths << " threaded paths";
        return out.str();
      });

  run(7, "apex sets over the accepted corpus and catalog to n = 15",
      [&](bool& pass) {
        pass = true;
        int checked = 0, bad = 0;
        for (const Graph& g : load_corpus()) {
          // find_apex_set requires a 2-connected K_{2,4}-minor-free graph.
          if (g.order() > 2 && !is_k_connected(g, 2)) continue;
          if (find_k2t_minor(g, 4)) continue;
          std::vector<int> u = find_apex_set(g);
          bool planar = is_planar_k24free(g);
          bool ok = static_cast<int>(u.size()) <= (planar ? 1 : 2) &&
                    is_outerplanar(delete_vertices(g, u)).has_value();
          ++checked;
          if (!ok) {
            pass = false;
            ++bad;
          }
        }
        for (int n = 4; n <= 15; ++n)
          for (const CatalogEntry& e : enumerate_3connected(n)) {
            std::vector<int> u = find_apex_set(e.graph);
            bool planar = is_planar_k24free(e.graph);
            bool ok = static_cast<int>(u.size()) <= (planar ? 1 : 2) &&
                      is_outerplanar(delete_vertices(e.graph, u)).has_value();
            ++checked;
            if (!ok) {
              pass = false;
              ++bad;
            }
          }
        std::ostringstream out;
        out << checked << " graphs, " << bad << " violations";
        return out.str();
      });

  run(8, "edge bounds: 2n-2 maxima for 7 <= n <= 15; 2n-1 witnesses free",
      [&](bool& pass) {
        pass = true;
        std::ostringstream out;
        int bad_max = 0;
        for (int n = 7; n <= 15; ++n) {
          int max_edges = 0;
          std::string id;
          for (const CatalogEntry& e : enumerate_3connected(n))
            if (e.graph.edge_count() > max_edges) {
              max_edges = e.graph.edge_count();
              id = e.id;
            }
          if (max_edges != 2 * n - 2) {
            pass = false;
            if (bad_max++ == 0)
              out << "max at n=" << n << " is " << max_edges << " (" << id
                  << ") not " << (2 * n - 2) << "; ";
          }
        }
        int bad_wit = 0;
        for (int n = 6; n <= 15; ++n) {
          Graph w = dense_free_witness(n);
          if (w.edge_count() != 2 * n - 1 || !is_k_connected(w, 2) ||
              recognize(w).has_minor) {
            pass = false;
            ++bad_wit;
          }
        }
        out << bad_max << " maxima off, " << bad_wit
            << " dense witnesses rejected";
        return out.str();
      });

  run(9, "xy-outerplanarity equals rooted K_{2,2}-freeness, n <= 7",
      [&](bool& pass) {
        std::vector<Graph> corpus = load_corpus();
        long long pairs = 0;
        int disagreements = 0;
        for (const Graph& g : corpus) {
          const int n = g.order();
          if (n > 7 || n < 2) continue;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              if (x == y) continue;
              Graph aug = g.has_edge(x, y) ? g : with_edge(g, x, y);
              if (n > 2 && !is_k_connected(aug, 2)) continue;
              ++pairs;
              bool op = is_xy_outerplanar(g, x, y).has_value();
              bool rooted = find_rooted_k2t_minor(g, x, y, 2).has_value();
              if (op == rooted) ++disagreements;
            }
        }
        pass = disagreements == 0;
        std::ostringstream out;
        out << pairs << " admissible pairs, " << disagreements
            << " disagreements";
        return out.str();
      });

  std::printf("%s: %d criterion(s) failed\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
  return failures == 0 ? 0 : 1;
}
