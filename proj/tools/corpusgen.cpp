// Generates the exhaustive small-graph corpora shipped under data/: all
// connected graphs up to isomorphism for 1 <= n <= 8, one graph6 line
// each.  Graphs of order n are produced by extending the order n-1 list
// by one vertex in every possible way and deduplicating canonical forms.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <unordered_set>
#include <vector>

#include "k24/graph.hpp"
#include "k24/graph_io.hpp"
#include "k24/isomorphism.hpp"

using namespace k24;

int main(int argc, char** argv) {
  int max_n = 8;
  std::string out_path = "data/connected_le8.g6";
  if (argc >= 2) max_n = std::atoi(argv[1]);
  if (argc >= 3) out_path = argv[2];

  std::vector<Graph> level = {Graph(1)};
  std::vector<std::string> lines;
  lines.push_back(emit_graph6(level[0]));

  for (int n = 2; n <= max_n; ++n) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& base : level) {
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph g(n);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (int v = 0; v < n - 1; ++v)
          if (mask & (1u << v)) g.add_edge(v, n - 1);
        if (!seen.insert(canonical_key(g)).second) continue;
        next.push_back(std::move(g));
      }
    }
    std::vector<std::string> batch;
    for (const Graph& g : next)
      if (is_connected(g)) batch.push_back(emit_graph6(g));
    std::sort(batch.begin(), batch.end());
    lines.insert(lines.end(), batch.begin(), batch.end());
    std::cerr << "n=" << n << ": " << next.size() << " graphs, " << batch.size()
              << " connected\n";
    level = std::move(next);
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  for (const std::string& line : lines) out << line << "\n";
  std::cerr << "wrote " << lines.size() << " graphs to " << out_path << "\n";
  return 0;
}
