#ifndef K24_TEST_UTIL_HPP
#define K24_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "k24/graph.hpp"

namespace k24::test {

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bip(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

// All graphs on n labeled vertices (n <= 6), optionally connected only.
inline std::vector<Graph> all_graphs(int n, bool connected_only) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask & (1u << i)) g.add_edge(slots[i].first, slots[i].second);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// Streaming enumeration of all graphs on n labeled vertices.
template <class Fn>
inline void for_each_graph(int n, bool connected_only, Fn&& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) g.add_edge(slots[i].first, slots[i].second);
    if (connected_only && !is_connected(g)) continue;
    fn(g);
  }
}

// A random uv-outerplanar strip on m >= 2 vertices: a path with random
// non-crossing chords.
inline Graph random_strip(std::mt19937_64& rng, int m) {
  Graph g = path_graph(m);
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
      if (a > c) std::swap(a, c), std::swap(b, d);
      if (a < c && c < b && b < d) crosses = true;
    }
    if (!crosses) {
      chosen.push_back({i, j});
      g.add_edge(i, j);
    }
  }
  return g;
}

// Glue a strip between vertices u and v of g (strip endpoints are its
// vertices 0 and m-1; interiors become fresh vertices).
inline Graph replace_edge_with_strip(const Graph& g, Edge e, const Graph& strip) {
  const int m = strip.order();
  Graph out(g.order() + m - 2);
  for (const Edge& f : g.edges())
    if (!(f == e)) out.add_edge(f.u, f.v);
  auto map = [&](int v) {
    if (v == 0) return e.u;
    if (v == m - 1) return e.v;
    return g.order() + v - 1;
  };
  for (const Edge& f : strip.edges()) out.add_edge(map(f.u), map(f.v));
  return out;
}

}  // namespace k24::test

#endif
