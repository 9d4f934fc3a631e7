// Simple undirected graph with dense vertex indices 0..n-1.
//
// Adjacency is stored as a bit matrix (64-bit words per row).  All edit
// operations are pure: they return a new graph and leave the input
// untouched, so graphs can be shared freely between threads.

#ifndef K24_GRAPH_HPP
#define K24_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k24 {

using Vertex = int;

// Unordered edge, normalized so that u < v.
struct Edge {
  Vertex u = -1;
  Vertex v = -1;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // idempotent; rejects loops
  void remove_edge(int u, int v);  // throws if absent

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;  // sorted

  // Adjacency row as a single word; valid only while order() <= 64.
  std::uint64_t row64(int v) const;

  // Optional external vertex names.
  void set_labels(std::vector<std::string> labels);
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;  // n_ * words_
  std::vector<std::string> labels_;
};

// --- Edit operations (simple-graph semantics) ---

// Removes edge e; vertex set unchanged.
Graph delete_edge(const Graph& g, Edge e);

// Merges the endpoints of e into the smaller index; parallel edges are
// reduced to a single edge, loops are dropped, and the remaining indices
// are compacted in order.
Graph contract_edge(const Graph& g, Edge e);

// Replaces each edge of f by a path of length 2 through a fresh vertex.
// New vertices are appended in the (sorted) order of f.
Graph subdivide_edges(const Graph& g, const std::vector<Edge>& f);

// Subgraph induced by `keep` (ascending order required); if map_back is
// given, (*map_back)[local index] = original index.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* map_back = nullptr);

// Deletes the listed vertices and compacts indices.
Graph delete_vertices(const Graph& g, const std::vector<int>& drop);

Graph with_edge(const Graph& g, int u, int v);

// --- Connectivity helpers ---

bool is_connected(const Graph& g);  // true for the empty graph and K_1
std::vector<std::vector<int>> components(const Graph& g);
// Components of g - {x, y} (x == y allowed to drop a single vertex).
std::vector<std::vector<int>> components_without(const Graph& g, int x, int y);

// Union of disjoint graphs placed side by side (debug/test helper).
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace k24

#endif  // K24_GRAPH_HPP
