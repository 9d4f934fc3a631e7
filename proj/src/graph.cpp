#include "k24/graph.hpp"

#include <algorithm>
#include <queue>

namespace k24 {

Graph::Graph(int n) : n_(n), words_(n > 0 ? (n + 63) / 64 : 0) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex index out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (adj_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loops are not allowed");
  if (has_edge(u, v)) return;
  adj_[static_cast<size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[static_cast<size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw GraphError("edge not present");
  adj_[static_cast<size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  adj_[static_cast<size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += __builtin_popcountll(adj_[static_cast<size_t>(v) * words_ + w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = adj_[static_cast<size_t>(v) * words_ + w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      bits &= bits - 1;
      out.push_back(w * 64 + b);
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::row64(int v) const {
  check_vertex(v);
  if (n_ > 64) throw GraphError("row64 requires order <= 64");
  return adj_[static_cast<size_t>(v) * words_];
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw GraphError("label count mismatch");
  labels_ = std::move(labels);
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Graph delete_edge(const Graph& g, Edge e) {
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("edge not present");
  const int keep = e.u, gone = e.v;  // e.u < e.v
  Graph out(g.order() - 1);
  auto remap = [&](int v) { return v == gone ? keep : (v > gone ? v - 1 : v); };
  for (const Edge& f : g.edges()) {
    int a = remap(f.u), b = remap(f.v);
    if (a != b) out.add_edge(a, b);
  }
  return out;
}

Graph subdivide_edges(const Graph& g, const std::vector<Edge>& f) {
  std::vector<Edge> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Edge& e : sorted)
    if (!g.has_edge(e.u, e.v)) throw GraphError("edge not present");
  Graph out(g.order() + static_cast<int>(sorted.size()));
  int next = g.order();
  for (const Edge& e : g.edges()) {
    if (std::binary_search(sorted.begin(), sorted.end(), e)) {
      out.add_edge(e.u, next);
      out.add_edge(next, e.v);
      ++next;
    } else {
      out.add_edge(e.u, e.v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* map_back) {
  std::vector<int> inv(g.order(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    if (i > 0 && keep[i] <= keep[i - 1])
      throw GraphError("induced_subgraph expects ascending vertex list");
    inv[keep[i]] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (int w : g.neighbors(keep[i]))
      if (inv[w] >= 0 && keep[i] < w) out.add_edge(static_cast<int>(i), inv[w]);
  if (map_back) *map_back = keep;
  return out;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& drop) {
  std::vector<bool> gone(g.order(), false);
  for (int v : drop) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex index out of range");
    gone[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph with_edge(const Graph& g, int u, int v) {
  Graph out = g;
  out.add_edge(u, v);
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.order(), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

std::vector<std::vector<int>> components_without(const Graph& g, int x, int y) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.order(), false);
  if (x >= 0) seen[x] = true;
  if (y >= 0) seen[y] = true;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

}  // namespace k24
