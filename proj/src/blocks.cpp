#include "k24/blocks.hpp"

#include <algorithm>
#include <set>

namespace k24 {

namespace {

struct BlockDfs {
  const Graph& g;
  std::vector<int> num, low, parent;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::set<int>> block_sets;
  std::vector<bool> is_cut;
  int timer = 0;

  explicit BlockDfs(const Graph& graph)
      : g(graph),
        num(graph.order(), -1),
        low(graph.order(), 0),
        parent(graph.order(), -1),
        is_cut(graph.order(), false) {}

  void pop_block(int u, int v) {
    std::set<int> verts;
    while (true) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(a);
      verts.insert(b);
      if ((a == u && b == v) || (a == v && b == u)) break;
    }
    block_sets.push_back(std::move(verts));
  }

  void run(int root) {
    // Iterative DFS to keep deep graphs safe.
    struct Frame {
      int v;
      std::vector<int> nbrs;
      size_t i = 0;
      int children = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root, g.neighbors(root)});
    num[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.i < f.nbrs.size()) {
        int w = f.nbrs[f.i++];
        if (num[w] < 0) {
          parent[w] = f.v;
          edge_stack.push_back({f.v, w});
          num[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, g.neighbors(w)});
        } else if (w != parent[f.v] && num[w] < num[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        const int v = f.v;
        stack.pop_back();
        if (stack.empty()) break;
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= num[p]) {
          if (parent[p] != -1) is_cut[p] = true;
          pop_block(p, v);
        }
      }
    }
    int root_children = 0;
    for (int w : g.neighbors(root))
      if (parent[w] == root) ++root_children;
    is_cut[root] = root_children >= 2;
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  if (g.order() == 0) throw GraphError("blocks: empty graph");
  if (!is_connected(g)) throw GraphError("blocks: graph is disconnected");
  BlockDecomposition out;
  if (g.order() == 1) {
    out.blocks.push_back({0});
    return out;
  }
  BlockDfs dfs(g);
  dfs.run(0);
  for (const auto& s : dfs.block_sets)
    out.blocks.emplace_back(s.begin(), s.end());
  std::sort(out.blocks.begin(), out.blocks.end());
  for (int v = 0; v < g.order(); ++v)
    if (dfs.is_cut[v]) out.cutvertices.push_back(v);
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (int v : out.blocks[b])
      if (dfs.is_cut[v]) out.tree.emplace_back(static_cast<int>(b), v);
  return out;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw GraphError("is_k_connected supports k in {1,2,3}");
  if (g.order() <= k) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  for (int x = 0; x < g.order(); ++x)
    if (components_without(g, x, x).size() > 1) return false;
  if (k == 2) return true;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (components_without(g, x, y).size() > 1) return false;
  return true;
}

std::vector<Separation> list_2separations(const Graph& g) {
  std::vector<Separation> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      auto comps = components_without(g, x, y);
      if (comps.size() < 2) continue;
      for (const auto& comp : comps) {
        Separation sep;
        sep.boundary = {x, y};
        sep.side_j = comp;
        sep.side_j.push_back(x);
        sep.side_j.push_back(y);
        std::sort(sep.side_j.begin(), sep.side_j.end());
        std::vector<bool> in_j(g.order(), false);
        for (int v : sep.side_j) in_j[v] = true;
        for (int v = 0; v < g.order(); ++v)
          if (!in_j[v] || v == x || v == y) sep.side_h.push_back(v);
        out.push_back(std::move(sep));
      }
    }
  return out;
}

}  // namespace k24
