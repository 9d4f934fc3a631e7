#include "k24/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace k24 {

namespace {

// Refine colors until stable: two vertices share a color iff they had the
// same color and the same multiset of neighbor colors.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      nb.insert(nb.begin(), color[v]);
      sig[v] = {std::move(nb), v};
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[a].first < sig[b].first;
    });
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
      next[order[i]] = c;
    }
    if (c + 1 == classes) {
      color = next;
      return;
    }
    classes = c + 1;
    color = next;
  }
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> best;
  std::vector<int> best_labeling;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  // Build the matrix for a discrete coloring and keep it if minimal.
  void consider(const std::vector<int>& color) {
    std::vector<int> pos_to_vertex(n);
    for (int v = 0; v < n; ++v) pos_to_vertex[color[v]] = v;
    std::vector<std::uint64_t> m(n, 0);
    for (int i = 0; i < n; ++i) {
      int v = pos_to_vertex[i];
      for (int w : g.neighbors(v)) m[i] |= std::uint64_t{1} << color[w];
    }
    if (!have_best || m < best) {
      best = std::move(m);
      best_labeling = color;
      have_best = true;
    }
  }

  void rec(std::vector<int> color) {
    refine(g, color);
    int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    if (classes == n) {
      consider(color);
      return;
    }
    // Smallest non-singleton color class, by color id.
    std::vector<int> size(classes, 0);
    for (int v = 0; v < n; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < classes; ++c)
      if (size[c] >= 2) {
        target = c;
        break;
      }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child = color;
      for (int w = 0; w < n; ++w)
        if (child[w] >= target && w != v) child[w] += 1;
      rec(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > 64) throw GraphError("canonical_form requires order <= 64");
  CanonicalForm out;
  if (g.order() == 0) return out;
  CanonSearch search(g);
  search.rec(std::vector<int>(g.order(), 0));
  out.labeling = std::move(search.best_labeling);
  out.matrix = std::move(search.best);
  return out;
}

std::string canonical_key(const Graph& g) {
  CanonicalForm cf = canonical_form(g);
  std::string key;
  key.reserve(cf.matrix.size() * 8 + 4);
  unsigned n = static_cast<unsigned>(g.order());
  key.push_back(static_cast<char>(n & 0xff));
  for (std::uint64_t row : cf.matrix)
    for (int s = 0; s < 64; s += 8)
      key.push_back(static_cast<char>((row >> s) & 0xff));
  return key;
}

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count())
    return std::nullopt;
  // Degree sequences differ => no bijection.
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  CanonicalForm cg = canonical_form(g);
  CanonicalForm ch = canonical_form(h);
  if (!(cg == ch)) return std::nullopt;
  // map = labeling_h^{-1} . labeling_g
  std::vector<int> inv(h.order());
  for (int v = 0; v < h.order(); ++v) inv[ch.labeling[v]] = v;
  std::vector<int> map(g.order());
  for (int v = 0; v < g.order(); ++v) map[v] = inv[cg.labeling[v]];
  return map;
}

}  // namespace k24
