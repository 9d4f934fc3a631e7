#include "doctest.h"

#include <random>

#include "k24/blocks.hpp"
#include "k24/catalog.hpp"
#include "k24/graph.hpp"
#include "k24/graph_io.hpp"
#include "k24/isomorphism.hpp"
#include "test_util.hpp"

using namespace k24;
using namespace k24::test;

TEST_CASE("edit operations keep graphs simple") {
  Graph k4 = complete(4);
  for (const Edge& e : k4.edges()) {
    Graph c = contract_edge(k4, e);
    CHECK(c.order() == 3);
    CHECK(c.edge_count() == 3);  // K_3
  }

  // Contracting a rim edge of a wheel gives the smaller wheel.
  Graph w6 = build_family({6, 1, 3, true});
  Graph w5 = build_family({5, 1, 2, true});
  CHECK(are_isomorphic(contract_edge(w6, Edge(0, 1)), w5).has_value());

  // Contracting v_{n-1}v_n in the prism gives W_5.
  Graph prism = build_family({6, 2, 2, false});
  CHECK(are_isomorphic(contract_edge(prism, Edge(4, 5)), w5).has_value());
}

TEST_CASE("contraction merges into the smaller index and compacts") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  Graph c = contract_edge(g, Edge(1, 3));
  CHECK(c.order() == 3);
  CHECK(c.has_edge(0, 1));
  CHECK(c.has_edge(1, 2));  // the merged vertex keeps index 1
  CHECK(c.edge_count() == 2);
}

TEST_CASE("edit operations reject missing edges") {
  Graph g = path_graph(4);
  CHECK_THROWS_AS(delete_edge(g, Edge(0, 2)), GraphError);
  CHECK_THROWS_AS(contract_edge(g, Edge(0, 3)), GraphError);
  CHECK_THROWS_AS(subdivide_edges(g, {Edge(1, 3)}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);  // self-loop
}

TEST_CASE("subdivision counts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 8, 0.5);
    auto edges = g.edges();
    if (edges.empty()) continue;
    std::vector<Edge> f(edges.begin(), edges.begin() + 1 + rng() % edges.size());
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    Graph s = subdivide_edges(g, f);
    CHECK(s.order() == g.order() + static_cast<int>(f.size()));
    CHECK(s.edge_count() == g.edge_count() + static_cast<int>(f.size()));

    Graph c = contract_edge(g, edges[rng() % edges.size()]);
    CHECK(c.order() == g.order() - 1);
  }
}

TEST_CASE("graph6 round trips") {
  // 'D?{' encodes the star K_{1,4}: bits x04 x14 x24 x34 set.
  Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(star.has_edge(v, 4));
  CHECK(emit_graph6(star) == "D?{");

  Graph k24 = complete_bip(2, 4);
  Graph back = parse_graph6(emit_graph6(k24));
  std::vector<int> degs;
  for (int v = 0; v < back.order(); ++v) degs.push_back(back.degree(v));
  std::sort(degs.begin(), degs.end(), std::greater<>());
  CHECK(degs == std::vector<int>{4, 4, 2, 2, 2, 2});
  CHECK(are_isomorphic(back, k24).has_value());

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 70, 0.3);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);     // truncated bits
  CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError);   // trailing bytes
  CHECK_THROWS_AS(parse_graph6("D?\x01"), ParseError); // byte below 63
  try {
    parse_graph6("D?\x01");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("edge list format") {
  Graph g = parse_edge_list("# triangle plus isolated vertex\nn 4\n0 1\n1 2\n2 0\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
}

TEST_CASE("blocks and cutvertices") {
  BlockDecomposition p3 = blocks(path_graph(3));
  CHECK(p3.blocks.size() == 2);
  CHECK(p3.cutvertices == std::vector<int>{1});

  BlockDecomposition one = blocks(cycle_graph(5));
  CHECK(one.blocks.size() == 1);
  CHECK(one.cutvertices.empty());

  // Two triangles sharing one vertex.
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  BlockDecomposition bt = blocks(bowtie);
  CHECK(bt.blocks.size() == 2);
  CHECK(bt.cutvertices == std::vector<int>{2});
  // Cross-check the cutvertex by vertex deletions.
  for (int v = 0; v < 5; ++v) {
    bool cuts = components_without(bowtie, v, v).size() > 1;
    CHECK(cuts == (v == 2));
  }
  CHECK_THROWS_AS(blocks(Graph(3)), GraphError);
}

TEST_CASE("block structure properties on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 9, 0.3);
    if (!is_connected(g)) continue;
    BlockDecomposition bd = blocks(g);
    // Every edge lies in exactly one block.
    int edge_total = 0;
    for (const auto& blk : bd.blocks) {
      Graph sub = induced_subgraph(g, blk);
      edge_total += sub.edge_count();
    }
    CHECK(edge_total == g.edge_count());
    // Cutvertices are exactly the vertices in >= 2 blocks.
    std::vector<int> count(g.order(), 0);
    for (const auto& blk : bd.blocks)
      for (int v : blk) ++count[v];
    for (int v = 0; v < g.order(); ++v)
      CHECK((count[v] >= 2) == std::binary_search(bd.cutvertices.begin(),
                                                  bd.cutvertices.end(), v));
  }
}

TEST_CASE("k-connectivity") {
  CHECK(is_k_connected(build_family({6, 2, 2, false}), 3));   // prism
  CHECK_FALSE(is_k_connected(build_family({7, 2, 2, false}), 3));
  CHECK_FALSE(is_k_connected(path_graph(2), 2));
  CHECK(is_k_connected(path_graph(2), 1));
  CHECK_THROWS_AS(is_k_connected(complete(4), 4), GraphError);
}

TEST_CASE("isomorphism on family symmetries") {
  for (int n = 5; n <= 9; ++n)
    for (int r = 2; r <= n - 3; ++r) {
      int s = n - 2 - r;
      if (s < 2 || s > n - 3) continue;
      Graph a = build_family({n, r, s, false});
      Graph b = build_family({n, s, r, false});
      auto map = are_isomorphic(a, b);
      REQUIRE(map.has_value());
      for (const Edge& e : a.edges()) CHECK(b.has_edge((*map)[e.u], (*map)[e.v]));
    }
  CHECK(are_isomorphic(build_family({6, 2, 2, true}),
                       build_family({6, 2, 3, false}))
            .has_value());
  Graph self = build_family({8, 2, 5, true});
  CHECK(are_isomorphic(self, self).has_value());
}

TEST_CASE("isomorphism is sound and complete on relabelings") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + rng() % 6;
    Graph g = random_graph(rng, n, 0.4);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    auto map = are_isomorphic(g, h);
    REQUIRE(map.has_value());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(g.has_edge(u, v) == h.has_edge((*map)[u], (*map)[v]));
    // Symmetry of the relation.
    CHECK(are_isomorphic(h, g).has_value());
    // Differing degree sequences: no bijection.
    if (g.edge_count() > 0) {
      Graph g2 = delete_edge(g, g.edges()[0]);
      CHECK_FALSE(are_isomorphic(g, g2).has_value());
    }
  }
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))).has_value());
}
