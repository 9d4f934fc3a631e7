#include "doctest.h"

#include <random>

#include "k24/blocks.hpp"
#include "k24/catalog.hpp"
#include "k24/minor_oracle.hpp"
#include "k24/recognizer.hpp"
#include "test_util.hpp"

using namespace k24;
using namespace k24::test;

TEST_CASE("headline classifications") {
  // K_{2,3}: three sheets, each a 2-edge path.
  K24Certificate k23 = recognize(complete_bip(2, 3));
  CHECK_FALSE(k23.has_minor);
  REQUIRE(k23.blocks.size() == 1);
  const auto& ts = std::get<BlockThreeSheets>(k23.blocks[0]);
  for (const auto& sheet : ts.sheets) CHECK(sheet.ordering.size() == 3);
  CHECK(verify_certificate(complete_bip(2, 3), k23));

  // Oct\e contains K_{2,4} as a subgraph.
  K24Certificate octe = recognize(named_graph("Octe"));
  CHECK(octe.has_minor);
  CHECK(verify_certificate(named_graph("Octe"), octe));

  // C_5 is outerplanar.
  K24Certificate c5 = recognize(cycle_graph(5));
  CHECK_FALSE(c5.has_minor);
  CHECK(std::holds_alternative<BlockOuterplanar>(c5.blocks[0]));
  CHECK(verify_certificate(cycle_graph(5), c5));
}

TEST_CASE("core expansion: G(7,2,3) with the third-set edge replaced by a fan") {
  // Replace v3v7 = (2,6) by a fan of 4 triangles (a maximal strip).
  Graph g723 = build_family({7, 2, 3, false});
  Graph fan(6);
  for (int i = 0; i + 1 < 6; ++i) fan.add_edge(i, i + 1);
  for (int i = 2; i < 6; ++i) fan.add_edge(0, i);
  Graph g = replace_edge_with_strip(g723, Edge(2, 6), fan);

  CHECK_FALSE(find_k2t_minor(g, 4).has_value());
  K24Certificate cert = recognize(g);
  CHECK_FALSE(cert.has_minor);
  REQUIRE(cert.blocks.size() == 1);
  const auto& ce = std::get<BlockCoreExpansion>(cert.blocks[0]);
  CHECK(ce.core_id == "G(7,2,3)");
  REQUIRE(ce.replaced.size() == 1);
  CHECK(verify_certificate(g, cert));
}

TEST_CASE("recognize handles disconnected and multi-block graphs") {
  Graph g = disjoint_union(complete(4), complete_bip(2, 3));
  K24Certificate cert = recognize(g);
  CHECK_FALSE(cert.has_minor);
  CHECK(cert.blocks.size() == 2);
  CHECK(verify_certificate(g, cert));

  Graph bad = disjoint_union(cycle_graph(3), complete_bip(2, 4));
  K24Certificate cert2 = recognize(bad);
  CHECK(cert2.has_minor);
  CHECK(verify_certificate(bad, cert2));
  CHECK(verify_model(bad, certificate_model(cert2)));

  CHECK_FALSE(recognize(Graph(0)).has_minor);
  CHECK(verify_certificate(Graph(0), recognize(Graph(0))));
}

TEST_CASE("verify_certificate rejects tampered certificates") {
  Graph k23 = complete_bip(2, 3);
  K24Certificate cert = recognize(k23);
  REQUIRE(verify_certificate(k23, cert));

  // A sheet of two vertices is rejected.
  K24Certificate two = cert;
  auto& ts = std::get<BlockThreeSheets>(two.blocks[0]);
  ts.sheets[0].ordering = {ts.x, ts.y};
  CHECK_FALSE(verify_certificate(k23, two));

  // A replaced set outside every maximal subdividable set is rejected.
  Graph w6 = build_family({6, 1, 3, true});
  Graph strip = path_graph(3);
  // Subdivide two spokes: not subdividable in a wheel.
  Graph bad = replace_edge_with_strip(w6, Edge(0, 5), strip);
  bad = replace_edge_with_strip(bad, Edge(2, 5), strip);
  BlockCoreExpansion fake;
  fake.core_id = "W6";
  for (int v = 0; v < bad.order(); ++v) fake.vertices.push_back(v);
  fake.core_vertices = {0, 1, 2, 3, 4, 5};
  fake.replaced.push_back({0, 5, OuterWitness{OuterWitness::Kind::Path, {0, 6, 5}}});
  fake.replaced.push_back({2, 5, OuterWitness{OuterWitness::Kind::Path, {2, 7, 5}}});
  K24Certificate fake_cert;
  fake_cert.has_minor = false;
  fake_cert.blocks.push_back(fake);
  CHECK_FALSE(verify_certificate(bad, fake_cert));
  // (Indeed the graph has a minor.)
  CHECK(recognize(bad).has_minor);

  // Wrong verdict flag.
  K24Certificate flip = cert;
  flip.has_minor = true;
  CHECK_FALSE(verify_certificate(k23, flip));
}

TEST_CASE("minor models are lifted through strips") {
  // The cube with an edge subdivided: the strip reduction recovers Q3 as
  // a non-catalog core, and the oracle's model must be lifted back over
  // the marked edge.
  Graph q3 = named_graph("Q3");
  Graph sub = subdivide_edges(q3, {Edge(0, 1)});
  K24Certificate cert = recognize(sub);
  CHECK(cert.has_minor);
  CHECK(verify_certificate(sub, cert));
  CHECK(verify_model(sub, certificate_model(cert)));

  // Strips on edges from two different maximal sets of G(7,2,3): the
  // marked edges fit no single set, so the region search must produce a
  // model over the core-with-paths subgraph.
  Graph g723 = build_family({7, 2, 3, false});
  Graph bad = subdivide_edges(g723, {Edge(4, 5), Edge(2, 6)});
  CHECK(find_k2t_minor(bad, 4).has_value());
  K24Certificate cert2 = recognize(bad);
  CHECK(cert2.has_minor);
  CHECK(verify_certificate(bad, cert2));

  // Each of those edges alone is fine and yields a core expansion.
  for (Edge e : {Edge(4, 5), Edge(2, 6)}) {
    Graph one = subdivide_edges(g723, {e});
    K24Certificate c = recognize(one);
    CHECK_FALSE(c.has_minor);
    CHECK(std::holds_alternative<BlockCoreExpansion>(c.blocks[0]));
    CHECK(verify_certificate(one, c));
  }
}

TEST_CASE("oracle agreement on all connected graphs of order <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, true)) {
      K24Certificate cert = recognize(g);
      CHECK(cert.has_minor == find_k2t_minor(g, 4).has_value());
      CHECK(verify_certificate(g, cert));
    }
}

TEST_CASE("strip replacement preserves the verdict") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& entries = enumerate_3connected(5 + rng() % 4);
    const CatalogEntry& entry = entries[rng() % entries.size()];
    Graph g = entry.graph;
    // Subdivide a random edge, then replace the path by a random strip.
    auto edges = g.edges();
    Edge e = edges[rng() % edges.size()];
    Graph strip = random_strip(rng, 3 + rng() % 4);
    Graph replaced = replace_edge_with_strip(g, e, strip);
    Graph subdivided = subdivide_edges(g, {e});
    CHECK(recognize(replaced).has_minor == recognize(subdivided).has_minor);
    CHECK(verify_certificate(replaced, recognize(replaced)));
  }
}

TEST_CASE("apex sets") {
  CHECK(find_apex_set(cycle_graph(6)).empty());

  Graph g934 = build_family({9, 3, 4, false});
  std::vector<int> u = find_apex_set(g934);
  CHECK(u.size() == 1);
  CHECK(is_outerplanar(delete_vertices(g934, u)).has_value());

  // K_{3,3}: some 2-subset works; the returned one does.
  Graph k33 = named_graph("K33");
  std::vector<int> u33 = find_apex_set(k33);
  CHECK(u33.size() == 2);
  CHECK(is_outerplanar(delete_vertices(k33, u33)).has_value());
  bool some_pair = false;
  for (int a = 0; a < 6 && !some_pair; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (is_outerplanar(delete_vertices(k33, {a, b})).has_value())
        some_pair = true;
  CHECK(some_pair);

  CHECK_THROWS_AS(find_apex_set(complete_bip(2, 4)), MinorFoundError);
}

TEST_CASE("planarity of free graphs via certificate cores") {
  CHECK(is_planar_k24free(named_graph("D")));
  CHECK_FALSE(is_planar_k24free(named_graph("K33")));
  for (int n = 6; n <= 9; ++n)
    for (const CatalogEntry& e : enumerate_3connected(n))
      if (e.family) CHECK(is_planar_k24free(e.graph));
  // Cross-check against the Kuratowski-minor test on small graphs.
  Graph k5 = complete(5);
  Graph k33 = complete_bip(3, 3);
  for (const CatalogEntry& e : small_exceptions()) {
    bool kuratowski_planar =
        !has_fixed_minor(e.graph, k5) && !has_fixed_minor(e.graph, k33);
    CHECK(is_planar_k24free(e.graph) == kuratowski_planar);
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 7, 0.4);
    if (find_k2t_minor(g, 4)) continue;
    bool kuratowski_planar =
        !has_fixed_minor(g, k5) && !has_fixed_minor(g, k33);
    CHECK(is_planar_k24free(g) == kuratowski_planar);
  }
}
