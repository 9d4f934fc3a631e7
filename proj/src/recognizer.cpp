#include "k24/recognizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "k24/blocks.hpp"
#include "k24/isomorphism.hpp"

namespace k24 {

namespace {

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

OuterWitness remap_witness(const OuterWitness& w, const std::vector<int>& map) {
  OuterWitness out;
  out.kind = w.kind;
  for (int v : w.ordering) out.ordering.push_back(map[v]);
  return out;
}

StandardMinorModel remap_model(const StandardMinorModel& m,
                               const std::vector<int>& map) {
  StandardMinorModel out;
  out.t = m.t;
  for (int v : m.r1) out.r1.push_back(map[v]);
  for (int v : m.r2) out.r2.push_back(map[v]);
  for (int v : m.s) out.s.push_back(map[v]);
  return out;
}

// Subgraph induced by comp + {x, y} with the xy edge (if any) removed;
// local indices of x and y are reported through lx, ly.
Graph side_graph(const Graph& b, const std::vector<int>& comp, int x, int y,
                 std::vector<int>* map_back, int* lx, int* ly) {
  std::vector<int> verts = sorted_union(comp, {x, y});
  Graph sub = induced_subgraph(b, verts, map_back);
  *lx = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) -
                         verts.begin());
  *ly = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), y) -
                         verts.begin());
  if (sub.has_edge(*lx, *ly)) sub.remove_edge(*lx, *ly);
  return sub;
}

// Shortest x..y path whose interior lies in comp (B-local indices).
std::vector<int> path_through_component(const Graph& b,
                                        const std::vector<int>& comp, int x,
                                        int y) {
  std::vector<int> verts;
  int lx, ly;
  Graph sub = side_graph(b, comp, x, y, &verts, &lx, &ly);
  std::vector<int> prev(sub.order(), -2);
  std::vector<int> queue = {lx};
  prev[lx] = -1;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    if (v == ly) break;
    for (int w : sub.neighbors(v))
      if (prev[w] == -2) {
        prev[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<int> path;
  for (int v = ly; v != -1; v = prev[v]) path.push_back(verts[v]);
  std::reverse(path.begin(), path.end());
  if (path.size() < 3 || path.front() != x)
    throw GraphError("internal: no interior path through component");
  return path;
}

// B-local strip bookkeeping during the reduction.
struct StripInfo {
  std::vector<int> interior;  // B-local, sorted
  OuterWitness witness;       // path witness over interior + boundary
};

struct BlockClassifier {
  const Graph& g;
  const std::vector<int>& to_g;  // B-local -> g
  Graph b;
  OracleOptions opt;

  BlockClassifier(const Graph& graph, const std::vector<int>& verts,
                  const OracleOptions& options)
      : g(graph), to_g(verts), b(induced_subgraph(graph, verts)), opt(options) {}

  BlockHasMinor has_minor(const StandardMinorModel& local) const {
    StandardMinorModel m = remap_model(local, to_g);
    if (!verify_model(g, m))
      throw GraphError("internal: constructed minor model failed verification");
    return BlockHasMinor{to_g, std::move(m)};
  }

  // K_{2,4} model from a 2-cut with >= 4 components.
  BlockCert minor_from_four_components(int x, int y,
                                       const std::vector<std::vector<int>>& comps) {
    StandardMinorModel m;
    m.t = 4;
    m.r1 = {x};
    std::set<int> r2 = {y};
    for (int i = 0; i < 4; ++i) {
      std::vector<int> path = path_through_component(b, comps[i], x, y);
      m.s.push_back(path[1]);
      for (size_t j = 2; j + 1 < path.size(); ++j) r2.insert(path[j]);
    }
    m.r2.assign(r2.begin(), r2.end());
    return has_minor(m);
  }

  // Rooted K_{2,2} in a bad sheet extended by one vertex from each of two
  // other components.
  BlockCert minor_from_bad_sheet(int x, int y,
                                 const std::vector<std::vector<int>>& comps,
                                 int bad) {
    std::vector<int> verts;
    int lx, ly;
    Graph sheet = side_graph(b, comps[bad], x, y, &verts, &lx, &ly);
    auto rooted = find_rooted_k2t_minor(sheet, lx, ly, 2, opt);
    if (!rooted)
      throw GraphError("internal: sheet is not xy-outerplanar but has no rooted minor");
    StandardMinorModel m = remap_model(*rooted, verts);
    m.t = 4;
    std::set<int> r2(m.r2.begin(), m.r2.end());
    for (int i = 0; i < 3; ++i) {
      if (i == bad) continue;
      std::vector<int> path = path_through_component(b, comps[i], x, y);
      m.s.push_back(path[1]);
      for (size_t j = 2; j + 1 < path.size(); ++j) r2.insert(path[j]);
    }
    m.r2.assign(r2.begin(), r2.end());
    return has_minor(m);
  }

  // Rooted K_{2,2} minors on both sides of a 2-separation combine into a
  // K_{2,4} model.
  BlockCert minor_from_two_bad_sides(int x, int y,
                                     const std::vector<std::vector<int>>& comps) {
    StandardMinorModel m;
    m.t = 4;
    std::set<int> r1, r2, s;
    for (int i = 0; i < 2; ++i) {
      std::vector<int> verts;
      int lx, ly;
      Graph sheet = side_graph(b, comps[i], x, y, &verts, &lx, &ly);
      auto rooted = find_rooted_k2t_minor(sheet, lx, ly, 2, opt);
      if (!rooted)
        throw GraphError("internal: side is not xy-outerplanar but has no rooted minor");
      for (int v : rooted->r1) r1.insert(verts[v]);
      for (int v : rooted->r2) r2.insert(verts[v]);
      for (int v : rooted->s) s.insert(verts[v]);
    }
    m.r1.assign(r1.begin(), r1.end());
    m.r2.assign(r2.begin(), r2.end());
    m.s.assign(s.begin(), s.end());
    return has_minor(m);
  }

  // Lift a model over the reduced core back to B: strip interiors are
  // absorbed to restore connectivity and S-adjacency across marked edges.
  StandardMinorModel lift_model(const StandardMinorModel& core_model,
                                const std::vector<int>& kinv,
                                const std::map<Edge, StripInfo>& marks) const {
    std::set<int> r1, r2, s;
    for (int v : core_model.r1) r1.insert(kinv[v]);
    for (int v : core_model.r2) r2.insert(kinv[v]);
    for (int v : core_model.s) s.insert(kinv[v]);
    for (const auto& [e, strip] : marks) {
      auto part = [&](int v) {
        if (r1.count(v)) return 1;
        if (r2.count(v)) return 2;
        if (s.count(v)) return 3;
        return 0;
      };
      int pu = part(e.u), pv = part(e.v);
      std::set<int>* grow = nullptr;
      if (pu == 1 && (pv == 1 || pv == 3)) grow = &r1;
      else if (pu == 2 && (pv == 2 || pv == 3)) grow = &r2;
      else if (pv == 1 && pu == 3) grow = &r1;
      else if (pv == 2 && pu == 3) grow = &r2;
      if (grow)
        for (int v : strip.interior) grow->insert(v);
    }
    StandardMinorModel out;
    out.t = core_model.t;
    out.r1.assign(r1.begin(), r1.end());
    out.r2.assign(r2.begin(), r2.end());
    out.s.assign(s.begin(), s.end());
    return out;
  }

  BlockCert classify() {
    const int bn = b.order();
    // Case (i): outerplanar blocks (this also covers K_1 and K_2).
    if (auto w = is_outerplanar(b)) {
      if (w->blocks.size() != 1)
        throw GraphError("internal: block decomposed into several blocks");
      return BlockOuterplanar{to_g, remap_witness(w->blocks[0], to_g)};
    }

    // Census of 2-cuts over the whole block.
    int l4x = -1, l4y = -1, l3x = -1, l3y = -1;
    for (int x = 0; x < bn && l4x < 0; ++x)
      for (int y = x + 1; y < bn && l4x < 0; ++y) {
        size_t c = components_without(b, x, y).size();
        if (c >= 4) {
          l4x = x;
          l4y = y;
        } else if (c == 3 && l3x < 0) {
          l3x = x;
          l3y = y;
        }
      }
    if (l4x >= 0)
      return minor_from_four_components(l4x, l4y, components_without(b, l4x, l4y));
    if (l3x >= 0) {
      const int x = l3x, y = l3y;
      auto comps = components_without(b, x, y);
      std::array<OuterWitness, 3> sheets;
      for (int i = 0; i < 3; ++i) {
        std::vector<int> verts;
        int lx, ly;
        Graph sheet = side_graph(b, comps[i], x, y, &verts, &lx, &ly);
        auto wit = is_xy_outerplanar(sheet, lx, ly);
        if (!wit) return minor_from_bad_sheet(x, y, comps, i);
        sheets[i] = remap_witness(*wit, verts);
      }
      BlockThreeSheets out;
      out.vertices = to_g;
      out.x = to_g[x];
      out.y = to_g[y];
      out.xy_present = b.has_edge(x, y);
      for (int i = 0; i < 3; ++i) sheets[i] = remap_witness(sheets[i], to_g);
      out.sheets = std::move(sheets);
      return out;
    }

    // Strip reduction: every 2-cut of B now splits into exactly two
    // components.
    std::vector<int> kept(bn);
    for (int v = 0; v < bn; ++v) kept[v] = v;
    std::map<Edge, StripInfo> marks;

    while (true) {
      // Current reduced graph K on kept vertices.
      std::vector<int> kloc(bn, -1);
      for (size_t i = 0; i < kept.size(); ++i) kloc[kept[i]] = static_cast<int>(i);
      Graph k(static_cast<int>(kept.size()));
      for (size_t i = 0; i < kept.size(); ++i)
        for (int w : b.neighbors(kept[i]))
          if (kloc[w] > static_cast<int>(i)) k.add_edge(static_cast<int>(i), kloc[w]);
      for (const auto& [e, strip] : marks) k.add_edge(kloc[e.u], kloc[e.v]);

      // K-level 2-separations.
      struct Sep {
        int x, y;  // B-local
      };
      std::vector<Sep> seps;
      for (int a = 0; a < k.order(); ++a)
        for (int c = a + 1; c < k.order(); ++c)
          if (components_without(k, a, c).size() >= 2)
            seps.push_back({kept[a], kept[c]});
      if (seps.empty()) break;

      // Innermost reducible strip: smallest side, then least boundary.
      struct Candidate {
        size_t size;
        int x, y;
        std::vector<int> side;
        OuterWitness witness;  // B-local path witness x..y
      };
      std::optional<Candidate> best;
      for (const Sep& sep : seps) {
        auto comps = components_without(b, sep.x, sep.y);
        if (comps.size() != 2)
          throw GraphError("internal: unexpected component count during reduction");
        for (const auto& comp : comps) {
          std::vector<int> verts;
          int lx, ly;
          Graph sheet = side_graph(b, comp, sep.x, sep.y, &verts, &lx, &ly);
          auto wit = is_xy_outerplanar(sheet, lx, ly);
          if (!wit) continue;
          Candidate cand{comp.size() + 2, sep.x, sep.y, comp,
                         remap_witness(*wit, verts)};
          if (!best || std::tie(cand.size, cand.x, cand.y, cand.side[0]) <
                           std::tie(best->size, best->x, best->y, best->side[0]))
            best = std::move(cand);
        }
      }
      if (!best) {
        auto comps = components_without(b, seps[0].x, seps[0].y);
        return minor_from_two_bad_sides(seps[0].x, seps[0].y, comps);
      }

      // Replace the strip by a marked edge.
      std::set<int> gone(best->side.begin(), best->side.end());
      std::vector<int> new_kept;
      for (int v : kept)
        if (!gone.count(v)) new_kept.push_back(v);
      kept = std::move(new_kept);
      for (auto it = marks.begin(); it != marks.end();)
        if (gone.count(it->first.u) || gone.count(it->first.v))
          it = marks.erase(it);
        else
          ++it;
      marks[Edge(best->x, best->y)] = StripInfo{best->side, best->witness};
    }

    // 3-connected core.
    if (kept.size() < 4)
      throw GraphError("internal: reduction produced a core of order < 4");
    std::vector<int> kloc(bn, -1);
    for (size_t i = 0; i < kept.size(); ++i) kloc[kept[i]] = static_cast<int>(i);
    Graph core(static_cast<int>(kept.size()));
    for (size_t i = 0; i < kept.size(); ++i)
      for (int w : b.neighbors(kept[i]))
        if (kloc[w] > static_cast<int>(i)) core.add_edge(static_cast<int>(i), kloc[w]);
    for (const auto& [e, strip] : marks) core.add_edge(kloc[e.u], kloc[e.v]);

    auto match = catalog_match(core);
    if (!match) {
      auto model = find_k2t_minor(core, 4, opt);
      if (!model)
        throw GraphError("internal: non-catalog 3-connected core without minor");
      StandardMinorModel lifted = lift_model(*model, kept, marks);
      if (!verify_model(b, lifted))
        throw GraphError("internal: lifted minor model failed verification");
      return has_minor(lifted);
    }

    // Map marked edges into the catalog labeling.
    const CatalogEntry& entry = *match->entry;
    std::vector<int> core_to_entry(core.order(), -1);
    for (int i = 0; i < entry.graph.order(); ++i)
      core_to_entry[match->to_graph[i]] = i;
    std::vector<Edge> marked_entry;
    for (const auto& [e, strip] : marks)
      marked_entry.emplace_back(core_to_entry[kloc[e.u]], core_to_entry[kloc[e.v]]);
    std::sort(marked_entry.begin(), marked_entry.end());
    bool fits = false;
    for (const auto& f : entry.max_subdividable_sets) {
      std::set<Edge> fs(f.begin(), f.end());
      fits = std::all_of(marked_entry.begin(), marked_entry.end(),
                         [&](const Edge& e) { return fs.count(e) > 0; });
      if (fits) break;
    }
    if (!fits) {
      // The marked edges are not simultaneously subdividable: the core
      // with strips shrunk to their outer paths already has a minor.
      Graph region(bn);
      for (size_t i = 0; i < kept.size(); ++i)
        for (int w : b.neighbors(kept[i]))
          if (kloc[w] > static_cast<int>(i) )
            region.add_edge(kept[i], w);
      for (const auto& [e, strip] : marks) {
        const auto& ord = strip.witness.ordering;
        for (size_t i = 0; i + 1 < ord.size(); ++i)
          region.add_edge(ord[i], ord[i + 1]);
      }
      auto model = find_k2t_minor(region, 4, opt);
      if (!model)
        throw GraphError("internal: non-subdividable marked set without minor");
      if (!verify_model(b, *model))
        throw GraphError("internal: region minor model failed verification");
      return has_minor(*model);
    }

    BlockCoreExpansion out;
    out.vertices = to_g;
    out.core_id = entry.id;
    out.core_vertices.resize(entry.graph.order());
    for (int i = 0; i < entry.graph.order(); ++i)
      out.core_vertices[i] = to_g[kept[match->to_graph[i]]];
    for (const auto& [e, strip] : marks) {
      ReplacedEdge re;
      re.u = to_g[e.u];
      re.v = to_g[e.v];
      re.strip = remap_witness(strip.witness, to_g);
      out.replaced.push_back(std::move(re));
    }
    return out;
  }
};

std::vector<int> block_cert_vertices(const BlockCert& c) {
  if (const auto* v = std::get_if<BlockOuterplanar>(&c)) return v->vertices;
  if (const auto* v = std::get_if<BlockThreeSheets>(&c)) return v->vertices;
  if (const auto* v = std::get_if<BlockCoreExpansion>(&c)) return v->vertices;
  return std::get<BlockHasMinor>(c).vertices;
}

}  // namespace

K24Certificate recognize(const Graph& g, const OracleOptions& opt) {
  K24Certificate cert;
  for (const auto& comp : components(g)) {
    Graph cg = induced_subgraph(g, comp);
    for (const auto& blk : blocks(cg).blocks) {
      std::vector<int> verts;
      for (int v : blk) verts.push_back(comp[v]);
      BlockClassifier classifier(g, verts, opt);
      cert.blocks.push_back(classifier.classify());
      if (std::holds_alternative<BlockHasMinor>(cert.blocks.back()))
        cert.has_minor = true;
    }
  }
  return cert;
}

const StandardMinorModel& certificate_model(const K24Certificate& c) {
  for (const BlockCert& bc : c.blocks)
    if (const auto* hm = std::get_if<BlockHasMinor>(&bc)) return hm->model;
  throw GraphError("certificate carries no minor model");
}

// --- Verification ---

namespace {

bool verify_three_sheets(const Graph& g, const BlockThreeSheets& c) {
  const std::set<int> block(c.vertices.begin(), c.vertices.end());
  if (!block.count(c.x) || !block.count(c.y) || c.x == c.y) return false;
  if (c.xy_present != g.has_edge(c.x, c.y)) return false;
  std::set<int> covered = {c.x, c.y};
  for (const OuterWitness& sheet : c.sheets) {
    if (sheet.kind != OuterWitness::Kind::Path) return false;
    if (sheet.ordering.size() < 3) return false;
    bool fwd = sheet.ordering.front() == c.x && sheet.ordering.back() == c.y;
    bool bwd = sheet.ordering.front() == c.y && sheet.ordering.back() == c.x;
    if (!fwd && !bwd) return false;
    OuterWitness oriented = sheet;
    if (bwd) std::reverse(oriented.ordering.begin(), oriented.ordering.end());
    if (!verify_witness(g, oriented, std::make_pair(c.x, c.y))) return false;
    for (size_t i = 1; i + 1 < oriented.ordering.size(); ++i) {
      int v = oriented.ordering[i];
      if (v == c.x || v == c.y) return false;
      if (!covered.insert(v).second) return false;  // sheets overlap
      if (!block.count(v)) return false;
    }
  }
  if (covered.size() != block.size()) return false;
  // Interiors of distinct sheets must not be adjacent; equivalently every
  // block edge lies inside one sheet (the xy edge is covered by the
  // endpoint flag).
  std::map<int, int> owner;
  for (int i = 0; i < 3; ++i)
    for (size_t j = 1; j + 1 < c.sheets[i].ordering.size(); ++j)
      owner[c.sheets[i].ordering[j]] = i;
  for (int u : c.vertices)
    for (int v : g.neighbors(u)) {
      if (u > v || !block.count(v)) continue;
      bool u_end = u == c.x || u == c.y;
      bool v_end = v == c.x || v == c.y;
      if (u_end && v_end) continue;  // the optional xy edge
      if (!u_end && !v_end && owner[u] != owner[v]) return false;
    }
  return true;
}

bool verify_core_expansion(const Graph& g, const BlockCoreExpansion& c) {
  const CatalogEntry* entry;
  try {
    entry = &catalog_entry(c.core_id);
  } catch (const GraphError&) {
    return false;
  }
  const int cn = entry->graph.order();
  if (static_cast<int>(c.core_vertices.size()) != cn) return false;
  const std::set<int> block(c.vertices.begin(), c.vertices.end());
  std::map<int, int> to_entry;
  for (int i = 0; i < cn; ++i) {
    int v = c.core_vertices[i];
    if (!block.count(v)) return false;
    if (!to_entry.emplace(v, i).second) return false;
  }

  std::set<Edge> replaced_entry;
  std::vector<Edge> needs_subdivision;
  std::set<int> covered(c.core_vertices.begin(), c.core_vertices.end());
  std::map<int, int> owner;  // strip interior vertex -> strip index
  for (size_t k = 0; k < c.replaced.size(); ++k) {
    const ReplacedEdge& re = c.replaced[k];
    auto iu = to_entry.find(re.u), iv = to_entry.find(re.v);
    if (iu == to_entry.end() || iv == to_entry.end()) return false;
    Edge ee(iu->second, iv->second);
    if (!entry->graph.has_edge(ee.u, ee.v)) return false;
    if (!replaced_entry.insert(ee).second) return false;
    const auto& ord = re.strip.ordering;
    if (re.strip.kind != OuterWitness::Kind::Path || ord.size() < 2) return false;
    bool fwd = ord.front() == re.u && ord.back() == re.v;
    bool bwd = ord.front() == re.v && ord.back() == re.u;
    if (!fwd && !bwd) return false;
    OuterWitness oriented = re.strip;
    if (bwd) std::reverse(oriented.ordering.begin(), oriented.ordering.end());
    if (!verify_witness(g, oriented, std::make_pair(re.u, re.v))) return false;
    for (size_t j = 1; j + 1 < ord.size(); ++j) {
      int v = ord[j];
      if (!block.count(v)) return false;
      if (!covered.insert(v).second) return false;  // meets core or other strips
      owner[v] = static_cast<int>(k);
    }
    if (ord.size() > 2) needs_subdivision.push_back(ee);
  }
  if (covered.size() != block.size()) return false;

  // Plain core edges must be present; replaced ones need not be.
  for (const Edge& e : entry->graph.edges()) {
    if (replaced_entry.count(e)) continue;
    if (!g.has_edge(c.core_vertices[e.u], c.core_vertices[e.v])) return false;
  }
  // Every block edge is a plain core edge or stays inside one strip.
  for (int u : c.vertices)
    for (int v : g.neighbors(u)) {
      if (u > v || !block.count(v)) continue;
      auto ou = owner.find(u), ov = owner.find(v);
      if (ou != owner.end()) {
        if (ov != owner.end()) {
          if (ou->second != ov->second) return false;
        } else {
          // core endpoint must be an endpoint of this strip
          const ReplacedEdge& re = c.replaced[ou->second];
          if (v != re.u && v != re.v) return false;
        }
      } else if (ov != owner.end()) {
        const ReplacedEdge& re = c.replaced[ov->second];
        if (u != re.u && u != re.v) return false;
      } else {
        // both core vertices: must be an entry edge
        Edge ee(to_entry.at(u), to_entry.at(v));
        if (!entry->graph.has_edge(ee.u, ee.v)) return false;
        // a replaced entry edge may appear as a real edge only when the
        // strip's witness covers it (endpoint chord), which verify_witness
        // already allowed; nothing further to check here.
      }
    }

  // Strips with interior must fit one maximal subdividable set.
  std::sort(needs_subdivision.begin(), needs_subdivision.end());
  for (const auto& f : entry->max_subdividable_sets) {
    std::set<Edge> fs(f.begin(), f.end());
    bool all = true;
    for (const Edge& e : needs_subdivision)
      if (!fs.count(e)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool verify_certificate(const Graph& g, const K24Certificate& c) {
  try {
    std::vector<std::vector<int>> expected;
    for (const auto& comp : components(g)) {
      Graph cg = induced_subgraph(g, comp);
      for (const auto& blk : blocks(cg).blocks) {
        std::vector<int> verts;
        for (int v : blk) verts.push_back(comp[v]);
        expected.push_back(std::move(verts));
      }
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<int>> got;
    for (const BlockCert& bc : c.blocks) {
      std::vector<int> verts = block_cert_vertices(bc);
      std::sort(verts.begin(), verts.end());
      got.push_back(std::move(verts));
    }
    std::sort(got.begin(), got.end());
    if (expected != got) return false;

    bool any_minor = false;
    for (const BlockCert& bc : c.blocks) {
      if (const auto* op = std::get_if<BlockOuterplanar>(&bc)) {
        std::vector<int> ordered = op->witness.ordering;
        std::sort(ordered.begin(), ordered.end());
        std::vector<int> verts = op->vertices;
        std::sort(verts.begin(), verts.end());
        if (ordered != verts) return false;
        if (!verify_witness(g, op->witness)) return false;
      } else if (const auto* ts = std::get_if<BlockThreeSheets>(&bc)) {
        if (!verify_three_sheets(g, *ts)) return false;
      } else if (const auto* ce = std::get_if<BlockCoreExpansion>(&bc)) {
        if (!verify_core_expansion(g, *ce)) return false;
      } else {
        const auto& hm = std::get<BlockHasMinor>(bc);
        if (hm.model.t != 4) return false;
        if (!verify_model(g, hm.model)) return false;
        any_minor = true;
      }
    }
    return c.has_minor == any_minor;
  } catch (const std::exception&) {
    return false;
  }
}

// --- Consequences: apex sets and planarity ---

namespace {

bool nonplanar_core_id(const std::string& id) {
  static const std::set<std::string> ids = {"K5", "K33", "A",  "A+",
                                            "B",  "B+",  "C",  "C+"};
  return ids.count(id) > 0;
}

bool cert_planar(const K24Certificate& cert) {
  for (const BlockCert& bc : cert.blocks)
    if (const auto* ce = std::get_if<BlockCoreExpansion>(&bc))
      if (nonplanar_core_id(ce->core_id)) return false;
  return true;
}

bool outerplanar_after_removal(const Graph& g, const std::vector<int>& u) {
  return is_outerplanar(delete_vertices(g, u)).has_value();
}

// Apex vertices for an exception core: the smallest U such that the core
// minus U is outerplanar with the surviving edges of the chosen
// subdividable set on the outer face.
std::optional<std::vector<int>> exception_core_apex(const CatalogEntry& entry,
                                                    const std::vector<Edge>& f,
                                                    int max_size) {
  const int n = entry.graph.order();
  std::vector<std::vector<int>> candidates = {{}};
  for (int a = 0; a < n; ++a) candidates.push_back({a});
  for (int a = 0; a < n; ++a)
    for (int bb = a + 1; bb < n; ++bb) candidates.push_back({a, bb});
  for (const auto& u : candidates) {
    if (static_cast<int>(u.size()) > max_size) continue;
    std::vector<int> keepers;
    for (int v = 0; v < n; ++v)
      if (std::find(u.begin(), u.end(), v) == u.end()) keepers.push_back(v);
    Graph sub = induced_subgraph(entry.graph, keepers);
    auto w = is_outerplanar(sub);
    if (!w) continue;
    std::vector<int> loc(n, -1);
    for (size_t i = 0; i < keepers.size(); ++i) loc[keepers[i]] = static_cast<int>(i);
    bool ok = true;
    for (const Edge& e : f) {
      if (loc[e.u] < 0 || loc[e.v] < 0) continue;  // incident with U
      // The edge must lie on the outer cycle of its block.
      bool on_boundary = false;
      for (const OuterWitness& bw : w->blocks) {
        const auto& ord = bw.ordering;
        const int len = static_cast<int>(ord.size());
        if (len <= 2) {
          if (len == 2 && Edge(ord[0], ord[1]) == Edge(loc[e.u], loc[e.v]))
            on_boundary = true;
          continue;
        }
        for (int i = 0; i < len; ++i)
          if (Edge(ord[i], ord[(i + 1) % len]) == Edge(loc[e.u], loc[e.v]))
            on_boundary = true;
      }
      if (!on_boundary) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  return std::nullopt;
}

}  // namespace

bool is_planar_k24free(const Graph& g) {
  K24Certificate cert = recognize(g);
  if (cert.has_minor) throw MinorFoundError(certificate_model(cert));
  return cert_planar(cert);
}

std::vector<int> find_apex_set(const Graph& g) {
  K24Certificate cert = recognize(g);
  if (cert.has_minor) throw MinorFoundError(certificate_model(cert));
  const bool planar = cert_planar(cert);
  const int limit = planar ? 1 : 2;

  auto finish = [&](std::vector<int> u) -> std::optional<std::vector<int>> {
    std::sort(u.begin(), u.end());
    if (static_cast<int>(u.size()) <= limit && outerplanar_after_removal(g, u))
      return u;
    return std::nullopt;
  };

  if (cert.blocks.size() == 1) {
    const BlockCert& bc = cert.blocks[0];
    if (std::holds_alternative<BlockOuterplanar>(bc)) return {};
    if (const auto* ts = std::get_if<BlockThreeSheets>(&bc)) {
      if (auto u = finish({ts->x})) return *u;
      if (auto u = finish({ts->y})) return *u;
    } else if (const auto* ce = std::get_if<BlockCoreExpansion>(&bc)) {
      const CatalogEntry& entry = catalog_entry(ce->core_id);
      if (entry.family) {
        // Deleting the image of v_n works for every family member.
        if (auto u = finish({ce->core_vertices[entry.graph.order() - 1]}))
          return *u;
      } else {
        // Chosen subdividable set, as in the certificate.
        std::map<int, int> to_entry;
        for (size_t i = 0; i < ce->core_vertices.size(); ++i)
          to_entry[ce->core_vertices[i]] = static_cast<int>(i);
        std::vector<Edge> marked;
        for (const ReplacedEdge& re : ce->replaced)
          if (re.strip.ordering.size() > 2)
            marked.emplace_back(to_entry.at(re.u), to_entry.at(re.v));
        std::sort(marked.begin(), marked.end());
        for (const auto& f : entry.max_subdividable_sets) {
          std::set<Edge> fs(f.begin(), f.end());
          bool all = std::all_of(marked.begin(), marked.end(),
                                 [&](const Edge& e) { return fs.count(e) > 0; });
          if (!all) continue;
          int core_limit = nonplanar_core_id(entry.id) ? 2 : 1;
          auto ue = exception_core_apex(entry, f, core_limit);
          if (!ue) continue;
          std::vector<int> u;
          for (int v : *ue) u.push_back(ce->core_vertices[v]);
          if (auto done = finish(u)) return *done;
        }
      }
    }
  }

  // General fallback: smallest vertex set by direct search.
  std::vector<std::vector<int>> candidates = {{}};
  for (int a = 0; a < g.order(); ++a) candidates.push_back({a});
  for (int a = 0; a < g.order(); ++a)
    for (int bb = a + 1; bb < g.order(); ++bb) candidates.push_back({a, bb});
  for (const auto& u : candidates)
    if (auto done = finish(u)) return *done;
  throw GraphError("no apex set of size <= 2 found");
}

}  // namespace k24
