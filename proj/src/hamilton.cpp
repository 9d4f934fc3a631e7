#include "k24/hamilton.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "k24/blocks.hpp"
#include "k24/isomorphism.hpp"
#include "k24/recognizer.hpp"

namespace k24 {

namespace {

std::vector<Edge> sequence_edges(const std::vector<int>& seq) {
  std::vector<Edge> out;
  for (size_t i = 0; i + 1 < seq.size(); ++i) out.emplace_back(seq[i], seq[i + 1]);
  return out;
}

}  // namespace

bool verify_hamilton(const Graph& g, const HamiltonCertificate& c) {
  const auto& seq = c.sequence;
  const int n = g.order();
  for (int v : seq)
    if (v < 0 || v >= n) return false;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] == seq[i + 1] || !g.has_edge(seq[i], seq[i + 1])) return false;

  auto all_distinct = [](const std::vector<int>& vs) {
    std::set<int> s(vs.begin(), vs.end());
    return s.size() == vs.size();
  };

  switch (c.kind) {
    case HamiltonCertificate::Kind::Cycle: {
      if (static_cast<int>(seq.size()) != n || n < 3) return false;
      if (!all_distinct(seq)) return false;
      return g.has_edge(seq.back(), seq.front());
    }
    case HamiltonCertificate::Kind::Path: {
      if (static_cast<int>(seq.size()) != n) return false;
      if (n == 0) return false;
      return all_distinct(seq);
    }
    case HamiltonCertificate::Kind::Base: {
      const size_t front = c.ext_front ? 1 : 0;
      if (seq.size() < front + (c.ext_back ? 1 : 0)) return false;
      std::vector<int> interior(seq.begin() + front,
                                seq.end() - (c.ext_back ? 1 : 0));
      if (static_cast<int>(interior.size()) != n || !all_distinct(interior))
        return false;
      // Trail: all edges distinct.
      std::vector<Edge> edges = sequence_edges(seq);
      std::sort(edges.begin(), edges.end());
      return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    }
  }
  return false;
}

std::optional<HamiltonCertificate> find_hamilton_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  std::vector<int> path = {0};
  std::vector<bool> used(n, false);
  used[0] = true;
  std::optional<HamiltonCertificate> found;

  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(path.back(), 0)) {
        found = HamiltonCertificate{HamiltonCertificate::Kind::Cycle, path,
                                    false, false};
        return true;
      }
      return false;
    }
    for (int w : g.neighbors(path.back())) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used[w] = false;
    }
    return false;
  };
  dfs(dfs);
  return found;
}

std::optional<HamiltonCertificate> find_hamilton_base_containing(
    const Graph& g, const std::vector<Edge>& required) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  for (const Edge& e : required)
    if (!g.has_edge(e.u, e.v)) return std::nullopt;
  std::set<Edge> req(required.begin(), required.end());

  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::optional<HamiltonCertificate> found;

  auto try_complete = [&]() -> bool {
    std::set<Edge> covered;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      covered.insert(Edge(path[i], path[i + 1]));
    std::vector<Edge> missing;
    for (const Edge& e : req)
      if (!covered.count(e)) missing.push_back(e);
    if (missing.size() > 2) return false;
    const int front = path.front(), back = path.back();
    auto touches = [](const Edge& e, int v) { return e.u == v || e.v == v; };
    auto other = [](const Edge& e, int v) { return e.u == v ? e.v : e.u; };
    // Assign missing edges to the two path ends.
    std::vector<std::pair<std::optional<Edge>, std::optional<Edge>>> options;
    if (missing.empty()) {
      options.push_back({std::nullopt, std::nullopt});
    } else if (missing.size() == 1) {
      const Edge& e = missing[0];
      if (touches(e, front)) options.push_back({e, std::nullopt});
      if (touches(e, back)) options.push_back({std::nullopt, e});
    } else {
      const Edge &e = missing[0], &f = missing[1];
      if (touches(e, front) && touches(f, back)) options.push_back({e, f});
      if (touches(f, front) && touches(e, back)) options.push_back({f, e});
    }
    for (auto& [fe, be] : options) {
      HamiltonCertificate c;
      c.kind = HamiltonCertificate::Kind::Base;
      c.sequence = path;
      if (fe) {
        c.sequence.insert(c.sequence.begin(), other(*fe, front));
        c.ext_front = true;
      }
      if (be) {
        c.sequence.push_back(other(*be, back));
        c.ext_back = true;
      }
      if (verify_hamilton(g, c)) {
        found = c;
        return true;
      }
    }
    return false;
  };

  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == n) return try_complete();
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (!path.empty() && !g.has_edge(path.back(), w)) continue;
      used[w] = true;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used[w] = false;
    }
    return false;
  };
  dfs(dfs);
  return found;
}

std::vector<HamiltonCertificate> derive_hamilton_bases(const CatalogEntry& entry) {
  std::vector<HamiltonCertificate> out;
  const int n = entry.graph.order();
  for (const auto& f : entry.max_subdividable_sets) {
    std::vector<Edge> fs = f;
    std::sort(fs.begin(), fs.end());
    std::optional<HamiltonCertificate> base;
    if (entry.family) {
      const FamilySpec& fam = *entry.family;
      std::vector<Edge> spine = fam.spine_edges();
      std::sort(spine.begin(), spine.end());
      if (fs == spine) {
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        base = HamiltonCertificate{HamiltonCertificate::Kind::Base, seq, false,
                                   false};
      } else if ((fam.r == 2 || fam.s == 2) && fs == fam.second_spine_edges()) {
        // v_{n-2} v_{n-3} ... v_1 v_{n-1} v_n (or its reversal image).
        std::vector<int> seq;
        if (fam.r == 2) {
          for (int i = n - 3; i >= 0; --i) seq.push_back(i);
          seq.push_back(n - 2);
          seq.push_back(n - 1);
        } else {
          seq.push_back(0);
          seq.push_back(1);
          seq.push_back(n - 1);
          for (int i = n - 2; i >= 2; --i) seq.push_back(i);
        }
        base = HamiltonCertificate{HamiltonCertificate::Kind::Base, seq, false,
                                   false};
      } else if (fam.is_wheel()) {
        for (int j = 0; j <= n - 2 && !base; ++j) {
          if (fs != fam.rim_and_spoke(j)) continue;
          // Hub, then once around the rim, re-entering the start.
          std::vector<int> seq = {n - 1};
          for (int k = 0; k <= n - 2; ++k) seq.push_back((j + k) % (n - 1));
          seq.push_back(j);
          base = HamiltonCertificate{HamiltonCertificate::Kind::Base, seq,
                                     false, true};
        }
      }
    }
    if (!base) base = find_hamilton_base_containing(entry.graph, fs);
    if (!base || !verify_hamilton(entry.graph, *base) ||
        // The base must contain the whole set.
        [&] {
          std::set<Edge> edges;
          for (const Edge& e : sequence_edges(base->sequence)) edges.insert(e);
          for (const Edge& e : fs)
            if (!edges.count(e)) return true;
          return false;
        }())
      throw GraphError("hamilton base derivation failed for " + entry.id);
    out.push_back(std::move(*base));
  }
  return out;
}

HamiltonCertificate hamilton_cycle_3conn(const Graph& g) {
  if (!is_k_connected(g, 3))
    throw HamiltonPreconditionError("hamilton_cycle_3conn requires a 3-connected graph");
  auto match = catalog_match(g);
  if (!match) {
    auto model = find_k2t_minor(g, 4);
    throw HamiltonPreconditionError(
        "hamilton_cycle_3conn requires a K_{2,4}-minor-free graph", model);
  }
  const CatalogEntry& entry = *match->entry;
  std::vector<int> seq_entry;
  if (entry.family) {
    // (v_1 v_2 ... v_{s+1} v_n v_{n-1} ... v_{s+2})
    const FamilySpec& fam = *entry.family;
    for (int i = 0; i <= fam.s; ++i) seq_entry.push_back(i);
    for (int i = fam.n - 1; i >= fam.s + 1; --i) seq_entry.push_back(i);
  } else {
    static std::mutex mu;
    static std::map<std::string, std::vector<int>> fixtures;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fixtures.find(entry.id);
    if (it == fixtures.end()) {
      auto cycle = find_hamilton_cycle(entry.graph);
      if (!cycle) throw GraphError("no hamilton cycle found for " + entry.id);
      it = fixtures.emplace(entry.id, cycle->sequence).first;
    }
    seq_entry = it->second;
  }
  HamiltonCertificate c;
  c.kind = HamiltonCertificate::Kind::Cycle;
  for (int v : seq_entry) c.sequence.push_back(match->to_graph[v]);
  if (!verify_hamilton(g, c))
    throw GraphError("internal: constructed hamilton cycle failed verification");
  return c;
}

namespace {

// Strip interior oriented away from `from`; the strip witness is a path
// witness whose ordering runs between the two core endpoints.
std::vector<int> strip_interior_from(const OuterWitness& strip, int from) {
  const auto& ord = strip.ordering;
  std::vector<int> out;
  if (ord.front() == from) {
    out.assign(ord.begin() + 1, ord.end() - 1);
  } else {
    out.assign(ord.rbegin() + 1, ord.rend() - 1);
  }
  return out;
}

HamiltonCertificate thread_three_sheets(const Graph& g,
                                        const BlockThreeSheets& cert) {
  HamiltonCertificate out;
  out.kind = HamiltonCertificate::Kind::Path;
  const int x = cert.x, y = cert.y;
  auto interior = [&](const OuterWitness& sheet, bool from_x) {
    return strip_interior_from(sheet, from_x ? x : y);
  };
  // H1 interior walked into x, H2 across, H3 interior walked from y.
  std::vector<int> i1 = interior(cert.sheets[0], false);  // y-side first
  std::vector<int> i2 = interior(cert.sheets[1], true);
  std::vector<int> i3 = interior(cert.sheets[2], false);
  out.sequence.insert(out.sequence.end(), i1.begin(), i1.end());
  out.sequence.push_back(x);
  out.sequence.insert(out.sequence.end(), i2.begin(), i2.end());
  out.sequence.push_back(y);
  out.sequence.insert(out.sequence.end(), i3.begin(), i3.end());
  if (!verify_hamilton(g, out))
    throw GraphError("internal: three-sheet hamilton path failed verification");
  return out;
}

HamiltonCertificate thread_core_expansion(const Graph& g,
                                          const BlockCoreExpansion& cert) {
  const CatalogEntry& entry = catalog_entry(cert.core_id);
  std::map<int, int> to_entry;  // g vertex -> entry vertex
  for (size_t i = 0; i < cert.core_vertices.size(); ++i)
    to_entry[cert.core_vertices[i]] = static_cast<int>(i);

  std::map<Edge, const OuterWitness*> strips;  // keyed by entry edge
  std::vector<Edge> replaced_entry;            // strips with interior
  for (const ReplacedEdge& re : cert.replaced) {
    Edge ee(to_entry.at(re.u), to_entry.at(re.v));
    strips[ee] = &re.strip;
    if (re.strip.ordering.size() > 2) replaced_entry.push_back(ee);
  }
  std::sort(replaced_entry.begin(), replaced_entry.end());

  // First maximal subdividable set containing the replaced edges, and its
  // hamilton base.
  int set_index = -1;
  for (size_t i = 0; i < entry.max_subdividable_sets.size(); ++i) {
    std::set<Edge> fs(entry.max_subdividable_sets[i].begin(),
                      entry.max_subdividable_sets[i].end());
    bool all = true;
    for (const Edge& e : replaced_entry)
      if (!fs.count(e)) {
        all = false;
        break;
      }
    if (all) {
      set_index = static_cast<int>(i);
      break;
    }
  }
  if (set_index < 0)
    throw GraphError("internal: replaced edges fit no subdividable set");
  const HamiltonCertificate& base = entry.hamilton_bases[set_index];

  const auto& seq = base.sequence;
  HamiltonCertificate out;
  out.kind = HamiltonCertificate::Kind::Path;
  auto phi = [&](int entry_v) { return cert.core_vertices[entry_v]; };

  const size_t steps = seq.size() - 1;
  for (size_t i = 0; i < steps; ++i) {
    const bool front_ext = i == 0 && base.ext_front;
    const bool back_ext = i == steps - 1 && base.ext_back;
    Edge ee(seq[i], seq[i + 1]);
    auto it = strips.find(ee);
    const OuterWitness* strip =
        it != strips.end() && it->second->ordering.size() > 2 ? it->second
                                                              : nullptr;
    if (i == 0 && !base.ext_front) out.sequence.push_back(phi(seq[0]));
    if (front_ext) {
      // Only the portion from the interior endpoint is used.
      if (strip) {
        std::vector<int> part = strip_interior_from(*strip, phi(seq[0]));
        out.sequence.insert(out.sequence.end(), part.begin(), part.end());
      }
      out.sequence.push_back(phi(seq[1]));
      continue;
    }
    if (back_ext) {
      if (strip) {
        std::vector<int> part = strip_interior_from(*strip, phi(seq[i]));
        out.sequence.insert(out.sequence.end(), part.begin(), part.end());
      }
      continue;  // the revisited end vertex is not appended
    }
    if (strip) {
      std::vector<int> part = strip_interior_from(*strip, phi(seq[i]));
      out.sequence.insert(out.sequence.end(), part.begin(), part.end());
    }
    out.sequence.push_back(phi(seq[i + 1]));
  }
  if (!verify_hamilton(g, out))
    throw GraphError("internal: threaded hamilton path failed verification");
  return out;
}

}  // namespace

HamiltonCertificate hamilton_path_2conn(const Graph& g) {
  if (g.order() <= 2) {
    if (!is_connected(g))
      throw HamiltonPreconditionError("hamilton_path_2conn requires a connected graph");
    HamiltonCertificate c;
    c.kind = HamiltonCertificate::Kind::Path;
    for (int v = 0; v < g.order(); ++v) c.sequence.push_back(v);
    return c;
  }
  if (!is_k_connected(g, 2))
    throw HamiltonPreconditionError("hamilton_path_2conn requires a 2-connected graph");
  K24Certificate cert = recognize(g);
  if (cert.has_minor)
    throw HamiltonPreconditionError(
        "hamilton_path_2conn requires a K_{2,4}-minor-free graph",
        certificate_model(cert));
  if (cert.blocks.size() != 1)
    throw GraphError("internal: 2-connected graph with several blocks");
  const BlockCert& bc = cert.blocks[0];
  if (const auto* op = std::get_if<BlockOuterplanar>(&bc)) {
    HamiltonCertificate c;
    c.kind = HamiltonCertificate::Kind::Path;
    c.sequence = op->witness.ordering;
    if (!verify_hamilton(g, c))
      throw GraphError("internal: outerplanar hamilton path failed verification");
    return c;
  }
  if (const auto* ts = std::get_if<BlockThreeSheets>(&bc))
    return thread_three_sheets(g, *ts);
  if (const auto* ce = std::get_if<BlockCoreExpansion>(&bc))
    return thread_core_expansion(g, *ce);
  throw GraphError("internal: unexpected certificate variant");
}

}  // namespace k24
