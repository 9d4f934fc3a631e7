// The catalog of 3-connected K_{2,4}-minor-free graphs: the two-fan
// family G_{n,r,s} (optionally with the v1-vn "plus" edge), the class of
// members that are 3-connected and K_{2,4}-minor-free, the nine small
// exceptions, maximal subdividable edge sets, hamilton bases, and the
// deletion/contraction conformance table for the small graphs.

#ifndef K24_CATALOG_HPP
#define K24_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "k24/graph.hpp"
#include "k24/hamilton_types.hpp"
#include "k24/minor_oracle.hpp"

namespace k24 {

// Parameters naming a family member G_{n,r,s} (plus edge optional).
// Vertices are 0-indexed: vertex i carries the label v_{i+1}.  The spine is
// the path 0,1,...,n-1; vertex 0 is additionally joined to the r vertices
// n-2, n-3, ..., n-1-r and vertex n-1 to the s vertices 1, 2, ..., s.
struct FamilySpec {
  int n = 0;
  int r = 0;
  int s = 0;
  bool plus = false;

  bool valid() const {
    return n >= 3 && r >= 0 && s >= 0 && r <= n - 3 && s <= n - 3;
  }
  bool is_wheel() const {
    return plus && ((r == 1 && s == n - 3) || (s == 1 && r == n - 3));
  }
  std::string id() const;

  std::vector<Edge> spine_edges() const;
  // Defined when r == 2 (or, via the reversal symmetry, when s == 2).
  std::vector<Edge> second_spine_edges() const;
  // For wheels: rim plus the spoke at `rim_vertex`.
  std::vector<Edge> rim_and_spoke(int rim_vertex) const;
};

Graph build_family(const FamilySpec& spec);

// Membership in the class of family members that are simultaneously
// 3-connected and K_{2,4}-minor-free: the wheels G+_{n,1,n-3} (n >= 4)
// and the members with r,s in {2,...,n-3} and r+s in {n-2, n-1} (n >= 5).
bool in_class_g(const FamilySpec& spec);

struct CatalogEntry {
  std::string id;
  Graph graph;
  std::optional<FamilySpec> family;           // nullopt for the exceptions
  std::vector<std::vector<Edge>> max_subdividable_sets;
  std::vector<HamiltonCertificate> hamilton_bases;  // parallel to the sets
};

// All 3-connected K_{2,4}-minor-free graphs of order n up to isomorphism
// (class members deduplicated, plus the exceptions of that order).
// Results are cached and shared; entries carry their subdividable sets
// and hamilton bases.
const std::vector<CatalogEntry>& enumerate_3connected(int n);

// The nine small exceptions: K5, K33, A, A+, B, B+, C, C+, D.
const std::vector<CatalogEntry>& small_exceptions();

// Lookup by id over family descriptors and exception names; throws
// GraphError for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);

// Maximal subdividable edge sets of the named catalog graph (all
// symmetric copies; K5 yields the single empty set).
const std::vector<std::vector<Edge>>& maximal_subdividable_sets(
    const std::string& id);

// Isomorphism lookup: entry plus map entry-vertex -> g-vertex.
struct CatalogMatch {
  const CatalogEntry* entry;
  std::vector<int> to_graph;
};
std::optional<CatalogMatch> catalog_match(const Graph& g);

// Named auxiliary graphs used by the conformance fixtures and the audit
// corpus: "Q3", "Q3e", "V8", "Octe", "K24", plus everything accepted by
// catalog_entry.
Graph named_graph(const std::string& name);

// Exact level-wise scan of the downward-closed family of subdividable
// edge sets: a subset is oracle-tested only when all its maximal proper
// subsets are known subdividable, everything else being non-subdividable
// by minor monotonicity.  converse_failure, when present, is a set whose
// edges are all individually subdividable but which is not subdividable
// itself.
struct SubdividableScan {
  std::vector<std::vector<Edge>> maximal;
  std::optional<std::vector<Edge>> converse_failure;
  std::uint64_t oracle_calls = 0;
};
SubdividableScan scan_subdividable(const Graph& g, const OracleOptions& opt = {});

// One recorded deletion/contraction outcome for the small graphs.
struct HasseFact {
  std::string source;                // graph name
  Edge e;                            // in the source's fixed labeling
  bool contract = false;             // otherwise: delete
  std::optional<std::string> result; // nullopt = loses 3-connectivity
};
const std::vector<HasseFact>& hasse_facts();

}  // namespace k24

#endif  // K24_CATALOG_HPP
