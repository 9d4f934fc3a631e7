// Conformance harness: oracle-vs-recognizer agreement over graph
// corpora, counting, edge bounds, the edge-contraction table, the
// small-case deletion/contraction facts, and exhaustive subdividable-set
// checks.  Every check is reproducible bit-for-bit across runs.

#ifndef K24_AUDIT_HPP
#define K24_AUDIT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "k24/catalog.hpp"
#include "k24/graph.hpp"
#include "k24/minor_oracle.hpp"

namespace k24 {

struct AuditIssue {
  std::string check;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditIssue> issues;
  std::uint64_t items = 0;
  std::uint64_t budget_exceeded = 0;

  bool ok() const { return issues.empty() && budget_exceeded == 0; }
  void add(const std::string& check, const std::string& detail) {
    issues.push_back({check, detail});
  }
  void merge(const AuditReport& other);
};

// Per-graph verdict pairs (recognize vs oracle), plus certificate
// verification; the report is empty on agreement.  jobs > 1 evaluates
// graphs in parallel with results ordered by input index.
AuditReport compare_corpus(const std::vector<Graph>& corpus,
                           const OracleOptions& opt = {}, int jobs = 1);

// expected vs actual number of 3-connected K_{2,4}-minor-free graphs of
// order n (2n-8 for n >= 9; small orders include the exceptions).
std::pair<int, int> check_counting(int n);

// Edge bounds over enumerate_3connected plus a constructed 2-connected
// witness with 2n-1 edges.
AuditReport check_edge_bounds(int n_min, int n_max);

// Every contraction-table row instantiated for the given orders.
AuditReport check_table1(int n_min, int n_max);

// Replays every recorded deletion/contraction outcome.
AuditReport check_hasse();

// Exhaustive subset check of the declared maximal subdividable sets.
AuditReport check_subdividable_bruteforce(const std::string& id,
                                          int max_order = 7,
                                          const OracleOptions& opt = {});

// 2-connected K_{2,4}-minor-free witness with 2n-1 edges (n >= 6).
Graph dense_free_witness(int n);

// Deterministic corpus loading: one graph6 line per graph.
std::vector<Graph> load_graph6_file(const std::string& path);

// Fallback corpus when no file is available: Erdos-Renyi graphs filtered
// to 2-connected, fixed seed.
std::vector<Graph> random_corpus(int count, int max_order, std::uint64_t seed);

}  // namespace k24

#endif  // K24_AUDIT_HPP
