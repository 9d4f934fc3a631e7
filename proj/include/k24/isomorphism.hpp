// Exact graph isomorphism for small graphs (order <= 64) by canonical
// labeling: iterated neighborhood-degree refinement plus backtracking
// individualization.  No hashing shortcuts; deterministic.

#ifndef K24_ISOMORPHISM_HPP
#define K24_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "k24/graph.hpp"

namespace k24 {

struct CanonicalForm {
  // labeling[v] = position of v in the canonical ordering.
  std::vector<int> labeling;
  // Canonical adjacency matrix rows (order() entries, bit j of row i set
  // iff canonical vertices i, j are adjacent).
  std::vector<std::uint64_t> matrix;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.matrix == b.matrix;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.matrix < b.matrix;
  }
};

CanonicalForm canonical_form(const Graph& g);

// Compact string key for hashing canonical forms.
std::string canonical_key(const Graph& g);

// Adjacency-preserving bijection g -> h, or nullopt.  Deterministic for
// fixed inputs.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

}  // namespace k24

#endif  // K24_ISOMORPHISM_HPP
