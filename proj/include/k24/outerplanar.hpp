// Outerplanarity and xy-outerplanarity with explicit witnesses.
//
// A witness is a vertex ordering whose non-path (non-cycle) edges are
// pairwise non-crossing chords.  For a path witness the ordering is a
// hamilton xy-path (the outer path); for a cycle witness the ordering is
// the outer cycle of a 2-connected outerplanar block.

#ifndef K24_OUTERPLANAR_HPP
#define K24_OUTERPLANAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "k24/graph.hpp"

namespace k24 {

struct OuterWitness {
  enum class Kind { Cycle, Path };
  Kind kind = Kind::Cycle;
  std::vector<int> ordering;
};

struct OuterplanarWitness {
  std::vector<OuterWitness> blocks;  // one witness per block
};

class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Witness per block iff g is outerplanar (per-component, per-block).
std::optional<OuterplanarWitness> is_outerplanar(const Graph& g);

// Path witness iff g is xy-outerplanar.  Requires x != y, g connected,
// and g+xy a block; otherwise throws StructureError.
std::optional<OuterWitness> is_xy_outerplanar(const Graph& g, int x, int y);

// Checks the witness invariants against the subgraph of g induced by the
// witness vertices; for path witnesses with roots, the ordering must
// start at roots->first and end at roots->second.
bool verify_witness(const Graph& g, const OuterWitness& w,
                    std::optional<std::pair<int, int>> roots = std::nullopt);

}  // namespace k24

#endif  // K24_OUTERPLANAR_HPP
