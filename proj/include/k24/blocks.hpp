// Blocks, cutvertices, the block-cutvertex tree, and small-k vertex
// connectivity.  A block is a maximal connected subgraph without a
// cutvertex: an isolated vertex, an edge, or a 2-connected graph.

#ifndef K24_BLOCKS_HPP
#define K24_BLOCKS_HPP

#include <utility>
#include <vector>

#include "k24/graph.hpp"

namespace k24 {

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // ascending vertex lists
  std::vector<int> cutvertices;          // ascending
  // Block-cutvertex tree as (block index, cutvertex) incidences.
  std::vector<std::pair<int, int>> tree;
};

// Requires a connected graph; callers decompose into components first.
BlockDecomposition blocks(const Graph& g);

// True iff g has more than k vertices and no vertex cut of size < k.
// k = 3 is decided by brute-force removal of every vertex pair.
bool is_k_connected(const Graph& g, int k);

struct Separation {
  std::vector<int> side_h;       // includes the boundary
  std::vector<int> side_j;       // includes the boundary
  std::pair<int, int> boundary;  // the 2-element intersection {x, y}
};

// All 2-separations (one per unordered pair {x,y} and component of
// g - {x,y}, with side_j the component side).  Empty when 3-connected.
std::vector<Separation> list_2separations(const Graph& g);

}  // namespace k24

#endif  // K24_BLOCKS_HPP
