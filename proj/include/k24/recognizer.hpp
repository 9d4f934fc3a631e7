// The main decision procedure: classify a graph as K_{2,4}-minor-free or
// not, with a per-block certificate that verify_certificate can replay
// independently of how it was produced.

#ifndef K24_RECOGNIZER_HPP
#define K24_RECOGNIZER_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "k24/catalog.hpp"
#include "k24/graph.hpp"
#include "k24/minor_oracle.hpp"
#include "k24/outerplanar.hpp"

namespace k24 {

// Certificate payloads, one per block.  Vertex indices refer to g.

struct BlockOuterplanar {
  std::vector<int> vertices;
  OuterWitness witness;
};

// Union of three xy-outerplanar sheets and possibly the edge xy.
struct BlockThreeSheets {
  std::vector<int> vertices;
  int x = -1, y = -1;
  bool xy_present = false;
  std::array<OuterWitness, 3> sheets;  // path witnesses from x to y
};

struct ReplacedEdge {
  int u = -1, v = -1;     // core edge endpoints in g
  OuterWitness strip;     // path witness from u to v over the strip
};

// A 3-connected catalog core with subdividable edges replaced by
// outerplanar strips.  core_vertices[i] is the g-vertex carrying catalog
// vertex i of the named entry.
struct BlockCoreExpansion {
  std::vector<int> vertices;
  std::string core_id;
  std::vector<int> core_vertices;
  std::vector<ReplacedEdge> replaced;
};

struct BlockHasMinor {
  std::vector<int> vertices;
  StandardMinorModel model;
};

using BlockCert = std::variant<BlockOuterplanar, BlockThreeSheets,
                               BlockCoreExpansion, BlockHasMinor>;

struct K24Certificate {
  bool has_minor = false;
  std::vector<BlockCert> blocks;
};

class MinorFoundError : public std::runtime_error {
 public:
  explicit MinorFoundError(StandardMinorModel m)
      : std::runtime_error("graph has a K_{2,4} minor"), model(std::move(m)) {}
  StandardMinorModel model;
};

// Decides K_{2,4}-minor-freeness per 2-connected block; a graph is free
// iff every block is.  Certificates always verify; HasMinor verdicts
// agree with the brute-force oracle (this is tested, not assumed).
K24Certificate recognize(const Graph& g, const OracleOptions& opt = {});

// Replays every invariant of the certificate against g.
bool verify_certificate(const Graph& g, const K24Certificate& c);

// An apex set U, |U| <= 2 (|U| <= 1 for planar g), with g - U
// outerplanar.  Requires g K_{2,4}-minor-free; throws MinorFoundError
// carrying the model otherwise.
std::vector<int> find_apex_set(const Graph& g);

// Planarity of a K_{2,4}-minor-free graph, decided over the certificate
// cores (a core is planar unless isomorphic to one of the eight
// nonplanar exceptions).
bool is_planar_k24free(const Graph& g);

const StandardMinorModel& certificate_model(const K24Certificate& c);

}  // namespace k24

#endif  // K24_RECOGNIZER_HPP
