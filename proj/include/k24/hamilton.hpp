// Constructive hamiltonicity for K_{2,4}-minor-free graphs: closed-form
// hamilton cycles for the 3-connected catalog, threaded hamilton paths
// for the 2-connected case via hamilton bases, and exhaustive searchers
// used to derive the small-graph fixtures.

#ifndef K24_HAMILTON_HPP
#define K24_HAMILTON_HPP

#include <optional>

#include "k24/catalog.hpp"
#include "k24/graph.hpp"
#include "k24/hamilton_types.hpp"
#include "k24/minor_oracle.hpp"

namespace k24 {

class HamiltonPreconditionError : public std::runtime_error {
 public:
  HamiltonPreconditionError(const std::string& what,
                            std::optional<StandardMinorModel> witness = {})
      : std::runtime_error(what), minor_witness(std::move(witness)) {}
  std::optional<StandardMinorModel> minor_witness;
};

// Requires g 3-connected and K_{2,4}-minor-free; throws
// HamiltonPreconditionError otherwise (carrying a minor witness when the
// freeness precondition fails).
HamiltonCertificate hamilton_cycle_3conn(const Graph& g);

// Requires g 2-connected (K_1/K_2 are accepted as trivial paths) and
// K_{2,4}-minor-free.
HamiltonCertificate hamilton_path_2conn(const Graph& g);

// One hamilton base per maximal subdividable set of the entry, each
// containing its set.  Family shapes use closed forms; the small graphs
// are solved by exhaustive trail search.  Search failure is a hard error.
std::vector<HamiltonCertificate> derive_hamilton_bases(const CatalogEntry& entry);

// Internal building block, exposed for the catalog and tests: a hamilton
// base of g whose edge set contains `required`.
std::optional<HamiltonCertificate> find_hamilton_base_containing(
    const Graph& g, const std::vector<Edge>& required);

// Exhaustive hamilton cycle search (fixture derivation; small graphs).
std::optional<HamiltonCertificate> find_hamilton_cycle(const Graph& g);

bool verify_hamilton(const Graph& g, const HamiltonCertificate& c);

}  // namespace k24

#endif  // K24_HAMILTON_HPP
