// Ground-truth detection of standard K_{2,t} minors by exhaustive search
// over pairs of disjoint connected sets, optionally rooted at two
// vertices.  Independent of the structural recognizer; every structural
// result is cross-checked against this oracle.

#ifndef K24_MINOR_ORACLE_HPP
#define K24_MINOR_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "k24/graph.hpp"

namespace k24 {

// (R1, R2; S): R1 and R2 induce disjoint connected subgraphs, |S| = t,
// and every s in S is adjacent to both R1 and R2.
struct StandardMinorModel {
  std::vector<int> r1;
  std::vector<int> r2;
  std::vector<int> s;
  int t = 0;
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(std::uint64_t limit)
      : std::runtime_error("minor search budget exceeded (" +
                           std::to_string(limit) + " nodes)"),
        limit(limit) {}
  std::uint64_t limit;
};

struct OracleOptions {
  std::uint64_t budget = 0;  // 0 = default (K24_BUDGET env or built-in cap)
};

std::uint64_t default_oracle_budget();

// Searches for a standard K_{2,t} minor, t >= 2.  Search order is fixed,
// so results are deterministic.  Throws BudgetExceededError when the node
// cap is hit; that is distinct from "no minor" (nullopt).
std::optional<StandardMinorModel> find_k2t_minor(const Graph& g, int t,
                                                 const OracleOptions& opt = {});

// Variant rooted at x in R1 and y in R2; t >= 1.
std::optional<StandardMinorModel> find_rooted_k2t_minor(
    const Graph& g, int x, int y, int t, const OracleOptions& opt = {});

// Checks all StandardMinorModel invariants within g, plus root membership
// when roots are given.
bool verify_model(const Graph& g, const StandardMinorModel& m,
                  std::optional<std::pair<int, int>> roots = std::nullopt);

// True iff g has a K_4 minor (equivalently, some block is not
// series-parallel); decided by treewidth-2 reduction.
bool has_k4_minor(const Graph& g);

// Brute-force H-minor test for small fixed H; test support for the
// planarity and outerplanarity cross-checks.
bool has_fixed_minor(const Graph& g, const Graph& h);

}  // namespace k24

#endif  // K24_MINOR_ORACLE_HPP
