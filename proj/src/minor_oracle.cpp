#include "k24/minor_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace k24 {

namespace {

using u64 = std::uint64_t;

std::vector<int> bits_to_vector(u64 bits) {
  std::vector<int> out;
  while (bits) {
    out.push_back(__builtin_ctzll(bits));
    bits &= bits - 1;
  }
  return out;
}

// Exhaustive search for two disjoint connected sets with t common outside
// neighbors.  Connected sets are enumerated over a canonical expansion
// tree (each set generated exactly once); symmetry between R1 and R2 is
// broken by min(R1) < min(R2) in the unrooted case.
struct MinorSearch {
  int n = 0;
  int t = 0;
  u64 rows[64] = {};
  u64 all = 0;
  u64 budget = 0;
  u64 steps = 0;
  bool rooted = false;
  int root_x = -1, root_y = -1;
  std::optional<StandardMinorModel> result;

  explicit MinorSearch(const Graph& g) : n(g.order()) {
    if (n > 64) throw GraphError("minor oracle requires order <= 64");
    for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
    all = n == 64 ? ~u64{0} : (u64{1} << n) - 1;
  }

  void tick() {
    if (++steps > budget) throw BudgetExceededError(budget);
  }

  // Phase 2: grow R2 inside `allowed`, looking for t usable vertices of A.
  // `a` is N(R1) \ R1.  Returns true when a model was found.
  bool grow_r2(u64 r1, u64 a, u64 r2, u64 nb2, u64 ext, u64 allowed,
               int max_size) {
    tick();
    u64 usable = a & ~r2 & nb2;
    if (__builtin_popcountll(usable) >= t) {
      u64 s = 0;
      for (int k = 0; k < t; ++k) {
        u64 low = usable & (~usable + 1);
        s |= low;
        usable ^= low;
      }
      StandardMinorModel m;
      m.r1 = bits_to_vector(r1);
      m.r2 = bits_to_vector(r2);
      m.s = bits_to_vector(s);
      m.t = t;
      result = std::move(m);
      return true;
    }
    if (__builtin_popcountll(r2) >= max_size) return false;
    // Upper bound: a-vertices already usable, or still reachable because
    // some unused allowed vertex could join R2 next to them.
    u64 avail = allowed & ~r2;
    u64 maybe = usable;
    u64 candidates = a & ~r2 & ~nb2;
    while (candidates) {
      int v = __builtin_ctzll(candidates);
      candidates &= candidates - 1;
      if (rows[v] & avail) maybe |= u64{1} << v;
    }
    if (__builtin_popcountll(maybe) < t) return false;

    u64 cand = ext;
    u64 banned = 0;
    while (cand) {
      u64 low = cand & (~cand + 1);
      int v = __builtin_ctzll(cand);
      cand ^= low;
      u64 nr2 = r2 | low;
      u64 next_ext = (ext | (rows[v] & allowed)) & ~nr2 & ~banned;
      if (grow_r2(r1, a, nr2, nb2 | rows[v], next_ext, allowed & ~banned,
                  max_size))
        return true;
      banned |= low;
    }
    return false;
  }

  bool start_r2(u64 r1, u64 a) {
    int max_size = n - t - __builtin_popcountll(r1);
    if (max_size < 1) return false;
    if (rooted) {
      u64 allowed = all & ~r1;
      u64 seed = u64{1} << root_y;
      return grow_r2(r1, a, seed, rows[root_y], rows[root_y] & allowed & ~seed,
                     allowed, max_size);
    }
    int min1 = __builtin_ctzll(r1);
    for (int seed = min1 + 1; seed < n; ++seed) {
      if (r1 & (u64{1} << seed)) continue;
      // Sets with minimum vertex = seed.
      u64 allowed = all & ~r1;
      allowed &= ~((u64{1} << seed) - 1);  // drop bits < seed
      u64 sd = u64{1} << seed;
      if (grow_r2(r1, a, sd, rows[seed], rows[seed] & allowed & ~sd, allowed,
                  max_size))
        return true;
    }
    return false;
  }

  // Phase 1: grow R1.
  bool grow_r1(u64 r1, u64 nb1, u64 ext, u64 allowed, int max_size) {
    tick();
    u64 a = nb1 & ~r1;
    if (rooted) a &= ~(u64{1} << root_y);
    if (__builtin_popcountll(a) >= t) {
      if (start_r2(r1, a)) return true;
    }
    if (__builtin_popcountll(r1) >= max_size) return false;
    u64 cand = ext;
    u64 banned = 0;
    while (cand) {
      u64 low = cand & (~cand + 1);
      int v = __builtin_ctzll(cand);
      cand ^= low;
      u64 nr1 = r1 | low;
      u64 next_ext = (ext | (rows[v] & allowed)) & ~nr1 & ~banned;
      if (grow_r1(nr1, nb1 | rows[v], next_ext, allowed & ~banned, max_size))
        return true;
      banned |= low;
    }
    return false;
  }

  bool run() {
    int max_size = n - t - 1;
    if (max_size < 1 || n < t + 2) return false;
    if (rooted) {
      u64 allowed = all & ~(u64{1} << root_y);
      u64 seed = u64{1} << root_x;
      return grow_r1(seed, rows[root_x], rows[root_x] & allowed & ~seed,
                     allowed, max_size);
    }
    for (int seed = 0; seed < n; ++seed) {
      u64 allowed = all & ~((u64{1} << seed) - 1);
      u64 sd = u64{1} << seed;
      if (grow_r1(sd, rows[seed], rows[seed] & allowed & ~sd, allowed,
                  max_size))
        return true;
    }
    return false;
  }
};

}  // namespace

std::uint64_t default_oracle_budget() {
  static const std::uint64_t cached = [] {
    if (const char* env = std::getenv("K24_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{80'000'000};
  }();
  return cached;
}

std::optional<StandardMinorModel> find_k2t_minor(const Graph& g, int t,
                                                 const OracleOptions& opt) {
  if (t < 2) throw GraphError("find_k2t_minor requires t >= 2");
  MinorSearch search(g);
  search.t = t;
  search.budget = opt.budget ? opt.budget : default_oracle_budget();
  search.run();
  return search.result;
}

std::optional<StandardMinorModel> find_rooted_k2t_minor(
    const Graph& g, int x, int y, int t, const OracleOptions& opt) {
  if (t < 1) throw GraphError("find_rooted_k2t_minor requires t >= 1");
  if (x == y) throw GraphError("find_rooted_k2t_minor requires x != y");
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
    throw GraphError("root vertex out of range");
  MinorSearch search(g);
  search.t = t;
  search.budget = opt.budget ? opt.budget : default_oracle_budget();
  search.rooted = true;
  search.root_x = x;
  search.root_y = y;
  search.run();
  return search.result;
}

bool verify_model(const Graph& g, const StandardMinorModel& m,
                  std::optional<std::pair<int, int>> roots) {
  const int n = g.order();
  auto in_range = [&](const std::vector<int>& vs) {
    for (int v : vs)
      if (v < 0 || v >= n) return false;
    return true;
  };
  if (!in_range(m.r1) || !in_range(m.r2) || !in_range(m.s)) return false;
  if (m.r1.empty() || m.r2.empty()) return false;
  if (static_cast<int>(m.s.size()) != m.t) return false;
  std::vector<int> seen(n, 0);
  for (int v : m.r1) seen[v] |= 1;
  for (int v : m.r2) seen[v] |= 2;
  for (int v : m.s) seen[v] |= 4;
  for (int v = 0; v < n; ++v)
    if (seen[v] != 0 && seen[v] != 1 && seen[v] != 2 && seen[v] != 4)
      return false;  // pairwise disjoint, no duplicates across parts
  // Duplicates within one part:
  if (std::set<int>(m.r1.begin(), m.r1.end()).size() != m.r1.size()) return false;
  if (std::set<int>(m.r2.begin(), m.r2.end()).size() != m.r2.size()) return false;
  if (std::set<int>(m.s.begin(), m.s.end()).size() != m.s.size()) return false;

  auto connected_part = [&](const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    return is_connected(induced_subgraph(g, sorted));
  };
  if (!connected_part(m.r1) || !connected_part(m.r2)) return false;

  auto adjacent_to = [&](int v, const std::vector<int>& part) {
    for (int w : part)
      if (g.has_edge(v, w)) return true;
    return false;
  };
  for (int s : m.s)
    if (!adjacent_to(s, m.r1) || !adjacent_to(s, m.r2)) return false;

  if (roots) {
    auto [x, y] = *roots;
    if (std::find(m.r1.begin(), m.r1.end(), x) == m.r1.end()) return false;
    if (std::find(m.r2.begin(), m.r2.end(), y) == m.r2.end()) return false;
  }
  return true;
}

bool has_k4_minor(const Graph& g) {
  // Treewidth-2 reduction: repeatedly delete degree <= 1 vertices and
  // suppress degree-2 vertices.  Empty result <=> no K_4 minor.
  const int n = g.order();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  std::vector<bool> alive(n, n > 0);
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
    ++deg[e.u];
    ++deg[e.v];
  }
  int remaining = n;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || deg[v] > 2) continue;
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (alive[w] && adj[v][w]) nb.push_back(w);
      for (int w : nb) {
        adj[v][w] = adj[w][v] = 0;
        --deg[w];
      }
      if (nb.size() == 2 && !adj[nb[0]][nb[1]]) {
        adj[nb[0]][nb[1]] = adj[nb[1]][nb[0]] = 1;
        ++deg[nb[0]];
        ++deg[nb[1]];
      }
      alive[v] = false;
      deg[v] = 0;
      --remaining;
      progress = true;
    }
  }
  return remaining > 0;
}

namespace {

// Branch-set search for a fixed small pattern H.
struct FixedMinorSearch {
  const Graph& g;
  const Graph& h;
  int n, hn;
  std::vector<u64> branch;  // branch sets built so far
  u64 used = 0;

  FixedMinorSearch(const Graph& gg, const Graph& hh)
      : g(gg), h(hh), n(gg.order()), hn(hh.order()) {}

  bool sets_adjacent(u64 a, u64 b) const {
    u64 rem = a;
    while (rem) {
      int v = __builtin_ctzll(rem);
      rem &= rem - 1;
      if (g.row64(v) & b) return true;
    }
    return false;
  }

  bool feasible_so_far() const {
    int i = static_cast<int>(branch.size()) - 1;
    for (int j = 0; j < i; ++j)
      if (h.has_edge(j, i) && !sets_adjacent(branch[j], branch[i]))
        return false;
    return true;
  }

  bool place(int i) {
    if (i == hn) return true;
    // Enumerate connected candidate sets over unused vertices.
    int spare = n - __builtin_popcountll(used) - (hn - i - 1);
    if (spare < 1) return false;
    u64 free_bits = ((n == 64 ? ~u64{0} : (u64{1} << n) - 1)) & ~used;
    u64 seeds = free_bits;
    while (seeds) {
      int s = __builtin_ctzll(seeds);
      seeds &= seeds - 1;
      if (grow(i, u64{1} << s, (g.row64(s) & free_bits) & ~(u64{1} << s),
               free_bits, 0, spare))
        return true;
    }
    return false;
  }

  bool grow(int i, u64 set, u64 ext, u64 free_bits, u64 banned, int max_size) {
    branch.push_back(set);
    u64 saved_used = used;
    used |= set;
    bool ok = feasible_so_far() && place(i + 1);
    used = saved_used;
    branch.pop_back();
    if (ok) return true;
    if (__builtin_popcountll(set) >= max_size) return false;
    u64 cand = ext & ~banned;
    u64 local_ban = banned;
    while (cand) {
      u64 low = cand & (~cand + 1);
      int v = __builtin_ctzll(cand);
      cand ^= low;
      if (grow(i, set | low, (ext | (g.row64(v) & free_bits)) & ~(set | low) & ~local_ban,
               free_bits, local_ban, max_size))
        return true;
      local_ban |= low;
      cand &= ~local_ban;
    }
    return false;
  }
};

}  // namespace

bool has_fixed_minor(const Graph& g, const Graph& h) {
  if (g.order() > 64) throw GraphError("has_fixed_minor requires order <= 64");
  if (h.order() == 0) return true;
  if (g.order() < h.order() || g.edge_count() < h.edge_count()) return false;
  FixedMinorSearch search(g, h);
  return search.place(0);
}

}  // namespace k24
