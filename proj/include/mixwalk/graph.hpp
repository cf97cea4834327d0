#pragma once
#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixwalk/bits.hpp"

namespace mixwalk {

// Conductances are compared against sharp lemma bounds, so they are exact
// rationals; graph data is small integers throughout.
using Rat = boost::rational<long long>;

using VSet = std::vector<int>;  // sorted vertex list

// Undirected multigraph with per-vertex self-loop counts. A self-loop adds 1
// to the degree of its vertex. "Nice" means every vertex carries exactly as
// many self-loops as non-loop edge endpoints, which makes the standard walk
// the lazy walk on the loop-free graph.
struct MultiGraph {
  int N = 0;
  std::vector<std::vector<int>> mult;  // symmetric; mult[v][v] unused
  std::vector<int> loops;

  explicit MultiGraph(int n = 0)
      : N(n), mult(n, std::vector<int>(n, 0)), loops(n, 0) {}

  void add_edge(int u, int v, int m = 1) {
    if (u == v) throw std::runtime_error("use loops[] for self-loops");
    mult[u][v] += m;
    mult[v][u] += m;
  }
  int nonloop_deg(int v) const {
    int d = 0;
    for (int u = 0; u < N; ++u) d += mult[v][u];
    return d;
  }
  int deg(int v) const { return nonloop_deg(v) + loops[v]; }
  int d_max() const;
  long long vol_all() const;  // sum of degrees
  long long edge_total() const;  // non-loop edges + loops, each loop once

  bool is_nice() const;
  void validate() const;
};

MultiGraph make_nice(MultiGraph g);

// vol, one- and two-sided conductance of a vertex set within G
long long vol(const MultiGraph& g, const VSet& S);
long long cut_edges(const MultiGraph& g, const VSet& S);
Rat psi(const MultiGraph& g, const VSet& S);
Rat phi_set(const MultiGraph& g, const VSet& S);

// induced subgraph on S (vertices renumbered to 0..|S|-1 in S order)
MultiGraph induced(const MultiGraph& g, const VSet& S);
// one-sided / two-sided conductance of T-subsets computed inside G[T]
Rat psi_sub(const MultiGraph& g, const VSet& T, const VSet& S);
Rat phi_sub(const MultiGraph& g, const VSet& T, const VSet& S);

// min over nonempty proper cuts; exhaustive, 2 <= N <= 22. Single-vertex
// graphs have no cuts and count as perfect expanders (returns 1).
Rat phi_graph_bruteforce(const MultiGraph& g);

bool connected(const MultiGraph& g);

// one lazy-free walk step by half-edge choice (loops stay put); used by the
// Monte-Carlo replays that audit the exact computations
int simulate_step(const MultiGraph& g, int v, Rng& rng);

// Family of vertex subsets covering V. theta = min_i Phi(G[A_i]).
struct Cover {
  std::vector<VSet> sets;

  bool is_disjoint() const;
  void validate(const MultiGraph& g) const;  // union must be V
  Rat theta(const MultiGraph& g) const;
  // indices sorted by |A_i| descending, ties by lower original index
  std::vector<int> by_size_desc() const;
};

}  // namespace mixwalk
