#pragma once
#include "mixwalk/graph.hpp"
#include "mixwalk/term.hpp"

namespace mixwalk {

// s distinct uniformly random width-k terms
Dnf gen_random_exact_dnf(int n, int k, int s, Rng& rng);

// connected multigraph: random spanning tree, extra random parallel edges,
// random self-loops (caller decides whether to nice it)
struct GraphGenOpts {
  int extra_edges = -1;  // <0: about N, chosen at random
  int max_mult = 2;
  int max_loops = 2;
};
MultiGraph gen_connected_multigraph(int N, Rng& rng, GraphGenOpts opts = {});

// cover by s connected-induced, possibly overlapping sets (theta > 0)
Cover gen_cover_connected(const MultiGraph& g, int s, Rng& rng);

// disjoint cover: cut s-1 random edges of a random spanning tree;
// sets are returned sorted by size descending
Cover gen_partition_connected(const MultiGraph& g, int s, Rng& rng);

// Reduced analog of the trees-into-expanders graph: a two-vertex bridge
// (parallel edges), one tree per bridge vertex, each tree's leaves wired
// round-robin into its own hypercube, then niced. With tree_depth = 1 and
// dims = (2, 1) the graph is exactly 3-regular before nicing, so the walk's
// endpoint distribution within a side converges to uniform on that side and
// the bridge-start local-mixing probability plateaus near the side's mass.
struct WackyFixture {
  MultiGraph g;
  Cover c;   // two sets: bridge vertex + tree + cube per side
  int root;  // bridge vertex on side 0
};
WackyFixture gen_wacky_fixture(int tree_depth, std::pair<int, int> expander_dims);

}  // namespace mixwalk
