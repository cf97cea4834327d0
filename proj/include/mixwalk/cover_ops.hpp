#pragma once
#include "mixwalk/graph.hpp"

namespace mixwalk {

// s-fold vertex-copying construction turning an overlapping cover into a
// disjoint one. Copy (v, c) becomes H-vertex v*s + c. Every copy-pair of the
// endpoints of a G-edge gets one H-edge per original parallel edge; G's
// self-loops are not copied as edges; each copy carries s * deg_G(v)
// self-loops. The copies of v are split as evenly as possible among the B_i
// with v in A_i, earlier sets taking the remainder.
struct Disjointification {
  MultiGraph H;
  Cover B;
  std::vector<int> orig;  // H-vertex -> G-vertex
};

Disjointification disjointify(const MultiGraph& g, const Cover& c);

// Meta-graph on the cover's sets at level ell: the pair (i, j) is an edge iff
// |E(A_i, A_j)| >= lambda^ell * |A_1| with A_1 the largest set; edge weight is
// the exact cross-edge count.
struct ThickGraph {
  int s = 0;
  int ell = 0;
  Rat lambda{1};
  Rat threshold{0};                    // lambda^ell * |A_1|
  std::vector<std::vector<long long>> w;  // cross-edge counts, all pairs
  std::vector<std::vector<char>> present;
};

// requires a disjoint cover whose sets are sorted by size descending
ThickGraph thick_graph(const MultiGraph& g, const Cover& c, int ell, Rat lambda);

std::vector<int> thick_component(const ThickGraph& tg, int i);

// nu_ell(I): thick cross weights, plus the threshold charged once per
// non-thick cross pair, divided by |A_I|. Upper-bounds Psi(A_I) and is
// non-increasing in ell.
Rat revealed_conductance(const MultiGraph& g, const Cover& c, int ell, Rat lambda,
                         const std::vector<int>& I);

// (base * s * d_max * (1/theta) * ln N * ln(1/eps))^(-exponent)
double lambda_param(int s, int d_max, double theta, int N, double eps,
                    double base_const = 1000.0, double exponent = 1000.0);

}  // namespace mixwalk
