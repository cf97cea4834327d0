#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include "mixwalk/graph.hpp"

namespace mixwalk {

// arbitrary-precision rationals: substochastic matrix powers have
// denominators that grow like (max degree)^t
using BigRat = boost::multiprecision::cpp_rational;

using VertexDistribution = std::vector<double>;

void check_distribution(const VertexDistribution& p);

// column-stochastic walk operator W = A D^{-1} (self-loops on the diagonal)
std::vector<std::vector<double>> walk_operator(const MultiGraph& g);

// exact W^t x0 by repeated application
VertexDistribution walk_distribution(const MultiGraph& g,
                                     const VertexDistribution& x0, long t);

// pi(v) = deg(v) / vol(V); requires connectivity
VertexDistribution stationary(const MultiGraph& g);

double tv(const VertexDistribution& p, const VertexDistribution& q);

// merge mass per partition block; blocks must cover the support exactly once
VertexDistribution coarsen(const VertexDistribution& p,
                           const std::vector<std::vector<int>>& partition);

// both sides of the conditional-TV inequality
//   tv(p|E, q|E) <= 2 tv(p,q) / p(E)
std::pair<double, double> tv_conditioning_check(const VertexDistribution& p,
                                                const VertexDistribution& q,
                                                const std::vector<int>& E);

// least t with max_v tv(W^t e_v, pi) <= eps
long mixing_time_exact(const MultiGraph& g, double eps, long cap = 2'000'000);

// probability the walk started from `start` (supported in S) stays inside S
// for all of steps 1..t, via the substochastic restriction of W to S
double escape_stay_probability(const MultiGraph& g, const VSet& S,
                               const VertexDistribution& start, long t);

// same quantity started from pi_S (stationary restricted to S), exactly
BigRat escape_stay_exact(const MultiGraph& g, const VSet& S, long t);

}  // namespace mixwalk
