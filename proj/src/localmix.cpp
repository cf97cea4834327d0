#include "mixwalk/localmix.hpp"

#include <cmath>

namespace mixwalk {

LocalMixResult local_mixing_oracle(const MultiGraph& g, const Cover& c, int v,
                                   long t) {
  c.validate(g);
  if (v < 0 || v >= g.N) throw std::runtime_error("start vertex out of range");
  LocalMixResult r;
  VertexDistribution x0(g.N, 0.0);
  x0[v] = 1.0;
  r.mu = walk_distribution(g, x0, t);

  int s = int(c.sets.size());
  r.p.resize(s);
  for (int i = 0; i < s; ++i) {
    double mn = r.mu[c.sets[i][0]];
    for (int u : c.sets[i]) mn = std::min(mn, r.mu[u]);
    r.p[i] = mn * double(c.sets[i].size());
    if (r.best < 0 || r.p[i] > r.p[r.best]) r.best = i;
  }
  r.p_star = r.p[r.best];

  r.accept.assign(g.N, 0.0);
  const VSet& A = c.sets[r.best];
  double mn = r.p_star / double(A.size());
  if (mn > 0) {
    for (int u : A) r.accept[u] = mn / r.mu[u];
    // conditional law is uniform by construction; compute its TV literally
    double tvacc = 0;
    for (int u : A) tvacc += std::abs(r.mu[u] * r.accept[u] / r.p_star - 1.0 / A.size());
    r.tv_best = tvacc / 2;
  } else {
    r.tv_best = 1.0;  // impossible event, nothing to condition on
  }
  return r;
}

ReplayResult replay_local_mixing(const MultiGraph& g, int v, long t,
                                 const std::vector<double>& accept,
                                 std::uint64_t trials, Rng& rng) {
  if (int(accept.size()) != g.N) throw std::runtime_error("accept size != N");
  ReplayResult out;
  std::vector<std::uint64_t> counts(g.N, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t i = 0; i < trials; ++i) {
    int u = v;
    for (long step = 0; step < t; ++step) u = simulate_step(g, u, rng);
    if (accept[u] > 0 && unit(rng) < accept[u]) {
      ++counts[u];
      ++out.accepted;
    }
  }
  out.accept_freq = double(out.accepted) / double(trials);
  out.hist.assign(g.N, 0.0);
  if (out.accepted)
    for (int u = 0; u < g.N; ++u) out.hist[u] = double(counts[u]) / double(out.accepted);
  return out;
}

}  // namespace mixwalk
