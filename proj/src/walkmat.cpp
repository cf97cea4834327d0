#include "mixwalk/walkmat.hpp"

#include <cmath>

namespace mixwalk {

void check_distribution(const VertexDistribution& p) {
  double s = 0;
  for (double x : p) {
    if (x < 0) throw std::runtime_error("negative probability");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-12) throw std::runtime_error("mass != 1");
}

std::vector<std::vector<double>> walk_operator(const MultiGraph& g) {
  std::vector<std::vector<double>> W(g.N, std::vector<double>(g.N, 0.0));
  for (int j = 0; j < g.N; ++j) {
    int d = g.deg(j);
    if (d == 0) throw std::runtime_error("walk operator: zero-degree vertex");
    for (int i = 0; i < g.N; ++i)
      if (i != j) W[i][j] = double(g.mult[i][j]) / d;
    W[j][j] = double(g.loops[j]) / d;
  }
  return W;
}

namespace {
VertexDistribution step_apply(const std::vector<std::vector<double>>& W,
                         const VertexDistribution& x) {
  int n = int(W.size());
  VertexDistribution y(n, 0.0);
  for (int j = 0; j < n; ++j) {
    if (x[j] == 0.0) continue;
    for (int i = 0; i < n; ++i) y[i] += W[i][j] * x[j];
  }
  return y;
}
}  // namespace

VertexDistribution walk_distribution(const MultiGraph& g,
                                     const VertexDistribution& x0, long t) {
  if (int(x0.size()) != g.N) throw std::runtime_error("distribution size != N");
  check_distribution(x0);
  auto W = walk_operator(g);
  VertexDistribution x = x0;
  for (long i = 0; i < t; ++i) x = step_apply(W, x);
  return x;
}

VertexDistribution stationary(const MultiGraph& g) {
  if (!connected(g)) throw std::runtime_error("stationary needs a connected graph");
  double volV = double(g.vol_all());
  VertexDistribution pi(g.N);
  for (int v = 0; v < g.N; ++v) pi[v] = g.deg(v) / volV;
  return pi;
}

double tv(const VertexDistribution& p, const VertexDistribution& q) {
  if (p.size() != q.size()) throw std::runtime_error("tv: size mismatch");
  double s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return s / 2;
}

VertexDistribution coarsen(const VertexDistribution& p,
                           const std::vector<std::vector<int>>& partition) {
  std::vector<char> hit(p.size(), 0);
  VertexDistribution out;
  out.reserve(partition.size());
  for (const auto& block : partition) {
    double m = 0;
    for (int i : block) {
      if (i < 0 || i >= int(p.size()) || hit[i])
        throw std::runtime_error("coarsen: bad partition");
      hit[i] = 1;
      m += p[i];
    }
    out.push_back(m);
  }
  for (char h : hit)
    if (!h) throw std::runtime_error("coarsen: partition misses support");
  return out;
}

std::pair<double, double> tv_conditioning_check(const VertexDistribution& p,
                                                const VertexDistribution& q,
                                                const std::vector<int>& E) {
  if (p.size() != q.size()) throw std::runtime_error("size mismatch");
  double pe = 0, qe = 0;
  for (int i : E) {
    pe += p.at(i);
    qe += q.at(i);
  }
  if (pe <= 0) throw std::runtime_error("conditioning event has p-mass 0");
  double lhs = 0;
  if (qe > 0) {
    for (int i : E) lhs += std::abs(p[i] / pe - q[i] / qe);
    lhs /= 2;
  } else {
    lhs = 1.0;  // q|E undefined mass: treat as maximally far
  }
  return {lhs, 2.0 * tv(p, q) / pe};
}

long mixing_time_exact(const MultiGraph& g, double eps, long cap) {
  if (eps >= 1.0) return 0;
  auto pi = stationary(g);
  // evolve all point-mass columns at once
  auto W = walk_operator(g);
  std::vector<VertexDistribution> cols(g.N);
  for (int v = 0; v < g.N; ++v) {
    cols[v].assign(g.N, 0.0);
    cols[v][v] = 1.0;
  }
  for (long t = 0;; ++t) {
    double worst = 0;
    for (int v = 0; v < g.N; ++v) worst = std::max(worst, tv(cols[v], pi));
    if (worst <= eps) return t;
    if (t >= cap) throw std::runtime_error("mixing time exceeds cap");
    for (int v = 0; v < g.N; ++v) cols[v] = step_apply(W, cols[v]);
  }
}

double escape_stay_probability(const MultiGraph& g, const VSet& S,
                               const VertexDistribution& start, long t) {
  if (int(start.size()) != g.N) throw std::runtime_error("size mismatch");
  check_distribution(start);
  std::vector<char> m(g.N, 0);
  for (int v : S) m[v] = 1;
  for (int v = 0; v < g.N; ++v)
    if (start[v] > 0 && !m[v]) throw std::runtime_error("start mass outside S");
  int k = int(S.size());
  VertexDistribution x(k);
  for (int a = 0; a < k; ++a) x[a] = start[S[a]];
  for (long step = 0; step < t; ++step) {
    VertexDistribution y(k, 0.0);
    for (int b = 0; b < k; ++b) {
      if (x[b] == 0.0) continue;
      int j = S[b], d = g.deg(j);
      if (d == 0) throw std::runtime_error("zero-degree vertex in S");
      for (int a = 0; a < k; ++a) {
        int i = S[a];
        double w = (i == j ? g.loops[j] : g.mult[i][j]) / double(d);
        y[a] += w * x[b];
      }
    }
    x = y;
  }
  double stay = 0;
  for (double v : x) stay += v;
  return stay;
}

BigRat escape_stay_exact(const MultiGraph& g, const VSet& S, long t) {
  int k = int(S.size());
  if (k == 0) throw std::runtime_error("empty S");
  long long volS = vol(g, S);
  if (volS == 0) throw std::runtime_error("S has volume 0");
  std::vector<BigRat> x(k);
  for (int a = 0; a < k; ++a) x[a] = BigRat(g.deg(S[a]), volS);  // pi_S
  for (long step = 0; step < t; ++step) {
    std::vector<BigRat> y(k, BigRat(0));
    for (int b = 0; b < k; ++b) {
      if (x[b] == 0) continue;
      int j = S[b], d = g.deg(j);
      for (int a = 0; a < k; ++a) {
        int i = S[a];
        long long w = (i == j ? g.loops[j] : g.mult[i][j]);
        if (w) y[a] += BigRat(w, d) * x[b];
      }
    }
    x = std::move(y);
  }
  BigRat stay(0);
  for (const BigRat& v : x) stay += v;
  return stay;
}

}  // namespace mixwalk
