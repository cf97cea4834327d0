#include <algorithm>
#include <cmath>

#include "mixwalk/cover_ops.hpp"

namespace mixwalk {

Disjointification disjointify(const MultiGraph& g, const Cover& c) {
  c.validate(g);
  int s = int(c.sets.size());
  Disjointification out;
  out.H = MultiGraph(g.N * s);
  out.orig.resize(g.N * s);
  auto copy_id = [s](int v, int i) { return v * s + i; };
  for (int v = 0; v < g.N; ++v)
    for (int i = 0; i < s; ++i) out.orig[copy_id(v, i)] = v;

  for (int u = 0; u < g.N; ++u) {
    for (int v = u + 1; v < g.N; ++v) {
      int m = g.mult[u][v];
      if (!m) continue;
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) out.H.add_edge(copy_id(u, a), copy_id(v, b), m);
    }
    // s * (non-loop degree) loops per copy: each copy then has exactly as
    // many loops as edges to other vertices (H is nice whatever G was), and
    // the walk on H projects onto the walk on G under copy-forgetting --
    // P(loop) = 1/2 of the copy's half-edges matches P(loop) at u in nice G.
    for (int i = 0; i < s; ++i) out.H.loops[copy_id(u, i)] = s * g.nonloop_deg(u);
  }

  // membership lists: which cover sets contain v
  std::vector<std::vector<int>> owner(g.N);
  for (int i = 0; i < s; ++i)
    for (int v : c.sets[i]) owner[v].push_back(i);

  out.B.sets.assign(s, {});
  for (int v = 0; v < g.N; ++v) {
    const auto& own = owner[v];
    int c_v = int(own.size());
    int base = s / c_v, extra = s % c_v;  // earlier owners take one more
    int next_copy = 0;
    for (int j = 0; j < c_v; ++j) {
      int take = base + (j < extra ? 1 : 0);
      for (int t = 0; t < take; ++t)
        out.B.sets[own[j]].push_back(copy_id(v, next_copy++));
    }
  }
  for (auto& set : out.B.sets) std::sort(set.begin(), set.end());
  // every owner takes at least floor(s / c_v) >= 1 copies, so each B_i holds
  // at least one copy of every vertex of A_i and in particular is nonempty
  out.B.validate(out.H);
  if (!out.B.is_disjoint()) throw std::logic_error("disjointify produced overlap");
  return out;
}

namespace {
long long cross_edges(const MultiGraph& g, const VSet& A, const VSet& B) {
  long long c = 0;
  for (int u : A)
    for (int v : B) c += g.mult[u][v];
  return c;
}
}  // namespace

ThickGraph thick_graph(const MultiGraph& g, const Cover& c, int ell, Rat lambda) {
  c.validate(g);
  if (!c.is_disjoint()) throw std::runtime_error("thick graph needs a disjoint cover");
  int s = int(c.sets.size());
  for (int i = 0; i + 1 < s; ++i)
    if (c.sets[i].size() < c.sets[i + 1].size())
      throw std::runtime_error("cover sets must be sorted by size descending");
  if (ell < 0 || lambda <= 0) throw std::runtime_error("bad thickness parameters");

  ThickGraph tg;
  tg.s = s;
  tg.ell = ell;
  tg.lambda = lambda;
  Rat thr((long long)c.sets[0].size());
  for (int i = 0; i < ell; ++i) thr *= lambda;
  tg.threshold = thr;
  tg.w.assign(s, std::vector<long long>(s, 0));
  tg.present.assign(s, std::vector<char>(s, 0));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      long long w = cross_edges(g, c.sets[i], c.sets[j]);
      tg.w[i][j] = tg.w[j][i] = w;
      tg.present[i][j] = tg.present[j][i] = (Rat(w) >= thr);
    }
  return tg;
}

std::vector<int> thick_component(const ThickGraph& tg, int i) {
  if (i < 0 || i >= tg.s) throw std::runtime_error("set index out of range");
  std::vector<char> seen(tg.s, 0);
  std::vector<int> stack{i}, comp;
  seen[i] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    comp.push_back(a);
    for (int b = 0; b < tg.s; ++b)
      if (tg.present[a][b] && !seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

Rat revealed_conductance(const MultiGraph& g, const Cover& c, int ell, Rat lambda,
                         const std::vector<int>& I) {
  ThickGraph tg = thick_graph(g, c, ell, lambda);
  if (I.empty() || int(I.size()) >= tg.s)
    throw std::runtime_error("I must be a nonempty proper index set");
  std::vector<char> in(tg.s, 0);
  long long sizeAI = 0;
  for (int i : I) {
    if (i < 0 || i >= tg.s || in[i]) throw std::runtime_error("bad index set");
    in[i] = 1;
    sizeAI += (long long)c.sets[i].size();
  }
  Rat num(0);
  for (int i = 0; i < tg.s; ++i) {
    if (!in[i]) continue;
    for (int j = 0; j < tg.s; ++j) {
      if (in[j] || j == i) continue;
      if (tg.present[i][j])
        num += Rat(tg.w[i][j]);
      else
        num += tg.threshold;
    }
  }
  return num / Rat(sizeAI);
}

double lambda_param(int s, int d_max, double theta, int N, double eps,
                    double base_const, double exponent) {
  if (s < 1 || d_max < 1 || theta <= 0 || N < 2 || eps <= 0 || eps >= 0.5)
    throw std::runtime_error("lambda_param: bad arguments");
  double inner =
      base_const * s * d_max * (1.0 / theta) * std::log(double(N)) * std::log(1.0 / eps);
  return std::pow(inner, -exponent);
}

}  // namespace mixwalk
