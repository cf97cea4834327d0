#include "mixwalk/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mixwalk {

int MultiGraph::d_max() const {
  int m = 0;
  for (int v = 0; v < N; ++v) m = std::max(m, deg(v));
  return m;
}

long long MultiGraph::vol_all() const {
  long long s = 0;
  for (int v = 0; v < N; ++v) s += deg(v);
  return s;
}

long long MultiGraph::edge_total() const {
  long long s = 0;
  for (int v = 0; v < N; ++v) {
    s += loops[v];
    for (int u = v + 1; u < N; ++u) s += mult[v][u];
  }
  return s;
}

bool MultiGraph::is_nice() const {
  for (int v = 0; v < N; ++v)
    if (loops[v] != nonloop_deg(v)) return false;
  return true;
}

void MultiGraph::validate() const {
  if (int(mult.size()) != N || int(loops.size()) != N)
    throw std::runtime_error("graph shape mismatch");
  for (int v = 0; v < N; ++v) {
    if (loops[v] < 0) throw std::runtime_error("negative loop count");
    if (mult[v][v] != 0) throw std::runtime_error("diagonal multiplicity must be 0");
    for (int u = 0; u < N; ++u) {
      if (mult[v][u] < 0) throw std::runtime_error("negative multiplicity");
      if (mult[v][u] != mult[u][v]) throw std::runtime_error("asymmetric multiplicity");
    }
  }
}

MultiGraph make_nice(MultiGraph g) {
  for (int v = 0; v < g.N; ++v) g.loops[v] = g.nonloop_deg(v);
  return g;
}

namespace {
std::vector<char> in_set(const MultiGraph& g, const VSet& S) {
  std::vector<char> m(g.N, 0);
  for (int v : S) {
    if (v < 0 || v >= g.N) throw std::runtime_error("vertex out of range");
    if (m[v]) throw std::runtime_error("duplicate vertex in set");
    m[v] = 1;
  }
  return m;
}
}  // namespace

long long vol(const MultiGraph& g, const VSet& S) {
  long long s = 0;
  for (int v : S) s += g.deg(v);
  return s;
}

long long cut_edges(const MultiGraph& g, const VSet& S) {
  auto m = in_set(g, S);
  long long c = 0;
  for (int v : S)
    for (int u = 0; u < g.N; ++u)
      if (!m[u]) c += g.mult[v][u];
  return c;
}

Rat psi(const MultiGraph& g, const VSet& S) {
  if (S.empty() || int(S.size()) == g.N)
    throw std::runtime_error("psi needs a nonempty proper subset");
  long long v = vol(g, S);
  if (v == 0) throw std::runtime_error("psi: set has volume 0");
  return Rat(cut_edges(g, S), v);
}

Rat phi_set(const MultiGraph& g, const VSet& S) {
  auto m = in_set(g, S);
  VSet Sc;
  for (int v = 0; v < g.N; ++v)
    if (!m[v]) Sc.push_back(v);
  return std::max(psi(g, S), psi(g, Sc));
}

MultiGraph induced(const MultiGraph& g, const VSet& S) {
  auto m = in_set(g, S);
  (void)m;
  MultiGraph h(int(S.size()));
  for (int a = 0; a < h.N; ++a) {
    h.loops[a] = g.loops[S[a]];
    for (int b = a + 1; b < h.N; ++b) {
      h.mult[a][b] = h.mult[b][a] = g.mult[S[a]][S[b]];
    }
  }
  return h;
}

namespace {
VSet relabel(const VSet& T, const VSet& S) {
  // positions of S's elements inside T (both sorted vertex lists of G)
  VSet out;
  for (int v : S) {
    auto it = std::lower_bound(T.begin(), T.end(), v);
    if (it == T.end() || *it != v)
      throw std::runtime_error("subset not contained in ambient set");
    out.push_back(int(it - T.begin()));
  }
  return out;
}
}  // namespace

Rat psi_sub(const MultiGraph& g, const VSet& T, const VSet& S) {
  return psi(induced(g, T), relabel(T, S));
}

Rat phi_sub(const MultiGraph& g, const VSet& T, const VSet& S) {
  return phi_set(induced(g, T), relabel(T, S));
}

Rat phi_graph_bruteforce(const MultiGraph& g) {
  if (g.N == 1) return Rat(1);
  if (g.N < 1 || g.N > 22)
    throw std::runtime_error("use spectral bound: N outside [1,22]");
  // enumerate cuts by subsets containing vertex 0 (phi_set is cut-symmetric)
  long long degs[22];
  for (int v = 0; v < g.N; ++v) degs[v] = g.deg(v);
  long long volV = g.vol_all();
  bool have = false;
  Rat best(0);
  for (std::uint32_t mask = 0; mask + 1 < (1u << (g.N - 1)); ++mask) {
    std::uint32_t S = (mask << 1) | 1u;  // subset containing vertex 0, proper
    long long volS = 0, cut = 0;
    for (int v = 0; v < g.N; ++v) {
      if (!((S >> v) & 1)) continue;
      volS += degs[v];
      for (int u = 0; u < g.N; ++u)
        if (!((S >> u) & 1)) cut += g.mult[v][u];
    }
    long long volC = volV - volS;
    if (volS == 0 || volC == 0) continue;  // degenerate cut: no conductance
    Rat phi = std::max(Rat(cut, volS), Rat(cut, volC));
    if (!have || phi < best) {
      best = phi;
      have = true;
    }
  }
  if (!have) throw std::runtime_error("no cut with positive volumes");
  return best;
}

bool connected(const MultiGraph& g) {
  if (g.N == 0) return false;
  std::vector<char> seen(g.N, 0);
  VSet stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.N; ++u)
      if (g.mult[v][u] > 0 && !seen[u]) {
        seen[u] = 1;
        ++cnt;
        stack.push_back(u);
      }
  }
  return cnt == g.N;
}

int simulate_step(const MultiGraph& g, int v, Rng& rng) {
  int d = g.deg(v);
  if (d == 0) return v;
  std::uniform_int_distribution<int> pick(0, d - 1);
  int r = pick(rng);
  if (r < g.loops[v]) return v;
  r -= g.loops[v];
  for (int u = 0; u < g.N; ++u) {
    if (r < g.mult[v][u]) return u;
    r -= g.mult[v][u];
  }
  throw std::logic_error("degree bookkeeping broke");
}

bool Cover::is_disjoint() const {
  std::vector<int> seen;
  for (const VSet& s : sets)
    for (int v : s) seen.push_back(v);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

void Cover::validate(const MultiGraph& g) const {
  if (sets.empty()) throw std::runtime_error("empty cover");
  std::vector<char> hit(g.N, 0);
  for (const VSet& s : sets) {
    if (s.empty()) throw std::runtime_error("empty cover set");
    if (!std::is_sorted(s.begin(), s.end()))
      throw std::runtime_error("cover sets must be sorted");
    for (int v : s) {
      if (v < 0 || v >= g.N) throw std::runtime_error("cover vertex out of range");
      hit[v] = 1;
    }
  }
  for (int v = 0; v < g.N; ++v)
    if (!hit[v]) throw std::runtime_error("cover misses vertex " + std::to_string(v));
}

Rat Cover::theta(const MultiGraph& g) const {
  Rat t(1);
  bool first = true;
  for (const VSet& s : sets) {
    Rat p = phi_graph_bruteforce(induced(g, s));
    if (first || p < t) t = p;
    first = false;
  }
  return t;
}

std::vector<int> Cover::by_size_desc() const {
  std::vector<int> idx(sets.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return sets[a].size() != sets[b].size() ? sets[a].size() > sets[b].size()
                                            : a < b;
  });
  return idx;
}

}  // namespace mixwalk
