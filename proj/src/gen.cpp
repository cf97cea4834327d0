#include "mixwalk/gen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mixwalk {

Dnf gen_random_exact_dnf(int n, int k, int s, Rng& rng) {
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("gen_random_exact_dnf: bad n");
  if (k < 0 || k > n) throw std::invalid_argument("gen_random_exact_dnf: bad k");
  if (s < 1) throw std::invalid_argument("gen_random_exact_dnf: bad s");
  // number of distinct width-k terms is C(n,k)*2^k; reject impossible requests
  double cnt = 1.0;
  for (int i = 0; i < k; ++i) cnt *= double(n - i) / double(i + 1);
  cnt *= std::pow(2.0, k);
  if (double(s) > cnt) throw std::invalid_argument("gen_random_exact_dnf: s too large for n,k");

  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  std::set<Term> picked;
  while ((int)picked.size() < s) {
    // partial Fisher-Yates: first k entries become the support
    for (int i = 0; i < k; ++i) {
      int j = i + (int)(rng() % (uint64_t)(n - i));
      std::swap(vars[i], vars[j]);
    }
    Term t{0, 0};
    for (int i = 0; i < k; ++i) {
      if (rng() & 1)
        t.pos |= 1ull << (vars[i] - 1);
      else
        t.neg |= 1ull << (vars[i] - 1);
    }
    picked.insert(t);
  }
  return Dnf{n, std::vector<Term>(picked.begin(), picked.end())};
}

MultiGraph gen_connected_multigraph(int N, Rng& rng, GraphGenOpts opts) {
  if (N < 1) throw std::invalid_argument("gen_connected_multigraph: N < 1");
  MultiGraph g(N);
  for (int v = 1; v < N; ++v) {
    int u = (int)(rng() % (uint64_t)v);
    g.add_edge(u, v, 1 + (long long)(rng() % (uint64_t)opts.max_mult));
  }
  int extra = opts.extra_edges >= 0 ? opts.extra_edges
                                    : (N >= 2 ? (int)(rng() % (uint64_t)(N + 1)) : 0);
  for (int e = 0; e < extra && N >= 2; ++e) {
    int u = (int)(rng() % (uint64_t)N);
    int v = (int)(rng() % (uint64_t)N);
    if (u == v) continue;
    g.add_edge(u, v, 1 + (long long)(rng() % (uint64_t)opts.max_mult));
  }
  for (int v = 0; v < N; ++v) g.loops[v] += (long long)(rng() % (uint64_t)(opts.max_loops + 1));
  if (N == 1 && g.loops[0] == 0) g.loops[0] = 1;  // keep degrees positive
  return g;
}

Cover gen_cover_connected(const MultiGraph& g, int s, Rng& rng) {
  if (s < 1 || s > g.N) throw std::invalid_argument("gen_cover_connected: bad s");
  auto adjacent_to_set = [&](const std::vector<char>& in, int v) {
    for (int u = 0; u < g.N; ++u)
      if (in[u] && g.mult[u][v] > 0) return true;
    return false;
  };
  std::vector<std::set<int>> sets(s);
  int base = std::max(1, g.N / s);
  for (int i = 0; i < s; ++i) {
    std::vector<char> in(g.N, 0);
    int seed = (int)(rng() % (uint64_t)g.N);
    sets[i].insert(seed);
    in[seed] = 1;
    int target = base + (int)(rng() % (uint64_t)base);
    while ((int)sets[i].size() < target) {
      std::vector<int> frontier;
      for (int v = 0; v < g.N; ++v)
        if (!in[v] && adjacent_to_set(in, v)) frontier.push_back(v);
      if (frontier.empty()) break;
      int v = frontier[rng() % frontier.size()];
      sets[i].insert(v);
      in[v] = 1;
    }
  }
  // complete the cover: absorb uncovered vertices into adjacent sets
  std::vector<char> covered(g.N, 0);
  for (auto& st : sets)
    for (int v : st) covered[v] = 1;
  bool all;
  do {
    all = true;
    for (int v = 0; v < g.N; ++v) {
      if (covered[v]) continue;
      std::vector<int> cands;
      for (int i = 0; i < s; ++i) {
        bool adj = false;
        for (int u : sets[i])
          if (g.mult[u][v] > 0) { adj = true; break; }
        if (adj) cands.push_back(i);
      }
      if (!cands.empty()) {
        sets[cands[rng() % cands.size()]].insert(v);
        covered[v] = 1;
      } else {
        all = false;
      }
    }
  } while (!all);
  Cover c;
  for (auto& st : sets) c.sets.emplace_back(st.begin(), st.end());
  c.validate(g);
  return c;
}

Cover gen_partition_connected(const MultiGraph& g, int s, Rng& rng) {
  if (s < 1 || s > g.N) throw std::invalid_argument("gen_partition_connected: bad s");
  // random spanning tree by randomized DFS
  std::vector<std::pair<int, int>> tree;
  std::vector<char> vis(g.N, 0);
  std::vector<int> stack{(int)(rng() % (uint64_t)g.N)};
  vis[stack[0]] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    std::vector<int> nbrs;
    for (int v = 0; v < g.N; ++v)
      if (!vis[v] && g.mult[u][v] > 0) nbrs.push_back(v);
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    for (int v : nbrs) {
      if (vis[v]) continue;
      vis[v] = 1;
      tree.emplace_back(u, v);
      stack.push_back(u);  // u may have more unvisited neighbours
      stack.push_back(v);
      break;
    }
  }
  if ((int)tree.size() != g.N - 1)
    throw std::invalid_argument("gen_partition_connected: graph not connected");
  // cut s-1 distinct tree edges -> exactly s components
  std::vector<int> idx(tree.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<char> cut(tree.size(), 0);
  for (int i = 0; i < s - 1; ++i) cut[idx[i]] = 1;
  std::vector<int> parent(g.N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t e = 0; e < tree.size(); ++e)
    if (!cut[e]) parent[find(tree[e].first)] = find(tree[e].second);
  std::vector<VSet> comps(g.N);
  for (int v = 0; v < g.N; ++v) comps[find(v)].push_back(v);
  Cover c;
  for (auto& vs : comps)
    if (!vs.empty()) c.sets.push_back(vs);
  std::stable_sort(c.sets.begin(), c.sets.end(),
                   [](const VSet& a, const VSet& b) { return a.size() > b.size(); });
  c.validate(g);
  return c;
}

WackyFixture gen_wacky_fixture(int tree_depth, std::pair<int, int> expander_dims) {
  if (tree_depth < 0) throw std::invalid_argument("gen_wacky_fixture: bad depth");
  int d1 = expander_dims.first, d2 = expander_dims.second;
  if (d1 < 1 || d2 < 1 || d1 > 20 || d2 > 20)
    throw std::invalid_argument("gen_wacky_fixture: bad dims");
  int deg = std::max(d1, d2) + 1;  // target regular degree
  int a = deg - 1;                 // tree arity and bridge multiplicity

  // index layout per side: bridge vertex, tree by levels, cube
  long long tree_sz = 0, lvl = 1;
  for (int l = 0; l <= tree_depth; ++l) { tree_sz += lvl; lvl *= a; }
  auto side_sz = [&](int d) { return 1 + tree_sz + (1LL << d); };
  long long total = side_sz(d1) + side_sz(d2);
  if (total > 4000) throw std::invalid_argument("gen_wacky_fixture: too large");
  MultiGraph g((int)total);

  int base[2] = {0, (int)side_sz(d1)};
  int dims[2] = {d1, d2};
  g.add_edge(base[0], base[1], a);  // the bridge pair, parallel edges

  Cover c;
  for (int sidx = 0; sidx < 2; ++sidx) {
    int r = base[sidx];
    int tree0 = r + 1;
    // offsets of each tree level
    std::vector<long long> off(tree_depth + 2, 0);
    long long w = 1;
    for (int l = 0; l <= tree_depth; ++l) { off[l + 1] = off[l] + w; w *= a; }
    int cube0 = tree0 + (int)off[tree_depth + 1];
    g.add_edge(r, tree0, 1);
    for (int l = 1; l <= tree_depth; ++l)
      for (long long p = 0; p < off[l + 1] - off[l]; ++p)
        g.add_edge(tree0 + (int)(off[l - 1] + p / a), tree0 + (int)(off[l] + p), 1);
    long long cube_n = 1LL << dims[sidx];
    for (long long v = 0; v < cube_n; ++v)
      for (int b = 0; b < dims[sidx]; ++b) {
        long long u = v ^ (1LL << b);
        if (u > v) g.add_edge(cube0 + (int)v, cube0 + (int)u, 1);
      }
    // wire each leaf's a links round-robin into the cube
    long long leaves = off[tree_depth + 1] - off[tree_depth];
    long long link = 0;
    for (long long p = 0; p < leaves; ++p)
      for (int j = 0; j < a; ++j, ++link)
        g.add_edge(tree0 + (int)(off[tree_depth] + p), cube0 + (int)(link % cube_n), 1);
    VSet side;
    for (int v = r; v < r + (int)side_sz(dims[sidx]); ++v) side.push_back(v);
    c.sets.push_back(side);
  }
  g = make_nice(g);
  c.validate(g);
  return WackyFixture{std::move(g), std::move(c), 0};
}

}  // namespace mixwalk
