#include "mixwalk/walker.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace mixwalk {

int default_samples_per_probe(int n) {
  if (n < 1) throw std::invalid_argument("default_samples_per_probe: n < 1");
  int p = (int)std::ceil(2.0 * std::log2((double)n));
  return std::max(p, 2);
}

void WalkConfig::validate(int n) const {
  if (n < 1) throw std::invalid_argument("WalkConfig: n < 1");
  if (outer_len < 1) throw std::invalid_argument("WalkConfig: outer_len < 1");
  if (inner_len_max < 1) throw std::invalid_argument("WalkConfig: inner_len_max < 1");
  if (samples_per_probe < 0) throw std::invalid_argument("WalkConfig: samples_per_probe < 0");
  if (probes(n) < 2) throw std::invalid_argument("WalkConfig: fewer than 2 samples per probe");
  if (repeats < 1) throw std::invalid_argument("WalkConfig: repeats < 1");
}

int WalkConfig::probes(int n) const {
  return samples_per_probe > 0 ? samples_per_probe : default_samples_per_probe(n);
}

std::vector<int> sat_neighbors(const SatWalkOracle& w, Assign y) {
  std::vector<int> out;
  for (int i = 1; i <= w.n(); ++i)
    if (w.f.query(flipbit(y, i))) out.push_back(i);
  return out;
}

Assign step_nice(const SatWalkOracle& w, Assign y, Rng& rng) {
  // Enumerate first so every step costs exactly n queries; the lazy coin and
  // the neighbor pick then share one uniform draw order.
  std::vector<int> nbrs = sat_neighbors(w, y);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return y;
  if (nbrs.empty()) return y;  // stuck: self-loop forever
  int i = nbrs[std::uniform_int_distribution<size_t>(0, nbrs.size() - 1)(rng)];
  return flipbit(y, i);
}

Assign step_uniform_lazy(const SatWalkOracle& w, Assign y, Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return y;
  int i = std::uniform_int_distribution<int>(1, w.n())(rng);
  Assign z = flipbit(y, i);
  return w.f.query(z) ? z : y;
}

namespace {

// walk body without the start check; callers verify once per entry point
Assign walk_steps(const SatWalkOracle& w, Assign y, long t, Rng& rng,
                  WalkConfig::Chain chain, std::vector<Assign>* traj) {
  if (traj) traj->push_back(y);
  for (long s = 0; s < t; ++s) {
    y = chain == WalkConfig::Chain::Nice ? step_nice(w, y, rng)
                                         : step_uniform_lazy(w, y, rng);
    if (traj) traj->push_back(y);
  }
  return y;
}

void check_start(const SatWalkOracle& w, Assign y, const char* who) {
  if (!w.f.query(y))
    throw std::invalid_argument(std::string(who) + ": start point must satisfy f");
}

}  // namespace

Assign walk(const SatWalkOracle& w, Assign y, long t, Rng& rng,
            WalkConfig::Chain chain, std::vector<Assign>* traj) {
  if (t < 0) throw std::invalid_argument("walk: t < 0");
  check_start(w, y, "walk");
  return walk_steps(w, y, t, rng, chain, traj);
}

std::vector<GeneratedTerm> generate_list_of_terms(const SatWalkOracle& w, Assign y,
                                                  const WalkConfig& cfg, int repeat) {
  const int n = w.n();
  cfg.validate(n);
  check_start(w, y, "generate_list_of_terms");

  const int probes = cfg.probes(n);
  const std::uint64_t rep_key = derive_seed(cfg.seed, 0x77A1, (std::uint64_t)repeat);
  Rng outer(derive_seed(rep_key));

  std::vector<GeneratedTerm> out;
  std::set<std::pair<Assign, Assign>> seen;
  Assign Y = y;
  for (long t = 1; t <= cfg.outer_len; ++t) {
    Y = cfg.chain == WalkConfig::Chain::Nice ? step_nice(w, Y, outer)
                                             : step_uniform_lazy(w, Y, outer);
    for (long ell = 1; ell <= cfg.inner_len_max; ++ell) {
      std::vector<Assign> ends;
      ends.reserve(probes);
      for (int p = 0; p < probes; ++p) {
        // per-probe seed: results don't depend on scheduling order
        Rng pr(derive_seed(rep_key, (std::uint64_t)t, (std::uint64_t)ell,
                           (std::uint64_t)(p + 1)));
        ends.push_back(walk_steps(w, Y, ell, pr, cfg.chain, nullptr));
      }
      Term T = largest_common_term(ends, n);
      if (seen.insert({T.pos, T.neg}).second)
        out.push_back(GeneratedTerm{T, t, ell, repeat, std::move(ends)});
    }
  }
  return out;
}

ListDecodeResult list_decode(const SatWalkOracle& w, const SampleDistribution& d,
                             const WalkConfig& cfg, long start_budget, Rng& rng) {
  const int n = w.n();
  cfg.validate(n);
  d.validate();
  if (d.n != n) throw std::invalid_argument("list_decode: distribution arity mismatch");
  if (start_budget < 1) throw std::invalid_argument("list_decode: start_budget < 1");

  ListDecodeResult res;
  bool found = false;
  for (long tries = 1; tries <= start_budget; ++tries) {
    Assign x = d.sample(rng);
    res.starts_tried = tries;
    if (w.f.query(x)) {
      res.start = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("target-too-sparse");

  std::set<std::pair<Assign, Assign>> seen;
  for (int r = 0; r < cfg.repeats; ++r) {
    for (GeneratedTerm& g : generate_list_of_terms(w, res.start, cfg, r))
      if (seen.insert({g.term.pos, g.term.neg}).second) res.terms.push_back(std::move(g));
  }
  return res;
}

SatGraph materialize_sat_graph(const Dnf& f) {
  f.validate();
  if (f.n > 20) throw std::invalid_argument("materialize_sat_graph: n > 20");

  SatGraph sg;
  for (Assign x = 0; x <= nmask(f.n); ++x)
    if (f.eval(x)) sg.verts.push_back(x);

  const int S = (int)sg.verts.size();
  sg.g = MultiGraph(S);
  for (int i = 0; i < S; ++i)
    for (int b = 1; b <= f.n; ++b) {
      Assign z = flipbit(sg.verts[i], b);
      if (z <= sg.verts[i]) continue;  // count each pair once
      int j = sg.index_of(z);
      if (j >= 0) sg.g.add_edge(i, j);
    }
  // nice: one loop per non-loop edge; isolated points keep one loop so the
  // walk operator is defined (the walker stays put there as well)
  for (int i = 0; i < S; ++i)
    sg.g.loops[i] = std::max(1, sg.g.nonloop_deg(i));
  return sg;
}

int SatGraph::index_of(Assign y) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), y);
  if (it == verts.end() || *it != y) return -1;
  return (int)(it - verts.begin());
}

}  // namespace mixwalk
