#include "mixwalk/learner.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mixwalk {

namespace {

std::uint64_t bit(int i) { return 1ull << (i - 1); }

double choose_d(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// visit all k-subsets of {0, ..., m-1} in lexicographic order
template <class Fn>
void for_each_combination(int m, int k, Fn fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Assign draw_satisfying(Oracle& f, const Sampler& d, long budget, Rng& rng) {
  for (long i = 0; i < budget; ++i) {
    Assign x = d(rng);
    if (f.query(x)) return x;
  }
  throw std::runtime_error("target-too-sparse");
}

// empirical Pr over m draws of pred(x)
template <class Pred>
double estimate_prob(const Sampler& d, long m, Rng& rng, Pred pred) {
  long hit = 0;
  for (long i = 0; i < m; ++i)
    if (pred(d(rng))) ++hit;
  return double(hit) / double(m);
}

long hoeffding_draws(double eps, double delta) {
  return (long)std::ceil(std::log(2.0 / delta) / (2.0 * eps * eps));
}

}  // namespace

void LearnerConfig::validate() const {
  auto bad = [](const char* m) { throw std::invalid_argument(std::string("LearnerConfig: ") + m); };
  if (prune_trials_per_term < 1) bad("prune_trials_per_term < 1");
  if (far_point_threshold < 1) bad("far_point_threshold < 1");
  if (!(far_point_threshold < W_drop_distance)) bad("need far_point_threshold < W_drop_distance");
  if (!(W_drop_distance < far_drop_distance)) bad("need W_drop_distance < far_drop_distance");
  if (!(far_drop_distance <= far_term_threshold)) bad("need far_drop_distance <= far_term_threshold");
  if (!(far_term_threshold <= expand_radius)) bad("need far_term_threshold <= expand_radius");
  if (!(popular_frac > 0)) bad("popular_frac <= 0");
  if (!(popular_frac < super_popular_frac)) bad("need popular_frac < super_popular_frac");
  if (!(super_popular_frac <= 1.0)) bad("super_popular_frac > 1");
  if (!(superpop_required_frac > 0)) bad("superpop_required_frac <= 0");
  if (noise_rate_scale < 0) bad("noise_rate_scale < 0");
  if (noise_budget < 1) bad("noise_budget < 1");
  if (noise_margin < 0) bad("noise_margin < 0");
  if (noise_outer_budget < 1) bad("noise_outer_budget < 1");
  if (S_bruteforce_gap < 1) bad("S_bruteforce_gap < 1");
  if (covered_coord_cap < 1) bad("covered_coord_cap < 1");
  if (outer_iterations < 0) bad("outer_iterations < 0");
  if (!(gamma > 0 && gamma <= 0.5)) bad("gamma outside (0, 1/2]");
  if (!(delta > 0 && delta < 1)) bad("delta outside (0, 1)");
  if (C_cap < 1) bad("C_cap < 1");
  if (expand_cap < 1) bad("expand_cap < 1");
  if (small_k_cap < 1) bad("small_k_cap < 1");
  if (large_k_margin < 1) bad("large_k_margin < 1");
}

std::vector<Term> all_width_k_terms(int n, int k, long cap) {
  if (n < 1 || n > 64 || k < 1 || k > n) throw std::invalid_argument("all_width_k_terms: bad n or k");
  double total = choose_d(n, k) * std::pow(2.0, k);
  if (total > (double)cap) throw std::runtime_error("radius too large");
  std::vector<Term> out;
  out.reserve((size_t)total);
  for_each_combination(n, k, [&](const std::vector<int>& idx) {
    for (std::uint64_t pol = 0; pol < (1ull << k); ++pol) {
      Term t;
      for (int j = 0; j < k; ++j) {
        std::uint64_t b = bit(idx[j] + 1);
        if ((pol >> j) & 1)
          t.neg |= b;
        else
          t.pos |= b;
      }
      out.push_back(t);
    }
  });
  return out;
}

std::vector<Term> prune(Oracle& f, const std::vector<Term>& L, int k,
                        const LearnerConfig& cfg, Rng& rng) {
  if (cfg.prune_trials_per_term < 1) throw std::invalid_argument("prune: trials < 1");
  const int n = f.n();
  std::vector<Term> out;
  for (const Term& T : L) {
    if (!T.wellformed()) throw std::invalid_argument("prune: malformed term");
    if (T.width() != k) continue;
    bool keep = true;
    for (int trial = 0; trial < cfg.prune_trials_per_term; ++trial) {
      Assign z = sample_term_satisfying(T, n, rng);
      if (!f.query(z)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(T);
  }
  return out;
}

namespace {

// upper bound on the number of width-k terms within term distance r of one
// width-k term (delete j literals, add j consistent ones)
double ball_bound(int n, int k, int r) {
  double total = 0;
  for (int j = 0; j <= std::min(r, k); ++j)
    total += choose_d(k, j) * choose_d(n - k + j, j) * std::pow(2.0, j);
  return total;
}

// add to `out` every width-k term obtained from `base` (width k - j after
// deletions) by adding j literals on unused variables
void add_completions(const Term& base, int n, int j, std::set<Term>& out) {
  std::vector<int> avail;
  for (int v = 1; v <= n; ++v)
    if (!((base.pos | base.neg) & bit(v))) avail.push_back(v);
  if ((int)avail.size() < j) return;
  for_each_combination((int)avail.size(), j, [&](const std::vector<int>& idx) {
    for (std::uint64_t pol = 0; pol < (1ull << j); ++pol) {
      Term t = base;
      for (int a = 0; a < j; ++a) {
        std::uint64_t b = bit(avail[idx[a]]);
        if ((pol >> a) & 1)
          t.neg |= b;
        else
          t.pos |= b;
      }
      out.insert(t);
    }
  });
}

}  // namespace

std::vector<Term> expand(const std::vector<Term>& L, int n, int k,
                         const LearnerConfig& cfg) {
  if (cfg.expand_radius < 0) throw std::invalid_argument("expand: negative radius");
  for (const Term& T : L)
    if (!T.wellformed() || T.width() != k)
      throw std::invalid_argument("expand: input term not width k");
  if (ball_bound(n, k, cfg.expand_radius) * double(L.size()) > (double)cfg.expand_cap)
    throw std::runtime_error("radius too large");

  std::set<Term> out;
  for (const Term& T : L) {
    std::vector<int> lits = T.lits();
    for (int j = 0; j <= std::min(cfg.expand_radius, k); ++j) {
      for_each_combination(k, j, [&](const std::vector<int>& del) {
        Term base = T;
        for (int di : del) {
          int lit = lits[di];
          std::uint64_t b = bit(std::abs(lit));
          if (lit > 0)
            base.pos &= ~b;
          else
            base.neg &= ~b;
        }
        add_completions(base, n, j, out);
      });
    }
  }
  return std::vector<Term>(out.begin(), out.end());
}

std::optional<Assign> noise(Oracle& f, Assign y, std::uint64_t F, int k,
                            const LearnerConfig& cfg, Rng& rng) {
  const int n = f.n();
  if (F & ~nmask(n)) throw std::invalid_argument("noise: F outside [n]");
  if (popcnt(F) > k - cfg.noise_margin)
    throw std::invalid_argument("noise: frozen set larger than k - margin");
  if (!f.query(y)) throw std::invalid_argument("noise: y must satisfy f");

  int kf = k - popcnt(F);
  double p = kf >= 1 ? std::min(0.5, cfg.noise_rate_scale / kf) : 0.5;
  std::bernoulli_distribution flip(p);
  for (int attempt = 0; attempt < cfg.noise_budget; ++attempt) {
    Assign z = y;
    for (int i = 1; i <= n; ++i)
      if (!(F & bit(i)) && flip(rng)) z = flipbit(z, i);
    if (f.query(z)) return z;
  }
  return std::nullopt;
}

std::vector<int> popular_coordinates(Assign y, const std::vector<Term>& W, int n,
                                     double frac) {
  if (W.empty()) throw std::invalid_argument("popular_coordinates: empty list");
  if (!(frac > 0)) throw std::invalid_argument("popular_coordinates: frac <= 0");
  double threshold = frac * double(W.size()) - 1e-12;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t b = bit(i);
    int cnt = 0;
    for (const Term& T : W)
      if ((y & b) ? (T.pos & b) : (T.neg & b)) ++cnt;
    if (cnt >= 1 && double(cnt) >= threshold) out.push_back(i);
  }
  return out;
}

namespace {

std::optional<Assign> ffp_impl(Oracle& f, Assign y, const std::vector<Term>& L,
                               std::vector<Term> W, std::uint64_t S, std::uint64_t A,
                               int k, const LearnerConfig& cfg, Rng& rng, int depth) {
  const int n = f.n();
  if (depth <= 0) throw std::runtime_error("find_far_point: depth guard exceeded");
  auto is_far = [&](Assign z) { return sat_distance(z, L) >= cfg.far_point_threshold; };
  auto checked = [&](Assign z) -> std::optional<Assign> {
    if (!is_far(z) || !f.query(z))
      throw std::logic_error("find_far_point: postcondition violated");
    return z;
  };

  // step 1: S nearly pins a width-k term; brute-force the nearby candidates
  if (popcnt(S) >= k - cfg.S_bruteforce_gap) {
    const Term B = induced_term(y, S);
    const int b = popcnt(S);
    const int gap = cfg.S_bruteforce_gap;
    double predicted = 0;
    for (int jd = std::max(0, b - k); jd <= b; ++jd) {
      int jn = k - b + jd;
      if (jn < 0 || (jd > gap && jn > gap)) continue;
      predicted += choose_d(b, jd) * choose_d(n - b + jd, jn) * std::pow(2.0, jn);
    }
    if (predicted > (double)cfg.expand_cap) throw std::runtime_error("radius too large");

    std::vector<int> blits = B.lits();
    std::optional<Assign> found;
    for (int jd = std::max(0, b - k); jd <= b && !found; ++jd) {
      int jn = k - b + jd;
      if (jn < 0 || (jd > gap && jn > gap)) continue;
      for_each_combination(b, jd, [&](const std::vector<int>& del) {
        if (found) return;
        Term base = B;
        for (int di : del) {
          std::uint64_t bb = bit(std::abs(blits[di]));
          if (blits[di] > 0)
            base.pos &= ~bb;
          else
            base.neg &= ~bb;
        }
        std::set<Term> cands;
        add_completions(base, n, jn, cands);
        for (const Term& T : cands) {
          std::uint64_t vT = T.vars();
          Assign z = (y & vT) | (rand_point(n, rng) & ~vT);
          if (f.query(z) && is_far(z)) {
            found = z;
            return;
          }
        }
      });
    }
    if (found) return checked(*found);
    return std::nullopt;
  }

  // step 2: terms already distant from y stop being worries
  std::erase_if(W, [&](const Term& T) { return T.falsified(y) >= cfg.W_drop_distance; });
  // step 3: terms contradicted on too many flipped (A) coordinates
  std::erase_if(W, [&](const Term& T) {
    std::uint64_t opp = ((T.neg & y) | (T.pos & ~y)) & A;
    return popcnt(opp) > cfg.covered_coord_cap;
  });
  // step 4
  if (W.empty()) {
    if (is_far(y)) return checked(y);
    return std::nullopt;
  }

  const std::uint64_t free_mask = nmask(n) & ~(S | A);
  std::vector<int> pops;
  for (int i : popular_coordinates(y, W, n, cfg.popular_frac))
    if (free_mask & bit(i)) pops.push_back(i);

  // step 5: no popular coordinate — noise until super-popularity re-emerges
  if (pops.empty()) {
    const std::uint64_t F = S | A;
    if (popcnt(F) > k - cfg.noise_margin) return std::nullopt;  // noise inapplicable
    for (int m = 0; m < cfg.noise_outer_budget; ++m) {
      std::optional<Assign> z = noise(f, y, F, k, cfg, rng);
      if (!z) continue;
      std::vector<Term> W2 = W;
      std::erase_if(W2, [&](const Term& T) { return T.falsified(*z) >= cfg.far_drop_distance; });
      int sp = 0;
      if (!W2.empty())
        for (int i : popular_coordinates(*z, W2, n, cfg.super_popular_frac))
          if (free_mask & bit(i)) ++sp;
      if (double(sp) < cfg.superpop_required_frac * double(k - popcnt(S))) continue;
      std::optional<Assign> r = ffp_impl(f, *z, L, W2, S, A, k, cfg, rng, depth - 1);
      if (r) return r;
    }
    return std::nullopt;
  }

  // steps 6-9: branch on the lowest-index popular coordinate
  int i = pops.front();
  std::optional<Assign> r = ffp_impl(f, y, L, W, S | bit(i), A, k, cfg, rng, depth - 1);
  if (r) return r;
  Assign yf = flipbit(y, i);
  if (!f.query(yf)) return std::nullopt;
  return ffp_impl(f, yf, L, W, S, A | bit(i), k, cfg, rng, depth - 1);
}

}  // namespace

std::optional<Assign> find_far_point(Oracle& f, Assign y, const std::vector<Term>& L,
                                     std::vector<Term> W, std::uint64_t S,
                                     std::uint64_t A, int k, const LearnerConfig& cfg,
                                     Rng& rng, int depth_guard) {
  const int n = f.n();
  if (k < 1 || k > n) throw std::invalid_argument("find_far_point: bad k");
  if (S & A) throw std::invalid_argument("find_far_point: S and A intersect");
  if ((S | A) & ~nmask(n)) throw std::invalid_argument("find_far_point: index outside [n]");
  if (!f.query(y)) throw std::invalid_argument("find_far_point: y must satisfy f");
  if (depth_guard <= 0) depth_guard = 4 * n + 16;
  return ffp_impl(f, y, L, std::move(W), S, A, k, cfg, rng, depth_guard);
}

namespace {

// shared list-growing state for the weak-term learners: memoizes prune drops,
// expansions, and weak-test verdicts so sweeps stay linear across iterations
struct ListState {
  std::vector<Term> L;
  std::set<Term> members, dropped, expanded, weak_checked;

  void merge_pruned(Oracle& f, const std::vector<Term>& cand, int k,
                    const LearnerConfig& cfg, Rng& rng) {
    std::vector<Term> fresh;
    for (const Term& T : cand)
      if (T.wellformed() && !members.count(T) && !dropped.count(T)) fresh.push_back(T);
    std::vector<Term> surv = prune(f, fresh, k, cfg, rng);
    std::set<Term> sset(surv.begin(), surv.end());
    for (const Term& T : fresh) {
      if (sset.count(T)) {
        if (members.insert(T).second) L.push_back(T);
      } else {
        dropped.insert(T);
      }
    }
  }

  void expand_new(Oracle& f, int n, int k, const LearnerConfig& cfg, Rng& rng) {
    std::vector<Term> todo;
    for (const Term& T : L)
      if (!expanded.count(T)) todo.push_back(T);
    if (todo.empty()) return;
    std::vector<Term> ball = expand(todo, n, k, cfg);
    for (const Term& T : todo) expanded.insert(T);
    merge_pruned(f, ball, k, cfg, rng);
  }

  std::optional<Term> first_weak(Oracle& f, const Sampler& d, double eps, int s,
                                 Rng& rng) {
    for (const Term& T : L) {
      if (weak_checked.count(T)) continue;
      weak_checked.insert(T);
      if (is_weak_term(T, f, d, eps, s, rng).accept) return T;
    }
    return std::nullopt;
  }
};

std::vector<Term> walk_term_list(Oracle& f, Assign z, const LearnerConfig& cfg,
                                 Rng& rng) {
  WalkConfig wc = cfg.walk;
  wc.seed = rng();
  SatWalkOracle w{f};
  std::vector<Term> out;
  for (GeneratedTerm& g : generate_list_of_terms(w, z, wc)) out.push_back(g.term);
  return out;
}

}  // namespace

LearnResult simple_learning(Oracle& f, const Sampler& d, double eps, int k,
                            const LearnerConfig& cfg, Rng& rng) {
  cfg.validate();
  if (!(eps > 0 && eps <= 0.5)) throw std::invalid_argument("simple_learning: eps outside (0, 1/2]");
  const int n = f.n();
  if (k < 1 || k > n) throw std::invalid_argument("simple_learning: bad k");

  long m = hoeffding_draws(eps / 2, cfg.delta);
  double psat = estimate_prob(d, m, rng, [&](Assign x) { return f.query(x); });
  if (psat <= eps / 2) return {LearnResult::Kind::SparseZero, {}, 0};

  const long sat_budget = (long)std::ceil(64.0 / eps);
  ListState st;
  long prev = -1;
  int it = 0;
  while ((long)st.L.size() > prev) {
    prev = (long)st.L.size();
    ++it;
    Assign y = draw_satisfying(f, d, sat_budget, rng);
    st.merge_pruned(f, walk_term_list(f, y, cfg, rng), k, cfg, rng);
    st.expand_new(f, n, k, cfg, rng);
    // the weak test here runs at s = 1: this procedure has no size parameter
    if (std::optional<Term> T = st.first_weak(f, d, eps, 1, rng))
      return {LearnResult::Kind::FoundTerm, *T, it};
  }
  return {LearnResult::Kind::Fail, {}, it};
}

LearnResult exact_learn(Oracle& f, const Sampler& d, double eps, int k, int s,
                        const LearnerConfig& cfg, Rng& rng) {
  cfg.validate();
  if (!(eps > 0 && eps <= 0.5)) throw std::invalid_argument("exact_learn: eps outside (0, 1/2]");
  if (s < 1) throw std::invalid_argument("exact_learn: s < 1");
  const int n = f.n();
  if (k < 1 || k > n) throw std::invalid_argument("exact_learn: bad k");

  long m = hoeffding_draws(eps / 2, cfg.delta);
  double psat = estimate_prob(d, m, rng, [&](Assign x) { return f.query(x); });
  if (psat <= eps / 2) return {LearnResult::Kind::SparseZero, {}, 0};

  const long iters =
      cfg.outer_iterations > 0 ? cfg.outer_iterations : (long)std::ceil(64.0 / eps);
  const long sat_budget = (long)std::ceil(64.0 / eps);
  ListState st;
  for (long it = 1; it <= iters; ++it) {
    Assign y = draw_satisfying(f, d, sat_budget, rng);
    // walk from a far point of the current list when one can be found; the
    // raw draw still makes progress when the search fails
    Assign z = find_far_point(f, y, st.L, st.L, 0, 0, k, cfg, rng).value_or(y);
    st.merge_pruned(f, walk_term_list(f, z, cfg, rng), k, cfg, rng);
    st.expand_new(f, n, k, cfg, rng);
    if (std::optional<Term> T = st.first_weak(f, d, eps, s, rng))
      return {LearnResult::Kind::FoundTerm, *T, (int)it};
  }
  return {LearnResult::Kind::Fail, {}, (int)iters};
}

BoostResult dnf_learn(Oracle& f, const Sampler& d, const WeakTermLearner& weak,
                      double gamma, int s, const LearnerConfig& cfg, Rng& rng) {
  cfg.validate();
  if (!(gamma > 0 && gamma <= 0.5)) throw std::invalid_argument("dnf_learn: gamma outside (0, 1/2]");
  if (s < 1) throw std::invalid_argument("dnf_learn: s < 1");
  const int n = f.n();

  const int cap = (int)std::ceil(cfg.C_cap * s * std::log(1.0 / gamma));
  const long m_est = hoeffding_draws(gamma / 4, cfg.delta);
  const long rej_budget = (long)std::ceil(64.0 / gamma);

  std::vector<Term> terms;
  BoostResult out;
  auto uncovered_positive = [&terms](Assign x) {
    for (const Term& T : terms)
      if (T.sat(x)) return false;
    return true;
  };

  while (true) {
    double est = estimate_prob(d, m_est, rng, [&](Assign x) {
      return uncovered_positive(x) && f.query(x);
    });
    out.uncovered.push_back(est);
    if (est < gamma / 2) break;
    if ((int)terms.size() >= cap) throw std::runtime_error("booster iteration cap exceeded");

    Sampler Di;
    if (terms.empty()) {
      Di = d;
    } else {
      std::vector<Term> snapshot = terms;
      Di = [&f, d, snapshot, rej_budget](Rng& g) -> Assign {
        const bool want_negative = std::bernoulli_distribution(0.5)(g);
        for (long i = 0; i < rej_budget; ++i) {
          Assign x = d(g);
          bool fx = f.query(x);
          if (want_negative && !fx) return x;
          if (!want_negative && fx) {
            bool covered = false;
            for (const Term& T : snapshot)
              if (T.sat(x)) {
                covered = true;
                break;
              }
            if (!covered) return x;
          }
        }
        throw std::runtime_error("booster mixture rejection budget exhausted");
      };
    }

    std::optional<Term> T = weak(f, Di, gamma, rng);
    if (!T) throw std::runtime_error("weak learner failed");
    terms.push_back(*T);
  }
  out.h = Dnf{n, terms};
  return out;
}

WeakTermLearner make_exact_learn_weak(int k, int s, LearnerConfig cfg) {
  return [k, s, cfg](Oracle& f, const Sampler& d, double gamma,
                     Rng& rng) -> std::optional<Term> {
    LearnResult r = exact_learn(f, d, gamma, k, s, cfg, rng);
    if (r.kind == LearnResult::Kind::FoundTerm) return r.term;
    return std::nullopt;
  };
}

Dnf learn_small_k(Oracle& f, const SampleDistribution& d, int k, int s, double eps,
                  double delta, const LearnerConfig& cfg, Rng& rng) {
  cfg.validate();
  const int n = f.n();
  if (k < 1 || k > n) throw std::invalid_argument("learn_small_k: bad k");
  if (k > cfg.small_k_cap) throw std::invalid_argument("learn_small_k: k above small-k cap");
  if (s < 1) throw std::invalid_argument("learn_small_k: s < 1");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("learn_small_k: eps outside (0, 1)");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("learn_small_k: delta outside (0, 1)");
  d.validate();
  if (d.n != n) throw std::invalid_argument("learn_small_k: distribution arity mismatch");

  std::vector<Term> cands = all_width_k_terms(n, k, cfg.expand_cap);
  const double N = double(cands.size());
  const long m = (long)std::ceil(
      (4.0 * (s * std::ceil(std::log2(2.0 / eps)) * std::log(std::max(N, 2.0)) +
              std::log(1.0 / delta)) +
       8.0) /
      eps);

  std::vector<Assign> pos, neg;
  for (long i = 0; i < m; ++i) {
    Assign x = d.sample(rng);
    (f.query(x) ? pos : neg).push_back(x);
  }

  std::vector<char> consistent(cands.size(), 1);
  for (size_t t = 0; t < cands.size(); ++t)
    for (Assign x : neg)
      if (cands[t].sat(x)) {
        consistent[t] = 0;
        break;
      }

  std::vector<char> covered(pos.size(), 0);
  size_t remaining = pos.size();
  std::vector<Term> picked;
  while (remaining > 0) {
    size_t best = cands.size();
    long best_cnt = 0;
    for (size_t t = 0; t < cands.size(); ++t) {
      if (!consistent[t]) continue;
      long cnt = 0;
      for (size_t p = 0; p < pos.size(); ++p)
        if (!covered[p] && cands[t].sat(pos[p])) ++cnt;
      if (cnt > best_cnt) {
        best_cnt = cnt;
        best = t;
      }
    }
    if (best == cands.size())
      throw std::runtime_error(
          "model violation: no consistent width-k term covers a positive sample");
    picked.push_back(cands[best]);
    for (size_t p = 0; p < pos.size(); ++p)
      if (!covered[p] && cands[best].sat(pos[p])) {
        covered[p] = 1;
        --remaining;
      }
  }
  return Dnf{n, picked};
}

Dnf large_k_reduction(Oracle& f, const SampleDistribution& d, int k,
                      const InnerLearner& inner, const LearnerConfig& cfg, Rng& rng) {
  cfg.validate();
  const int n = f.n();
  if (k <= n - cfg.large_k_margin)
    throw std::invalid_argument("large_k_reduction: k is not in the large regime");
  if (2 * n > 64) throw std::invalid_argument("large_k_reduction: 2n exceeds 64 bits");
  d.validate();
  if (d.n != n) throw std::invalid_argument("large_k_reduction: distribution arity mismatch");

  SampleDistribution d2;
  if (d.kind == SampleDistribution::Kind::Uniform) {
    d2 = SampleDistribution::uniform(2 * n);
  } else if (d.kind == SampleDistribution::Kind::Product) {
    std::vector<double> b = d.bias;
    b.resize(2 * n, 0.5);
    d2 = SampleDistribution::product(std::move(b));
  } else {
    throw std::invalid_argument("large_k_reduction: explicit support cannot be extended");
  }

  const std::uint64_t lo = nmask(n);
  Oracle f2(2 * n, [&f, lo](Assign x) { return f.query(x & lo); });
  Dnf h2 = inner(f2, d2, 2 * n);

  Dnf best;
  double best_err = 2.0;
  for (int rep = 0; rep < 100; ++rep) {
    Assign w = rand_point(n, rng);
    std::vector<Term> kept;
    for (const Term& t : h2.terms) {
      std::uint64_t hp = t.pos >> n, hn = t.neg >> n;
      if ((w & hp) != hp || (w & hn) != 0) continue;  // dummy literal falsified
      kept.push_back(Term{t.pos & lo, t.neg & lo});
    }
    Dnf h{n, kept};
    double err = estimate_error(h, f, d, n <= 16 ? ErrorMode::Exhaustive : ErrorMode::Sampled,
                                4000, rng);
    if (err < best_err) {
      best_err = err;
      best = h;
    }
  }
  return best;
}

double estimate_error(const Dnf& h, Oracle& f, const SampleDistribution& d,
                      ErrorMode mode, long budget, Rng& rng) {
  d.validate();
  if (d.n != f.n()) throw std::invalid_argument("estimate_error: arity mismatch");
  if (mode == ErrorMode::Exhaustive) {
    if (d.kind != SampleDistribution::Kind::Explicit && d.n > 20)
      throw std::invalid_argument("estimate_error: exhaustive mode needs n <= 20");
    double e = 0;
    d.for_each([&](Assign x, double m) {
      if (h.eval(x) != f.query(x)) e += m;
    });
    return e;
  }
  if (budget < 1) throw std::invalid_argument("estimate_error: budget < 1");
  long bad = 0;
  for (long i = 0; i < budget; ++i) {
    Assign x = d.sample(rng);
    if (h.eval(x) != f.query(x)) ++bad;
  }
  return double(bad) / double(budget);
}

Dnf learn_exact_sweep(Oracle& f, const SampleDistribution& d, double eps,
                      const LearnerConfig& cfg, Rng& rng, int k_max, int s_max) {
  cfg.validate();
  const int n = f.n();
  for (int k = 1; k <= std::min(k_max, n); ++k) {
    for (int s = 1; s <= s_max; s *= 2) {
      try {
        BoostResult b = dnf_learn(f, as_sampler(d), make_exact_learn_weak(k, s, cfg),
                                  eps, s, cfg, rng);
        if (estimate_error(b.h, f, d, ErrorMode::Sampled, 4000, rng) <= eps) return b.h;
      } catch (const std::runtime_error&) {
        continue;  // this guess failed; try the next one
      }
    }
  }
  throw std::runtime_error("no (k, s) guess produced an accurate hypothesis");
}

}  // namespace mixwalk
