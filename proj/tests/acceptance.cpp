// Acceptance suite: one criterion per --only index, one PASS/FAIL line each.
// Every tolerance and threshold is pinned here as a named constant.
#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "mixwalk/cover_ops.hpp"
#include "mixwalk/gen.hpp"
#include "mixwalk/harness.hpp"
#include "mixwalk/localmix.hpp"
#include "mixwalk/spectral.hpp"
#include "mixwalk/walker.hpp"
#include "mixwalk/walkmat.hpp"

using namespace mixwalk;

namespace {

// ---- pinned tolerances and thresholds --------------------------------------
constexpr double kSpectralSlack = 1e-9;    // slack where eigenvalues meet exact rationals
constexpr double kCheegerUpperSlack = 1e-6;  // upper Cheeger side: phi <= sqrt(2 l2) + this
constexpr double kTvWalkerVsMatrix = 0.02;  // criterion 7: empirical vs exact endpoint law
constexpr long kWalksPerCase = 100000;      // criterion 7 Monte-Carlo size
constexpr double kPStarReplaySlack = 0.01;  // criterion 8: |accept_freq - p_star|
constexpr double kTvReplay = 0.02;          // criterion 8: accepted law vs uniform on A_best
constexpr long kReplayTrials = 200000;      // criterion 8 Monte-Carlo size
constexpr double kPlateauLo = 0.4;          // criterion 8: root p_star window
constexpr double kPlateauHi = 0.6;
// criterion 9 success-rate threshold, frozen after one pilot run of this very
// binary (seed below, 200 runs): the pilot measured rate 0.97 (194/200 runs
// recovered a true term), so the 0.30 floor from the experiment design stands
// with a wide margin.
constexpr double kListDecodeRate = 0.30;
constexpr double kSizeSlack = 1e-9;   // term-count caps compared with this slack
constexpr double kErrSlack = 1e-12;   // error caps compared with this slack

std::uint64_t seed_for(int criterion) { return derive_seed(2026, criterion); }

MultiGraph hypercube(int r) {
  MultiGraph g(1 << r);
  for (int v = 0; v < g.N; ++v)
    for (int b = 0; b < r; ++b) {
      int u = v ^ (1 << b);
      if (u > v) g.add_edge(v, u);
    }
  return g;
}

VSet random_proper_subset(int N, Rng& rng) {
  for (;;) {
    VSet S;
    for (int v = 0; v < N; ++v)
      if (rng() & 1) S.push_back(v);
    if (!S.empty() && (int)S.size() < N) return S;
  }
}

long spectral_mixing_bound(const MultiGraph& g) {
  double l2 = normalized_laplacian_spectrum(g).lambda2();
  VertexDistribution pi = stationary(g);
  double pi_min = *std::min_element(pi.begin(), pi.end());
  return (long)std::ceil((1.0 / l2) * std::log(4.0 / pi_min));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// ---- 1: Cheeger sandwich ----------------------------------------------------
bool c1(std::string& note) {
  Rng rng(seed_for(1));
  int violations = 0;
  for (int rep = 0; rep < 200; ++rep) {
    int N = 2 + int(rng() % 11);
    MultiGraph g = make_nice(gen_connected_multigraph(N, rng));
    double l2 = normalized_laplacian_spectrum(g).lambda2();
    double phi = boost::rational_cast<double>(phi_graph_bruteforce(g));
    bool ok = l2 / 2 <= phi + kSpectralSlack &&
              phi <= std::sqrt(2 * l2) + kCheegerUpperSlack;
    if (!ok) ++violations;
  }
  note = "violations=" + std::to_string(violations) + "/200";
  return violations == 0;
}

// ---- 2: hypercube conductance ----------------------------------------------
bool c2(std::string& note) {
  bool ok = true;
  for (int r : {2, 3}) {
    MultiGraph q = hypercube(r);
    ok = ok && phi_graph_bruteforce(q) == Rat(1, r);
    ok = ok && phi_graph_bruteforce(make_nice(q)) == Rat(1, 2 * r);
  }
  note = ok ? "phi(Q_r)=1/r and 1/(2r) niced, r=2,3" : "exact value mismatch";
  return ok;
}

// ---- 3: escape bound ---------------------------------------------------------
bool c3(std::string& note) {
  Rng rng(seed_for(3));
  int violations = 0;
  for (int rep = 0; rep < 200; ++rep) {
    int N = 2 + int(rng() % 11);
    MultiGraph g = make_nice(gen_connected_multigraph(N, rng));
    VSet S = random_proper_subset(N, rng);
    long t = 1 + long(rng() % 20);
    BigRat stay = escape_stay_exact(g, S, t);
    Rat ps = psi(g, S);
    BigRat bound = BigRat(1) - BigRat(t) * BigRat(ps.numerator(), ps.denominator());
    if (stay < bound) ++violations;
  }
  note = "violations=" + std::to_string(violations) + "/200";
  return violations == 0;
}

// ---- 4: mixing-time bound -----------------------------------------------------
bool c4(std::string& note) {
  Rng rng(seed_for(4));
  int violations = 0;
  for (int rep = 0; rep < 100; ++rep) {
    int N = 2 + int(rng() % 11);
    MultiGraph g = make_nice(gen_connected_multigraph(N, rng));
    long t = mixing_time_exact(g, 0.25);
    if (t > spectral_mixing_bound(g)) ++violations;
  }
  note = "violations=" + std::to_string(violations) + "/100";
  return violations == 0;
}

// ---- 5: revealed-conductance laws ---------------------------------------------
bool c5(std::string& note) {
  Rng rng(seed_for(5));
  long checks = 0;
  int violations = 0;
  for (int rep = 0; rep < 300; ++rep) {
    int N = 4 + int(rng() % 7);
    MultiGraph g = gen_connected_multigraph(N, rng);
    int s = 2 + int(rng() % 3);
    if (s > N) s = N;
    Cover part = gen_partition_connected(g, s, rng);
    Rat lambda(1 + (long long)(rng() % 3), 4);
    for (std::uint64_t mask = 1; mask + 1 < (1ull << s); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1) I.push_back(i);
      VSet AI;
      for (int i : I)
        AI.insert(AI.end(), part.sets[i].begin(), part.sets[i].end());
      std::sort(AI.begin(), AI.end());
      Rat psi_count((long long)cut_edges(g, AI), (long long)AI.size());
      for (int ell = 0; ell <= 6; ++ell) {
        Rat nu = revealed_conductance(g, part, ell, lambda, I);
        Rat nu_next = revealed_conductance(g, part, ell + 1, lambda, I);
        if (psi_count > nu) ++violations;
        if (nu_next > nu) ++violations;
        ++checks;
      }
    }
  }
  note = "violations=" + std::to_string(violations) + " over " +
         std::to_string(checks) + " (I, ell) checks";
  return violations == 0;
}

// ---- 6: disjointification expansion law ----------------------------------------
bool c6(std::string& note) {
  // Checks Phi(H[B_i]) >= theta / s^2 in exact arithmetic on random covered
  // graphs. Random overlapping covers violate this bound; the criterion is
  // kept faithful to the claimed law and reports the honest count.
  Rng rng(seed_for(6));
  int violations = 0;
  for (int rep = 0; rep < 100; ++rep) {
    int N = 3 + int(rng() % 5);  // |B_i| <= N*s stays within brute-force reach
    MultiGraph g = make_nice(gen_connected_multigraph(N, rng));
    int s = 2 + int(rng() % 2);
    if (s > N) s = N;
    Cover c = gen_cover_connected(g, s, rng);
    Rat theta = c.theta(g);
    Rat bound = theta / Rat((long long)s * s);
    Disjointification dj = disjointify(g, c);
    bool bad = false;
    for (const VSet& Bi : dj.B.sets) {
      if (Bi.empty()) continue;
      Rat phi_i = phi_graph_bruteforce(induced(dj.H, Bi));
      if (phi_i < bound) bad = true;
    }
    if (bad) ++violations;
  }
  note = "violations=" + std::to_string(violations) + "/100";
  return violations == 0;
}

// ---- 7: walker vs matrix oracle --------------------------------------------------
bool c7(std::string& note) {
  Rng rng(seed_for(7));
  double worst = 0;
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + rep % 3;
    int k = 1 + int(rng() % n);
    int s = 1 + int(rng() % 3);
    Dnf f = gen_random_exact_dnf(n, k, s, rng);
    SatGraph sg = materialize_sat_graph(f);
    Assign y = sg.verts[rng() % sg.verts.size()];
    int yi = sg.index_of(y);
    Oracle o = oracle_of(f);
    SatWalkOracle w{o};
    for (long t : {1L, 5L, 20L}) {
      std::vector<double> emp(sg.verts.size(), 0.0);
      for (long i = 0; i < kWalksPerCase; ++i) {
        Assign e = walk(w, y, t, rng);
        emp[sg.index_of(e)] += 1.0 / double(kWalksPerCase);
      }
      VertexDistribution x0(sg.verts.size(), 0.0);
      x0[yi] = 1.0;
      VertexDistribution exact = walk_distribution(sg.g, x0, t);
      worst = std::max(worst, tv(emp, exact));
    }
  }
  note = "worst TV=" + fmt(worst) + " over 20 DNFs x {1,5,20}";
  return worst <= kTvWalkerVsMatrix;
}

// ---- 8: local-mixing self-certification --------------------------------------------
struct MixFixture {
  std::string name;
  MultiGraph g;
  Cover c;
  int start;
};

MixFixture expander_pair(int a, int b) {
  int na = 1 << a, nb = 1 << b;
  MultiGraph g(na + nb);
  for (int v = 0; v < na; ++v)
    for (int bit = 0; bit < a; ++bit) {
      int u = v ^ (1 << bit);
      if (u > v) g.add_edge(v, u);
    }
  for (int v = 0; v < nb; ++v)
    for (int bit = 0; bit < b; ++bit) {
      int u = v ^ (1 << bit);
      if (u > v) g.add_edge(na + v, na + u);
    }
  g.add_edge(0, na);  // single bridge
  MixFixture fx;
  fx.name = "Q" + std::to_string(a) + "+Q" + std::to_string(b);
  fx.g = make_nice(g);
  VSet A, B;
  for (int v = 0; v < na; ++v) A.push_back(v);
  for (int v = 0; v < nb; ++v) B.push_back(na + v);
  fx.c.sets = {A, B};
  fx.start = na - 1;  // deep inside the first cube
  return fx;
}

bool c8(std::string& note) {
  Rng rng(seed_for(8));
  std::vector<MixFixture> fixtures;
  {
    WackyFixture wf = gen_wacky_fixture(1, {2, 1});
    fixtures.push_back({"wacky", wf.g, wf.c, wf.root});
  }
  fixtures.push_back(expander_pair(3, 4));
  fixtures.push_back(expander_pair(2, 3));

  bool plateau_seen = false;
  double worst_p_gap = 0, worst_tv = 0;
  for (const MixFixture& fx : fixtures) {
    // scan for the strongest event and (for the tree fixture) the plateau
    long best_t = 2;
    double best_p = -1;
    for (long t = 2; t <= 60; ++t) {
      LocalMixResult lm = local_mixing_oracle(fx.g, fx.c, fx.start, t);
      if (lm.p_star > best_p) {
        best_p = lm.p_star;
        best_t = t;
      }
      if (fx.name == "wacky" && t >= 2 && t <= 59 && lm.p_star >= kPlateauLo &&
          lm.p_star <= kPlateauHi)
        plateau_seen = true;
    }
    LocalMixResult lm = local_mixing_oracle(fx.g, fx.c, fx.start, best_t);
    ReplayResult rr =
        replay_local_mixing(fx.g, fx.start, best_t, lm.accept, kReplayTrials, rng);
    worst_p_gap = std::max(worst_p_gap, std::abs(rr.accept_freq - lm.p_star));
    VertexDistribution unif(fx.g.N, 0.0);
    const VSet& A = fx.c.sets[lm.best];
    for (int v : A) unif[v] = 1.0 / double(A.size());
    worst_tv = std::max(worst_tv, tv(rr.hist, unif));
  }
  note = "plateau=" + std::string(plateau_seen ? "yes" : "no") +
         " worst |freq-p*|=" + fmt(worst_p_gap) + " worst TV=" + fmt(worst_tv);
  return plateau_seen && worst_p_gap <= kPStarReplaySlack &&
         worst_tv <= kTvReplay;
}

// ---- 9: list-decoding desk experiment ------------------------------------------------
bool c9(std::string& note) {
  ExperimentSpec spec;
  spec.task = Task::ListDecode;
  Dnf f;
  f.n = 10;
  f.terms = {Term::from_lits({1, 2, 3, 4, 5}),
             Term::from_lits({-1, -2, -3, -4, -5})};
  spec.target = f;
  spec.n = 10;
  spec.k = 5;
  spec.s = 2;
  spec.seed = seed_for(9);
  spec.reps = 200;
  ExperimentReport rep = run(spec);
  double rate = rep.success_rate();
  note = "true-term rate=" + fmt(rate) + " (threshold " + fmt(kListDecodeRate) +
         ", 200 runs)";
  return rate >= kListDecodeRate;
}

// ---- 10: booster contract with the cheating weak learner ------------------------------
bool c10(std::string& note) {
  Rng rng(seed_for(10));
  LearnerConfig cfg;
  const double gamma = 0.05;
  int failures = 0;
  std::string why;
  for (int rep = 0; rep < 20; ++rep) {
    int n = 8 + int(rng() % 7);
    int s = 1 + int(rng() % 4);
    Dnf f = gen_random_exact_dnf(n, 4, s, rng);
    Oracle o = oracle_of(f);
    SampleDistribution d = SampleDistribution::uniform(n);
    Sampler samp = as_sampler(d);
    try {
      BoostResult br =
          dnf_learn(o, samp, cheating_weak_learner(f), gamma, s, cfg, rng);
      double err =
          estimate_error(br.h, o, d, ErrorMode::Exhaustive, 0, rng);
      double cap = 8.0 * s * std::log(1.0 / gamma);
      if (!(err <= 4 * gamma + kErrSlack && br.h.s() <= cap + kSizeSlack)) {
        ++failures;
        why = "err=" + fmt(err) + " terms=" + std::to_string(br.h.s());
      }
    } catch (const std::exception& e) {
      ++failures;
      why = e.what();
    }
  }
  note = "failures=" + std::to_string(failures) + "/20" +
         (why.empty() ? "" : " last: " + why);
  return failures == 0;
}

// ---- 11: exact-learn end-to-end --------------------------------------------------------
bool c11(std::string& note) {
  const double eps = 0.1;
  LearnerConfig cfg;
  Rng meta(seed_for(11));
  // one random product distribution for the whole batch
  std::vector<double> bias(12);
  for (double& b : bias) {
    b = 0.3 + 0.4 * (double(meta()) / double(Rng::max()));
  }
  SampleDistribution dists[2] = {SampleDistribution::uniform(12),
                                 SampleDistribution::product(bias)};
  const char* dist_names[2] = {"uniform", "product"};

  std::string parts;
  bool ok = true;
  for (int di = 0; di < 2; ++di) {
    Rng rng(derive_seed(seed_for(11), di + 1));
    int successes = 0;
    for (int rep = 0; rep < 20; ++rep) {
      int s = 2 + int(rng() % 2);
      Dnf f = gen_random_exact_dnf(12, 4, s, rng);
      Oracle o = oracle_of(f);
      Sampler samp = as_sampler(dists[di]);
      try {
        BoostResult br = dnf_learn(o, samp, make_exact_learn_weak(4, s, cfg),
                                   eps, s, cfg, rng);
        double err =
            estimate_error(br.h, o, dists[di], ErrorMode::Exhaustive, 0, rng);
        double cap = 8.0 * s * std::log(1.0 / eps);
        if (err <= eps + kErrSlack && br.h.s() <= cap + kSizeSlack) ++successes;
      } catch (const std::exception&) {
        // incomplete run counts as a miss
      }
    }
    if (!parts.empty()) parts += " ";
    parts += std::string(dist_names[di]) + "=" + std::to_string(successes) + "/20";
    ok = ok && successes >= 16;
  }
  note = parts + " (need >= 16 each)";
  return ok;
}

// ---- 12: small-k and large-k corners ------------------------------------------------------
bool c12(std::string& note) {
  const double eps = 0.1;
  LearnerConfig cfg;

  // small-k: f = x1 or x2 at n = 10, k = 1, s = 2; 10/10 required
  int small_ok = 0;
  {
    Dnf f;
    f.n = 10;
    f.terms = {Term::from_lits({1}), Term::from_lits({2})};
    SampleDistribution d = SampleDistribution::uniform(10);
    long size_cap = 2 * (long)std::ceil(std::log2(2.0 / eps));
    for (int rep = 0; rep < 10; ++rep) {
      Rng rng(derive_seed(seed_for(12), 1, rep));
      Oracle o = oracle_of(f);
      try {
        Dnf h = learn_small_k(o, d, 1, 2, eps, cfg.delta, cfg, rng);
        double err = estimate_error(h, o, d, ErrorMode::Exhaustive, 0, rng);
        if (err <= eps + kErrSlack && h.s() <= size_cap) ++small_ok;
      } catch (const std::exception&) {
      }
    }
  }

  // large-k: f = x1 and ... and x8 at n = 8 through the dummy-variable
  // wrapper; >= 8/10 required
  int large_ok = 0;
  {
    Dnf f;
    f.n = 8;
    f.terms = {Term::from_lits({1, 2, 3, 4, 5, 6, 7, 8})};
    SampleDistribution d = SampleDistribution::uniform(8);
    for (int rep = 0; rep < 10; ++rep) {
      Rng rng(derive_seed(seed_for(12), 2, rep));
      Oracle o = oracle_of(f);
      InnerLearner inner = [&cfg, &rng](Oracle& f2, const SampleDistribution& d2,
                                        int) -> Dnf {
        Sampler samp = as_sampler(d2);
        return dnf_learn(f2, samp, make_exact_learn_weak(8, 1, cfg), 0.1, 1,
                         cfg, rng)
            .h;
      };
      try {
        Dnf h = large_k_reduction(o, d, 8, inner, cfg, rng);
        double err = estimate_error(h, o, d, ErrorMode::Exhaustive, 0, rng);
        if (err <= eps + kErrSlack) ++large_ok;
      } catch (const std::exception&) {
      }
    }
  }
  note = "small-k " + std::to_string(small_ok) + "/10 (need 10), large-k " +
         std::to_string(large_ok) + "/10 (need >= 8)";
  return small_ok == 10 && large_ok >= 8;
}

// ---- 13: determinism audit -------------------------------------------------------------
bool c13(std::string& note) {
  std::vector<ExperimentSpec> specs;
  {
    // the criterion-9 experiment, verbatim
    ExperimentSpec s;
    s.task = Task::ListDecode;
    Dnf f;
    f.n = 10;
    f.terms = {Term::from_lits({1, 2, 3, 4, 5}),
               Term::from_lits({-1, -2, -3, -4, -5})};
    s.target = f;
    s.n = 10;
    s.k = 5;
    s.s = 2;
    s.seed = seed_for(9);
    s.reps = 200;
    specs.push_back(s);
  }
  {
    ExperimentSpec s;
    s.task = Task::LearnExact;
    s.n = 10;
    s.k = 3;
    s.s = 2;
    s.eps = 0.1;
    s.seed = seed_for(13);
    s.reps = 3;
    specs.push_back(s);
  }
  {
    ExperimentSpec s;
    s.task = Task::LearnSmallK;
    Dnf f;
    f.n = 10;
    f.terms = {Term::from_lits({1}), Term::from_lits({2})};
    s.target = f;
    s.n = 10;
    s.k = 1;
    s.s = 2;
    s.eps = 0.1;
    s.seed = seed_for(13);
    s.reps = 3;
    specs.push_back(s);
  }
  {
    ExperimentSpec s;
    s.task = Task::Boost;
    s.n = 10;
    s.k = 4;
    s.s = 3;
    s.weak = "cheat";
    s.gamma = 0.05;
    s.seed = seed_for(13);
    s.reps = 3;
    specs.push_back(s);
  }
  {
    ExperimentSpec s;
    s.task = Task::GraphAnalyze;
    s.n = 8;
    s.seed = seed_for(13);
    s.reps = 5;
    specs.push_back(s);
    s.task = Task::GraphMix;
    specs.push_back(s);
  }

  for (const ExperimentSpec& s : specs) {
    ExperimentReport a = run(s);
    ExperimentReport b = run(s);
    if (csv_without_seconds(report_csv(a)) !=
        csv_without_seconds(report_csv(b))) {
      note = "csv mismatch on " + task_name(s.task);
      return false;
    }
    if (report_text(a) != report_text(b)) {
      note = "text report mismatch on " + task_name(s.task);
      return false;
    }
  }
  note = "6 task reports byte-identical across re-runs (seconds excluded)";
  return true;
}

struct Criterion {
  int id;
  const char* name;
  bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "Cheeger sandwich on random nice multigraphs", c1},
    {2, "hypercube conductance, exact", c2},
    {3, "escape bound, exact rational", c3},
    {4, "mixing time vs spectral bound", c4},
    {5, "revealed-conductance laws", c5},
    {6, "disjointification expansion law", c6},
    {7, "walker vs matrix endpoint law", c7},
    {8, "local-mixing self-certification", c8},
    {9, "list-decoding desk experiment", c9},
    {10, "booster contract, cheating weak learner", c10},
    {11, "exact-learn end to end", c11},
    {12, "small-k and large-k corners", c12},
    {13, "determinism of reports", c13},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.fn(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    char line[512];
    std::snprintf(line, sizeof line, "criterion %2d %-4s %-45s %s  [%.1fs]",
                  c.id, ok ? "PASS" : "FAIL", c.name, note.c_str(), secs);
    std::cout << line << std::endl;
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
