#pragma once
#include <functional>
#include <optional>

#include "mixwalk/dist.hpp"
#include "mixwalk/oracle.hpp"
#include "mixwalk/term.hpp"
#include "mixwalk/walker.hpp"
#include "mixwalk/weak.hpp"

namespace mixwalk {

// All iterated thresholds of the far-point machinery as independent knobs.
// The proofs only use their relative order, which validate() enforces:
//   far_point_threshold < W_drop_distance < far_drop_distance
//     <= far_term_threshold <= expand_radius
// Defaults are desk-scale (n <= 16-ish targets), not asymptotic.
struct LearnerConfig {
  int prune_trials_per_term = 200;
  int expand_radius = 4;          // r_exp: term-distance ball added by expand
  int far_term_threshold = 4;     // d_far: term distance that makes a term "far"
  int far_point_threshold = 2;    // d_pt: sat distance that makes a point "far"
  int W_drop_distance = 3;        // worry-set drop at the current point
  int far_drop_distance = 4;      // worry-set drop after noising
  int covered_coord_cap = 3;      // max opposite-literal hits from A per worry term
  double popular_frac = 0.005;
  double super_popular_frac = 0.01;
  double superpop_required_frac = 0.01;  // required count: frac * (k - |S|)
  double noise_rate_scale = 4.0;  // flip prob = min(1/2, scale / (k - |F|))
  int noise_budget = 64;          // satisfying-draw attempts inside noise()
  int noise_margin = 0;           // noise() requires |F| <= k - margin
  int noise_outer_budget = 200;   // noise retries inside find_far_point step 5
  int S_bruteforce_gap = 2;       // step-1 trigger k - |S| and enumeration radius
  long outer_iterations = 0;      // exact_learn loop count; 0: ceil(64 / eps)
  double gamma = 0.1;             // booster default accuracy
  double delta = 0.05;            // failure budget for empirical estimates
  int C_cap = 8;                  // booster iteration cap: C_cap * s * ln(1/gamma)
  long expand_cap = 2'000'000;    // predicted-output guard for expand/step 1
  int small_k_cap = 3;
  int large_k_margin = 4;         // large-k reduction requires k > n - margin
  WalkConfig walk{16, 48, 0, 1, 1};  // list-generation walks inside the learner

  void validate() const;
};

// worry-set recursion node of the far-point search
struct FarPointSearchState {
  Assign y = 0;
  std::vector<Term> W;  // candidate-list terms still worth worrying about
  std::uint64_t S = 0;  // believed literals of the unknown true term (mask)
  std::uint64_t A = 0;  // coordinates flipped and believed absent (mask)
};

// drops width != k terms, then drops any term with a satisfier falsifying f;
// a true term of f can never be dropped (all its satisfiers satisfy f)
std::vector<Term> prune(Oracle& f, const std::vector<Term>& L, int k,
                        const LearnerConfig& cfg, Rng& rng);

// L plus every width-k term within term distance expand_radius of a member;
// throws "radius too large" when the predicted output exceeds expand_cap
std::vector<Term> expand(const std::vector<Term>& L, int n, int k,
                         const LearnerConfig& cfg);

// every width-k term, ordered by variable combination then polarity
std::vector<Term> all_width_k_terms(int n, int k, long cap = 5'000'000);

// re-randomizes y outside the frozen set F (each coordinate flipped with
// probability min(1/2, noise_rate_scale/(k-|F|))) until f accepts or the
// budget runs out; the returned point always agrees with y on F
std::optional<Assign> noise(Oracle& f, Assign y, std::uint64_t F, int k,
                            const LearnerConfig& cfg, Rng& rng);

// indices whose literal matching y appears in >= frac * |W| terms of W
std::vector<int> popular_coordinates(Assign y, const std::vector<Term>& W, int n,
                                     double frac);

// recursive far-point search; returns a point z with f(z) = 1 and
// sat_distance(z, L) >= far_point_threshold, or nothing. depth_guard 0 means
// automatic (4n + 16); exceeding it throws (misconfiguration, not FAIL).
std::optional<Assign> find_far_point(Oracle& f, Assign y,
                                     const std::vector<Term>& L,
                                     std::vector<Term> W, std::uint64_t S,
                                     std::uint64_t A, int k,
                                     const LearnerConfig& cfg, Rng& rng,
                                     int depth_guard = 0);

struct LearnResult {
  enum class Kind { FoundTerm, SparseZero, Fail } kind = Kind::Fail;
  Term term{};
  int iterations = 0;
};

// grow-by-walking weak-term learner: alternate list-generation from fresh
// satisfying draws with prune/expand sweeps until the list stops growing
LearnResult simple_learning(Oracle& f, const Sampler& d, double eps, int k,
                            const LearnerConfig& cfg, Rng& rng);

// the full weak-term learner: like simple_learning but every iteration walks
// from a far point of the current list instead of a raw satisfying draw
LearnResult exact_learn(Oracle& f, const Sampler& d, double eps, int k, int s,
                        const LearnerConfig& cfg, Rng& rng);

using WeakTermLearner =
    std::function<std::optional<Term>(Oracle&, const Sampler&, double, Rng&)>;

struct BoostResult {
  Dnf h;
  // empirical uncovered-positive mass before each iteration, plus the final
  // estimate that ended the loop
  std::vector<double> uncovered;
};

// covering booster: repeatedly learn a weak term under the reweighted mixture
// (half D|f=0, half D|h=0,f=1) until the uncovered positive mass drops under
// gamma/2; the hypothesis is the disjunction of the learned terms
BoostResult dnf_learn(Oracle& f, const Sampler& d, const WeakTermLearner& weak,
                      double gamma, int s, const LearnerConfig& cfg, Rng& rng);

// adapter: exact_learn as the booster's weak learner
WeakTermLearner make_exact_learn_weak(int k, int s, LearnerConfig cfg);

// small-k corner: PAC-learn via the meta-variable expansion (one boolean
// feature per width-k term) and greedy covering consistent with all samples
Dnf learn_small_k(Oracle& f, const SampleDistribution& d, int k, int s,
                  double eps, double delta, const LearnerConfig& cfg, Rng& rng);

using InnerLearner = std::function<Dnf(Oracle&, const SampleDistribution&, int)>;

// large-k corner: append n dummy variables (ignored by the oracle, uniform in
// samples), learn at dimension 2n, then fix the dummies to the random
// assignment whose restriction measures best (up to 100 tries)
Dnf large_k_reduction(Oracle& f, const SampleDistribution& d, int k,
                      const InnerLearner& inner, const LearnerConfig& cfg,
                      Rng& rng);

enum class ErrorMode { Exhaustive, Sampled };

// Pr_{x~d}[h(x) != f(x)]: exact mass in exhaustive mode (enumerable d,
// n <= 20), Hoeffding estimate on `budget` draws in sampled mode
double estimate_error(const Dnf& h, Oracle& f, const SampleDistribution& d,
                      ErrorMode mode, long budget, Rng& rng);

// guessing wrapper for unknown k and s: sweep k = 1..k_max and s = 1,2,4,...
// <= s_max, validate each candidate hypothesis by sampled error, return the
// first one measuring <= eps
Dnf learn_exact_sweep(Oracle& f, const SampleDistribution& d, double eps,
                      const LearnerConfig& cfg, Rng& rng, int k_max, int s_max);

}  // namespace mixwalk
