#pragma once
#include "mixwalk/dist.hpp"
#include "mixwalk/graph.hpp"
#include "mixwalk/oracle.hpp"
#include "mixwalk/term.hpp"

namespace mixwalk {

// Membership-query view of the nice graph on the satisfying points: vertices
// are f^-1(1), edges join satisfying points at Hamming distance 1, and every
// vertex carries as many self-loops as satisfying neighbors.
struct SatWalkOracle {
  Oracle& f;
  int n() const { return f.n(); }
};

// all i with f(y ^ e_i) = 1; issues exactly n membership queries and trusts
// the f(y) = 1 precondition (verification would break the query accounting)
std::vector<int> sat_neighbors(const SatWalkOracle& w, Assign y);

struct WalkConfig {
  long outer_len = 64;      // length M of the outer walk
  long inner_len_max = 64;  // probes run at every length 1..inner_len_max
  int samples_per_probe = 0;  // 0: use default_samples_per_probe(n)
  int repeats = 1;            // union taken over this many seeded reruns
  std::uint64_t seed = 1;
  // The nice chain is the analyzed object (stationary mass proportional to
  // degree, n queries per step). The uniform-laziness chain is the cheap
  // variant: flip one uniform coordinate with prob 1/2 and keep it only if
  // still satisfying (1 query per step, uniform stationary law). Modes are
  // never mixed within a run.
  enum class Chain { Nice, UniformLazy } chain = Chain::Nice;

  void validate(int n) const;
  int probes(int n) const;  // samples_per_probe, resolved
};

int default_samples_per_probe(int n);  // ceil(2 log2 n), minimum 2

// one step; stuck vertices (no satisfying neighbor) self-loop forever
Assign step_nice(const SatWalkOracle& w, Assign y, Rng& rng);
Assign step_uniform_lazy(const SatWalkOracle& w, Assign y, Rng& rng);

// t steps from y; verifies f(y) = 1 once (one query), then exactly t*n
// queries for the nice chain. Appends every visited point (including y) to
// *traj when given.
Assign walk(const SatWalkOracle& w, Assign y, long t, Rng& rng,
            WalkConfig::Chain chain = WalkConfig::Chain::Nice,
            std::vector<Assign>* traj = nullptr);

struct GeneratedTerm {
  Term term;
  long t = 0;    // outer-walk step the probes launched from
  long ell = 0;  // inner walk length
  int repeat = 0;
  std::vector<Assign> endpoints;  // the probe endpoints the term was read off
};

// Outer walk y = Y_0..Y_M; from every Y_t and every inner length ell, runs
// samples_per_probe independent walks and records the largest common term of
// their endpoints. Structural dedup, first occurrence kept. Probe seeds
// derive from (cfg.seed, repeat, t, ell, probe), so results do not depend on
// execution order.
std::vector<GeneratedTerm> generate_list_of_terms(const SatWalkOracle& w, Assign y,
                                                  const WalkConfig& cfg,
                                                  int repeat = 0);

// Rejection-samples a satisfying start from d (at most start_budget draws,
// else throws "target-too-sparse"), then unions generate_list_of_terms over
// cfg.repeats reruns. rng drives only the start search.
struct ListDecodeResult {
  std::vector<GeneratedTerm> terms;
  Assign start = 0;
  long starts_tried = 0;
};
ListDecodeResult list_decode(const SatWalkOracle& w, const SampleDistribution& d,
                             const WalkConfig& cfg, long start_budget, Rng& rng);

// The explicit nice graph on f^-1(1), for checking the walker against exact
// distribution evolution. Isolated satisfying points get one self-loop so the
// walk operator exists (the walker self-loops there too). n <= 20.
struct SatGraph {
  MultiGraph g;
  std::vector<Assign> verts;  // ascending; vertex i of g is verts[i]

  int index_of(Assign y) const;  // -1 when y is not a vertex
};
SatGraph materialize_sat_graph(const Dnf& f);

}  // namespace mixwalk
