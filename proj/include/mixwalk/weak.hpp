#pragma once
#include "mixwalk/dist.hpp"
#include "mixwalk/oracle.hpp"
#include "mixwalk/term.hpp"

namespace mixwalk {

// Two-sided empirical test for a weak term. Population conditions:
//   (i)  Pr[T=1 and f=0]  <= gamma / (s ln(1/gamma))
//   (ii) Pr[T=1 | f=1]    >= 1/(2s)
// The test estimates both probabilities to Hoeffding accuracy gamma/(4 s
// ln(1/gamma)) resp. 1/(8s) (each failing with prob <= delta/2) and accepts at
// the midpoints gamma/(2 s ln(1/gamma)) and 3/(8s), so terms satisfying the
// population conditions pass and terms twice as bad fail, each w.p. >= 1-delta.
struct WeakTestResult {
  bool accept = false;
  double p1 = 0;  // estimate of Pr[T=1 and f=0]
  double p2 = 0;  // estimate of Pr[T=1 | f=1]
  std::uint64_t samples1 = 0, samples2 = 0;
};

struct WeakTestParams {
  double delta = -1;      // <=0: use 1/(100 s ln(1/gamma))
  double sparse_floor = 1.0 / (1ull << 20);  // min tolerated Pr[f=1]
};

WeakTestResult is_weak_term(const Term& T, Oracle& f, const Sampler& d,
                            double gamma, int s, Rng& g,
                            WeakTestParams params = {});

// sample a uniformly random satisfier of T (free coordinates uniform)
inline Assign sample_term_satisfying(const Term& T, int n, Rng& g) {
  Assign x = rand_point(n, g);
  return (x & ~(T.pos | T.neg)) | T.pos;
}

}  // namespace mixwalk
