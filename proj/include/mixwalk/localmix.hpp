#pragma once
#include "mixwalk/walkmat.hpp"

namespace mixwalk {

// Endpoint-event oracle for local mixing. For each cover set A_i the best
// event measurable in (X_t, aux randomness) whose conditional endpoint law is
// exactly uniform on A_i accepts endpoint u in A_i with probability
// min_w mu_t(w) / mu_t(u); its total probability is p_i = |A_i| min_w mu_t(w).
// This certifies a lower bound on the achievable event probability at eps = 0
// (full-path events can only do better).
struct LocalMixResult {
  std::vector<double> mu;      // exact endpoint distribution at time t
  std::vector<double> p;       // p_i per cover set
  int best = -1;               // argmax p_i (ties: lowest index)
  double p_star = 0;
  double tv_best = 0;          // TV(conditional law, uniform on A_best)
  std::vector<double> accept;  // per-vertex acceptance probs for A_best
};

LocalMixResult local_mixing_oracle(const MultiGraph& g, const Cover& c, int v,
                                   long t);

// Monte-Carlo audit of the oracle's event: simulate `trials` walks of length
// t from v, accept endpoint u with probability accept[u].
struct ReplayResult {
  double accept_freq = 0;
  std::vector<double> hist;  // endpoint law conditioned on acceptance
  std::uint64_t accepted = 0;
};

ReplayResult replay_local_mixing(const MultiGraph& g, int v, long t,
                                 const std::vector<double>& accept,
                                 std::uint64_t trials, Rng& rng);

}  // namespace mixwalk
