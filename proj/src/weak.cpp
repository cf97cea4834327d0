#include "mixwalk/weak.hpp"

#include <cmath>
#include <stdexcept>

namespace mixwalk {

static std::uint64_t hoeffding_m(double eps, double delta) {
  return std::uint64_t(std::ceil(std::log(4.0 / delta) / (2.0 * eps * eps)));
}

WeakTestResult is_weak_term(const Term& T, Oracle& f, const Sampler& d,
                            double gamma, int s, Rng& g, WeakTestParams params) {
  if (!(gamma > 0 && gamma <= 0.5)) throw std::runtime_error("gamma outside (0,1/2]");
  if (s < 1) throw std::runtime_error("s < 1");
  double ln1g = std::log(1.0 / gamma);
  double delta = params.delta > 0 ? params.delta : 1.0 / (100.0 * s * ln1g);

  WeakTestResult r;
  // (i) Pr[T=1 and f=0], tested at gamma/(2 s ln(1/gamma))
  double e1 = gamma / (4.0 * s * ln1g);
  r.samples1 = hoeffding_m(e1, delta);
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < r.samples1; ++i) {
    Assign x = d(g);
    if (T.sat(x) && !f.query(x)) ++bad;
  }
  r.p1 = double(bad) / double(r.samples1);

  // (ii) Pr[T=1 | f=1] by rejection sampling, tested at 3/(8s)
  double e2 = 1.0 / (8.0 * s);
  r.samples2 = hoeffding_m(e2, delta);
  std::uint64_t budget = std::max<std::uint64_t>(
      64 * r.samples2, std::uint64_t(std::ceil(1.0 / params.sparse_floor)));
  std::uint64_t hits = 0, covered = 0, draws = 0;
  while (hits < r.samples2) {
    if (++draws > budget) throw std::runtime_error("target-too-sparse");
    Assign x = d(g);
    if (!f.query(x)) continue;
    ++hits;
    if (T.sat(x)) ++covered;
  }
  r.p2 = double(covered) / double(r.samples2);

  r.accept = r.p1 <= gamma / (2.0 * s * ln1g) && r.p2 >= 3.0 / (8.0 * s);
  return r;
}

}  // namespace mixwalk
