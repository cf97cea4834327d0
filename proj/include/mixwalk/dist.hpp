#pragma once
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mixwalk/bits.hpp"

namespace mixwalk {

// Example distribution over {0,1}^n: uniform, per-coordinate product, or an
// explicit weighted support. All three have exact point masses, which the
// exhaustive error estimator relies on.
struct SampleDistribution {
  enum class Kind { Uniform, Product, Explicit };
  Kind kind = Kind::Uniform;
  int n = 0;
  std::vector<double> bias;                        // Product: Pr[x_i = 1]
  std::vector<std::pair<Assign, double>> support;  // Explicit: (point, weight)

  void validate() const;
  Assign sample(Rng& g) const;
  double mass(Assign x) const;
  // iterate the support with exact masses (2^n points for uniform/product)
  void for_each(const std::function<void(Assign, double)>& fn) const;

  static SampleDistribution uniform(int n) {
    SampleDistribution d;
    d.kind = Kind::Uniform;
    d.n = n;
    return d;
  }
  static SampleDistribution product(std::vector<double> biases);
  static SampleDistribution explicit_support(
      int n, std::vector<std::pair<Assign, double>> pts);

 private:
  mutable std::vector<double> cum_;  // Explicit: cumulative weights, built lazily
};

// Generic draw procedure. The learner's reweighted distributions are samplers
// too, so everything downstream of the booster consumes this shape.
using Sampler = std::function<Assign(Rng&)>;

inline Sampler as_sampler(const SampleDistribution& d) {
  return [&d](Rng& g) { return d.sample(g); };
}

}  // namespace mixwalk
