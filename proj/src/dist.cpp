#include "mixwalk/dist.hpp"

#include <algorithm>
#include <cmath>

namespace mixwalk {

void SampleDistribution::validate() const {
  if (n < 1 || n > kMaxVars)
    throw std::runtime_error("distribution dimension out of range");
  if (kind == Kind::Product) {
    if (int(bias.size()) != n) throw std::runtime_error("bias count != n");
    for (double b : bias)
      if (!(b >= 0.0 && b <= 1.0)) throw std::runtime_error("bias outside [0,1]");
  }
  if (kind == Kind::Explicit) {
    if (support.empty()) throw std::runtime_error("empty explicit support");
    double tot = 0;
    for (auto& [x, w] : support) {
      if (w < 0) throw std::runtime_error("negative weight");
      if (x & ~nmask(n)) throw std::runtime_error("support point exceeds n bits");
      tot += w;
    }
    if (std::abs(tot - 1.0) > 1e-12)
      throw std::runtime_error("explicit weights must sum to 1");
  }
}

SampleDistribution SampleDistribution::product(std::vector<double> biases) {
  SampleDistribution d;
  d.kind = Kind::Product;
  d.n = int(biases.size());
  d.bias = std::move(biases);
  d.validate();
  return d;
}

SampleDistribution SampleDistribution::explicit_support(
    int n, std::vector<std::pair<Assign, double>> pts) {
  SampleDistribution d;
  d.kind = Kind::Explicit;
  d.n = n;
  d.support = std::move(pts);
  d.validate();
  return d;
}

Assign SampleDistribution::sample(Rng& g) const {
  switch (kind) {
    case Kind::Uniform:
      return rand_point(n, g);
    case Kind::Product: {
      Assign x = 0;
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int i = 0; i < n; ++i)
        if (u(g) < bias[i]) x |= 1ull << i;
      return x;
    }
    case Kind::Explicit: {
      if (cum_.empty()) {
        cum_.reserve(support.size());
        double acc = 0;
        for (auto& [x, w] : support) cum_.push_back(acc += w);
      }
      std::uniform_real_distribution<double> u(0.0, cum_.back());
      auto it = std::lower_bound(cum_.begin(), cum_.end(), u(g));
      size_t idx = size_t(it - cum_.begin());
      if (idx >= support.size()) idx = support.size() - 1;
      return support[idx].first;
    }
  }
  throw std::logic_error("unreachable");
}

double SampleDistribution::mass(Assign x) const {
  switch (kind) {
    case Kind::Uniform:
      return std::ldexp(1.0, -n);
    case Kind::Product: {
      double p = 1;
      for (int i = 0; i < n; ++i) p *= ((x >> i) & 1ull) ? bias[i] : 1.0 - bias[i];
      return p;
    }
    case Kind::Explicit: {
      double p = 0;
      for (auto& [y, w] : support)
        if (y == x) p += w;
      return p;
    }
  }
  throw std::logic_error("unreachable");
}

void SampleDistribution::for_each(
    const std::function<void(Assign, double)>& fn) const {
  if (kind == Kind::Explicit) {
    for (auto& [x, w] : support) fn(x, w);
    return;
  }
  if (n > 24) throw std::runtime_error("support too large to enumerate");
  for (Assign x = 0; x < (1ull << n); ++x) fn(x, mass(x));
}

}  // namespace mixwalk
