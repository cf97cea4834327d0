#pragma once
#include "mixwalk/graph.hpp"

namespace mixwalk {

// Ascending eigenvalues of the normalized Laplacian D^{-1/2} (D - A) D^{-1/2}
// (self-loops included in both A's diagonal and D). lambda_1 is 0 up to
// roundoff and everything lies in [0, 2].
struct SpectralSummary {
  std::vector<double> evals;
  double lambda2() const {
    if (evals.size() < 2) throw std::runtime_error("need N >= 2 for lambda2");
    return evals[1];
  }
};

// dense symmetric solve; every eigenpair is residual-checked to 1e-8
SpectralSummary normalized_laplacian_spectrum(const MultiGraph& g);

}  // namespace mixwalk
