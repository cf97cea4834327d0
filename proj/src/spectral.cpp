#include "mixwalk/spectral.hpp"

#include <Eigen/Dense>

namespace mixwalk {

SpectralSummary normalized_laplacian_spectrum(const MultiGraph& g) {
  if (g.N < 1 || g.N > 500) throw std::runtime_error("spectrum: N outside [1,500]");
  Eigen::VectorXd dinv(g.N);
  for (int v = 0; v < g.N; ++v) {
    int d = g.deg(v);
    if (d == 0) throw std::runtime_error("spectrum: zero-degree vertex");
    dinv[v] = 1.0 / std::sqrt(double(d));
  }
  Eigen::MatrixXd L(g.N, g.N);
  for (int i = 0; i < g.N; ++i)
    for (int j = 0; j < g.N; ++j) {
      double a = i == j ? double(g.loops[i]) : double(g.mult[i][j]);
      double l = (i == j ? double(g.deg(i)) : 0.0) - a;
      L(i, j) = dinv[i] * l * dinv[j];
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  // contract: ||L q - lambda q|| <= 1e-8 per pair
  for (int i = 0; i < g.N; ++i) {
    double r = (L * es.eigenvectors().col(i) -
                es.eigenvalues()[i] * es.eigenvectors().col(i))
                   .norm();
    if (r > 1e-8) throw std::runtime_error("eigenpair residual too large");
  }
  SpectralSummary s;
  s.evals.assign(es.eigenvalues().data(), es.eigenvalues().data() + g.N);
  return s;
}

}  // namespace mixwalk
