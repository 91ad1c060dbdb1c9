#include "qmix/ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "qmix/linalg.hpp"

namespace qmix {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

Ensemble Ensemble::create(Index dim, std::vector<Signal> signals) {
  if (dim < 1) throw ValidationError("ensemble: dim must be positive");

  std::vector<Signal> kept;
  kept.reserve(signals.size());
  double psum = 0.0;
  for (auto& s : signals) {
    if (s.prob < 0.0) throw ValidationError("ensemble: negative probability");
    psum += s.prob;
    if (s.prob < 1e-12) continue;  // support definitions assume p_i > 0
    kept.push_back(std::move(s));
  }
  if (kept.empty()) throw ValidationError("ensemble: no signals with positive probability");
  if (std::abs(psum - 1.0) > 1e-9) {
    throw ValidationError("ensemble: probabilities do not sum to 1 within 1e-9");
  }
  double kept_sum = 0.0;
  for (const auto& s : kept) kept_sum += s.prob;
  for (auto& s : kept) s.prob /= kept_sum;

  for (auto& s : kept) {
    CMatrix& rho = s.state;
    if (rho.rows() != dim || rho.cols() != dim) {
      throw ValidationError("ensemble: state dimension mismatch");
    }
    if (hermiticity_error(rho) > 1e-8) {
      throw ValidationError("ensemble: state is not Hermitian within tolerance");
    }
    rho = hermitize(rho);
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) {
      throw ValidationError("ensemble: state trace differs from 1 beyond 1e-9");
    }
    HermEig eig = herm_eig(rho);
    double vmin = eig.values.minCoeff();
    if (vmin < -1e-8) {
      throw ValidationError("ensemble: state has eigenvalue below -1e-8");
    }
    if (vmin < 0.0 || std::abs(tr - 1.0) > 1e-15) {
      RVector clamped = eig.values.cwiseMax(0.0);
      clamped /= clamped.sum();
      rho = hermitize(eig.vectors * clamped.asDiagonal() * eig.vectors.adjoint());
    }
  }
  return Ensemble(dim, std::move(kept));
}

CMatrix total_state(const Ensemble& e) {
  CMatrix rho = CMatrix::Zero(e.dim(), e.dim());
  for (const auto& s : e.signals()) rho += s.prob * s.state;
  return hermitize(rho);
}

void check_density(const CMatrix& rho, double tol) {
  if (rho.rows() != rho.cols()) throw ValidationError("density: not square");
  if (hermiticity_error(rho) > tol) throw ValidationError("density: not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol) {
    throw ValidationError("density: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitize(rho));
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw ValidationError("density: negative eigenvalue");
  }
}

double von_neumann_entropy(const CMatrix& rho) {
  check_density(rho);
  HermEig eig = herm_eig(hermitize(rho));
  double s = 0.0;
  for (Index k = 0; k < eig.values.size(); ++k) {
    s -= xlog2x(std::clamp(eig.values[k], 0.0, 1.0));
  }
  return std::max(s, 0.0);
}

double shannon_entropy(const std::vector<double>& p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw ValidationError("shannon_entropy: negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("shannon_entropy: probabilities do not sum to 1");
  }
  double s = 0.0;
  for (double x : p) s -= xlog2x(std::max(x, 0.0));
  return std::max(s, 0.0);
}

double binary_entropy(double p) {
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double levitin_holevo(const Ensemble& e) {
  double avg = 0.0;
  for (const auto& s : e.signals()) avg += s.prob * von_neumann_entropy(s.state);
  const double total = von_neumann_entropy(total_state(e));
  return std::clamp(total - avg, 0.0, total);
}

double fidelity(const CMatrix& rho, const CMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw ValidationError("fidelity: dimension mismatch");
  }
  check_density(rho);
  check_density(sigma);
  const CMatrix s = psd_sqrt(rho);
  HermEig eig = herm_eig(hermitize(s * sigma * s));
  double tr = 0.0;
  for (Index k = 0; k < eig.values.size(); ++k) {
    tr += std::sqrt(std::max(eig.values[k], 0.0));
  }
  return std::clamp(tr * tr, 0.0, 1.0);
}

double fano_g(double p_e, Index d) {
  if (d < 2) throw ValidationError("fano_g: d must be at least 2");
  if (p_e < -1e-12 || p_e > 1.0 + 1e-12) {
    throw ValidationError("fano_g: p_e outside [0,1]");
  }
  p_e = std::clamp(p_e, 0.0, 1.0);
  return binary_entropy(p_e) + p_e * std::log2(double(d - 1));
}

Ensemble random_ensemble(Index dim, int signals, Rng& rng, bool pure) {
  std::vector<Signal> sig(signals);
  const std::vector<double> probs = random_simplex(signals, rng, 0.02);
  for (int i = 0; i < signals; ++i) {
    sig[i].prob = probs[i];
    sig[i].state = random_density(dim, rng, pure ? 1 : 0);
  }
  return Ensemble::create(dim, std::move(sig));
}

}  // namespace qmix
