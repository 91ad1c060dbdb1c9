#pragma once

#include <utility>
#include <vector>

#include "qmix/random.hpp"
#include "qmix/types.hpp"

namespace qmix {

struct Signal {
  double prob = 0.0;
  CMatrix state;
};

/// Probability-weighted list of density matrices on a common d-dimensional
/// space. Constructed through create(), which validates probabilities and
/// projects each state onto the density-matrix set (symmetrize, clamp
/// eigenvalues in [-1e-8, 0), renormalize the trace); violations beyond
/// those tolerances are rejected. Signals with probability below 1e-12 are
/// dropped.
class Ensemble {
 public:
  static Ensemble create(Index dim, std::vector<Signal> signals);

  Index dim() const { return dim_; }
  const std::vector<Signal>& signals() const { return signals_; }
  std::size_t size() const { return signals_.size(); }
  const Signal& operator[](std::size_t i) const { return signals_[i]; }

 private:
  Ensemble(Index dim, std::vector<Signal> signals)
      : dim_(dim), signals_(std::move(signals)) {}

  Index dim_;
  std::vector<Signal> signals_;
};

/// Ensemble of orthogonal pure states labelled by (block, index-in-block)
/// pairs; the column k of `vectors` carries labels[k] with weight probs[k].
struct EigenEnsemble {
  std::vector<std::pair<int, int>> labels;
  std::vector<double> probs;
  CMatrix vectors;
};

/// rho = sum_i p_i rho_i
CMatrix total_state(const Ensemble& e);

/// S(rho) = -Tr rho log2 rho, in bits.
double von_neumann_entropy(const CMatrix& rho);

double shannon_entropy(const std::vector<double>& p);

/// H(p) = -p log2 p - (1-p) log2 (1-p)
double binary_entropy(double p);

/// I_LH = S(rho) - sum_i p_i S(rho_i)
double levitin_holevo(const Ensemble& e);

/// F(rho, sigma) = [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2
double fidelity(const CMatrix& rho, const CMatrix& sigma);

/// g(p_e) = H(p_e) + p_e log2(d - 1), for d >= 2.
double fano_g(double p_e, Index d);

/// Throws ValidationError unless rho is Hermitian, PSD and unit trace
/// within the stated slack.
void check_density(const CMatrix& rho, double tol = 1e-7);

Ensemble random_ensemble(Index dim, int signals, Rng& rng, bool pure = false);

}  // namespace qmix
