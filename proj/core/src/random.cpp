#include "qmix/random.hpp"

#include <cmath>

namespace qmix {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  // splitmix64 finalizer applied to a running combination
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(base);
  h = mix(h ^ a);
  h = mix(h ^ b);
  h = mix(h ^ c);
  return h;
}

double std_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

CMatrix ginibre(Index rows, Index cols, Rng& rng) {
  CMatrix g(rows, cols);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = dist(rng);
      const double im = dist(rng);
      g(i, j) = cxd(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

CMatrix haar_unitary(Index dim, Rng& rng) {
  const CMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const cxd d = r(j, j);
    q.col(j) *= (std::abs(d) > 0 ? d / std::abs(d) : cxd(1, 0));
  }
  return q;
}

CMatrix haar_isometry(Index rows, Index cols, Rng& rng) {
  if (cols > rows) {
    throw ValidationError("haar_isometry: more columns than rows");
  }
  return haar_unitary(rows, rng).leftCols(cols);
}

CMatrix random_density(Index dim, Rng& rng, Index rank) {
  if (rank <= 0 || rank > dim) rank = dim;
  const CMatrix g = ginibre(dim, rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

std::vector<double> random_simplex(int k, Rng& rng, double min_weight) {
  if (k < 1) throw ValidationError("random_simplex: k < 1");
  if (min_weight * k >= 1.0) {
    throw ValidationError("random_simplex: min_weight too large");
  }
  std::exponential_distribution<double> dist(1.0);
  std::vector<double> w(k);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    double sum = 0.0;
    for (double& x : w) {
      x = dist(rng);
      sum += x;
    }
    bool ok = true;
    for (double& x : w) {
      x /= sum;
      if (x < min_weight) ok = false;
    }
    if (ok) return w;
  }
  throw InternalError("random_simplex: rejection sampling did not converge");
}

}  // namespace qmix
