#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qmix/types.hpp"

namespace qmix {

/// All randomized routines take an explicit engine so results are
/// reproducible from a single seed.
using Rng = std::mt19937_64;

/// Hash-combines a base seed with stream identifiers, so independent
/// substreams can be derived deterministically.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

double std_normal(Rng& rng);

/// Matrix with i.i.d. standard complex Gaussian entries.
CMatrix ginibre(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix haar_unitary(Index dim, Rng& rng);

/// First `cols` columns of a Haar unitary; rows >= cols.
CMatrix haar_isometry(Index rows, Index cols, Rng& rng);

/// Random density matrix of the given rank (Wishart construction).
CMatrix random_density(Index dim, Rng& rng, Index rank = 0);

/// Random point on the probability simplex; rejection-sampled until every
/// coordinate is at least min_weight.
std::vector<double> random_simplex(int k, Rng& rng, double min_weight = 0.0);

}  // namespace qmix
