#include "qmix/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "qmix/linalg.hpp"

namespace qmix {

namespace {

cxd hs_inner(const CMatrix& a, const CMatrix& b) {
  return (a.adjoint() * b).trace();
}

// Projects m onto the orthogonal complement of the (orthonormal) list,
// twice for stability. Returns the residual.
CMatrix project_out(const std::vector<CMatrix>& basis, CMatrix m) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const CMatrix& e : basis) m -= hs_inner(e, m) * e;
  }
  return m;
}

}  // namespace

double span_residual(const OperatorBasis& basis, const CMatrix& m) {
  return project_out(basis.elements, m).norm();
}

OperatorBasis algebra_closure(const std::vector<CMatrix>& generators, Index dim,
                              double tol) {
  for (const CMatrix& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw ValidationError("algebra_closure: generator dimension mismatch");
    }
  }
  const double add_tol = std::max(tol, 1e-8);
  const std::size_t max_size = static_cast<std::size_t>(dim) * dim;

  OperatorBasis basis;
  basis.dim = dim;
  std::size_t fresh_from = 0;

  auto try_add = [&](const CMatrix& candidate) {
    if (basis.size() >= max_size) return false;
    CMatrix r = project_out(basis.elements, candidate);
    const double n = r.norm();
    if (n <= add_tol * std::max(1.0, candidate.norm())) return false;
    basis.elements.push_back(r / n);
    return true;
  };

  try_add(CMatrix::Identity(dim, dim));
  for (const CMatrix& g : generators) {
    try_add(g);
    try_add(g.adjoint());
  }

  // Close under products: multiply every new element against the whole
  // basis in both orders until nothing new appears.
  while (fresh_from < basis.size() && basis.size() < max_size) {
    const std::size_t fresh_to = basis.size();
    for (std::size_t i = fresh_from; i < fresh_to; ++i) {
      for (std::size_t j = 0; j < fresh_to && basis.size() < max_size; ++j) {
        try_add(basis.elements[i] * basis.elements[j]);
        try_add(basis.elements[j] * basis.elements[i]);
      }
    }
    fresh_from = fresh_to;
  }
  return basis;
}

OperatorBasis commutant_basis(const std::vector<CMatrix>& generators, Index dim,
                              double tol) {
  for (const CMatrix& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw ValidationError("commutant_basis: generator dimension mismatch");
    }
    if (!is_hermitian(g, 1e-8 * std::max(1.0, g.norm()))) {
      throw ValidationError("commutant_basis: generators must be Hermitian");
    }
  }
  const Index n2 = dim * dim;

  // Gram matrix of the stacked maps X -> X G - G X (column-major vec):
  // L = G^T (x) I - I (x) G, M = sum L^dagger L. The nullspace of M is the
  // nullspace of the stack; eigenvalues of M are squared singular values.
  CMatrix gram = CMatrix::Zero(n2, n2);
  const CMatrix id = CMatrix::Identity(dim, dim);
  for (const CMatrix& g : generators) {
    CMatrix l = kron(g.transpose(), id) - kron(id, g);
    gram.noalias() += l.adjoint() * l;
  }

  OperatorBasis out;
  out.dim = dim;
  std::vector<CMatrix> herm;
  herm.push_back(CMatrix::Identity(dim, dim) / std::sqrt(double(dim)));

  if (generators.empty()) {
    // Commutant of the empty set is the full matrix space.
    for (Index a = 0; a < dim; ++a) {
      for (Index b = a; b < dim; ++b) {
        CMatrix e = CMatrix::Zero(dim, dim);
        if (a == b) {
          e(a, a) = 1.0;
        } else {
          e(a, b) = e(b, a) = 1.0;
        }
        CMatrix r = project_out(herm, e);
        if (r.norm() > 1e-12) herm.push_back(r / r.norm());
        if (a != b) {
          CMatrix f = CMatrix::Zero(dim, dim);
          f(a, b) = cxd(0, 1);
          f(b, a) = cxd(0, -1);
          r = project_out(herm, f);
          if (r.norm() > 1e-12) herm.push_back(r / r.norm());
        }
      }
    }
    out.elements = std::move(herm);
    return out;
  }

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw InternalError("commutant_basis: eigensolver failed");
  }
  const RVector evals = solver.eigenvalues();  // ascending, >= 0 up to noise
  const double lam_max = std::max(evals[n2 - 1], 0.0);

  // Effective singular-value cutoff. The Gram route squares singular values,
  // so the requested relative threshold is floored at the resolvable limit
  // sqrt(dim^2 * machine_eps).
  const double eps = std::numeric_limits<double>::epsilon();
  const double rel = std::max(tol, 32.0 * std::sqrt(double(n2) * eps));
  const double cut = lam_max * rel * rel;

  for (Index k = 0; k < n2; ++k) {
    if (evals[k] > cut) break;
    CMatrix x = Eigen::Map<const CMatrix>(solver.eigenvectors().col(k).data(), dim, dim);
    // Split into Hermitian parts; the commutant is adjoint-closed, so the
    // Hermitian elements span it over the reals and hence over C.
    const CMatrix h1 = hermitize(x);
    const CMatrix h2 = hermitize(cxd(0, -1) * x);
    for (const CMatrix* h : {&h1, &h2}) {
      CMatrix r = project_out(herm, *h);
      const double n = r.norm();
      if (n > 1e-7) herm.push_back(hermitize(r / n));
    }
  }
  out.elements = std::move(herm);
  return out;
}

}  // namespace qmix
