#pragma once

#include <vector>

#include "qmix/types.hpp"

namespace qmix {

/// Orthonormal family of operators under the trace inner product
/// <A,B> = Tr(A^dagger B).
struct OperatorBasis {
  Index dim = 0;
  std::vector<CMatrix> elements;

  std::size_t size() const { return elements.size(); }
};

/// Smallest adjoint-closed, identity-containing algebra containing the
/// generators, returned as an orthonormal basis. Basis size is at most dim^2.
OperatorBasis algebra_closure(const std::vector<CMatrix>& generators, Index dim,
                              double tol = kDefaultTol);

/// Orthonormal basis of { X : X G = G X for every generator G }, computed
/// from the nullspace of the stacked commutator maps. Generators must be
/// Hermitian. The basis consists of Hermitian matrices (hence closed under
/// adjoint) and its first element is identity / sqrt(dim).
OperatorBasis commutant_basis(const std::vector<CMatrix>& generators, Index dim,
                              double tol = kDefaultTol);

/// Frobenius norm of the component of m orthogonal to span(basis).
double span_residual(const OperatorBasis& basis, const CMatrix& m);

}  // namespace qmix
