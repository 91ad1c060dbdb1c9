#pragma once

#include <vector>

#include "qmix/types.hpp"

namespace qmix {

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted
/// descending. Satisfies H = V diag(values) V^dagger up to a relative
/// Frobenius residual of 1e-9.
struct HermEig {
  RVector values;       // descending
  CMatrix vectors;      // unitary, column k pairs with values[k]
};

double hermiticity_error(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = 1e-10);

/// (M + M^dagger) / 2
CMatrix hermitize(const CMatrix& m);

HermEig herm_eig(const CMatrix& h);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-negtol, 0) are clamped to zero, negtol = 1e-8 * max(1, ||P||_F);
/// anything below -100 * negtol is rejected.
CMatrix psd_sqrt(const CMatrix& p);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron_vec(const CVector& a, const CVector& b);

/// Partial trace over the tensor factors not listed in `keep`.
/// `dims` lists the factor dimensions in order; their product must equal the
/// matrix dimension. Kept factors keep their original relative order.
CMatrix partial_trace(const CMatrix& m, const std::vector<Index>& dims,
                      const std::vector<int>& keep);

}  // namespace qmix
