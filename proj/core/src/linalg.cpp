#include "qmix/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmix {

double hermiticity_error(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_error(m) <= tol;
}

CMatrix hermitize(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

HermEig herm_eig(const CMatrix& h) {
  if (h.rows() != h.cols()) {
    throw ValidationError("herm_eig: matrix is not square");
  }
  if (!is_hermitian(h, 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff()))) {
    throw ValidationError("herm_eig: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitize(h));
  if (solver.info() != Eigen::Success) {
    throw InternalError("herm_eig: eigensolver failed to converge");
  }
  const Index n = h.rows();
  HermEig out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  (void)n;
  return out;
}

CMatrix psd_sqrt(const CMatrix& p) {
  HermEig eig = herm_eig(p);
  const double negtol = 1e-8 * std::max(1.0, p.norm());
  RVector vals = eig.values;
  for (Index k = 0; k < vals.size(); ++k) {
    if (vals[k] < -100.0 * negtol) {
      throw ValidationError("psd_sqrt: matrix is not positive semidefinite");
    }
    vals[k] = std::sqrt(std::max(vals[k], 0.0));
  }
  CMatrix s = eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
  return hermitize(s);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron_vec(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<Index>& dims,
                      const std::vector<int>& keep) {
  if (m.rows() != m.cols()) {
    throw ValidationError("partial_trace: matrix is not square");
  }
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw ValidationError("partial_trace: factor dimension < 1");
    total *= d;
  }
  if (total != m.rows()) {
    throw ValidationError("partial_trace: factor dimensions do not match matrix");
  }
  const int f = static_cast<int>(dims.size());
  std::vector<bool> kept(f, false);
  for (int k : keep) {
    if (k < 0 || k >= f) throw ValidationError("partial_trace: keep index out of range");
    kept[k] = true;
  }

  // strides[i] = product of dims after factor i
  std::vector<Index> strides(f, 1);
  for (int i = f - 2; i >= 0; --i) strides[i] = strides[i + 1] * dims[i + 1];

  std::vector<int> kidx, tidx;
  for (int i = 0; i < f; ++i) (kept[i] ? kidx : tidx).push_back(i);

  Index dim_keep = 1, dim_trace = 1;
  for (int i : kidx) dim_keep *= dims[i];
  for (int i : tidx) dim_trace *= dims[i];

  // flat offset of a keep (resp. trace) multi-index in the full space
  auto offset = [&](const std::vector<int>& which, Index flat) {
    Index off = 0;
    for (int j = static_cast<int>(which.size()) - 1; j >= 0; --j) {
      const int i = which[j];
      off += (flat % dims[i]) * strides[i];
      flat /= dims[i];
    }
    return off;
  };

  std::vector<Index> keep_off(dim_keep), trace_off(dim_trace);
  for (Index r = 0; r < dim_keep; ++r) keep_off[r] = offset(kidx, r);
  for (Index t = 0; t < dim_trace; ++t) trace_off[t] = offset(tidx, t);

  CMatrix out = CMatrix::Zero(dim_keep, dim_keep);
  for (Index r = 0; r < dim_keep; ++r) {
    for (Index c = 0; c < dim_keep; ++c) {
      cxd acc = 0.0;
      for (Index t = 0; t < dim_trace; ++t) {
        acc += m(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace qmix
