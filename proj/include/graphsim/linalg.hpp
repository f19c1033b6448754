#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace graphsim {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Small dense complex matrix, row-major. Used for gate matrices,
/// fault unitaries and descriptor fits; dimensions stay tiny.
struct CMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  CVec a;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static CMat eye(std::size_t n);

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

CMat mul(const CMat& lhs, const CMat& rhs);
CVec mul(const CMat& m, const CVec& v);
CMat adjoint(const CMat& m);
CMat kron(const CMat& lhs, const CMat& rhs);
CMat add(const CMat& lhs, const CMat& rhs);
CMat sub(const CMat& lhs, const CMat& rhs);
CMat scale(const CMat& m, cplx factor);

double max_abs_diff(const CMat& lhs, const CMat& rhs);
bool is_unitary(const CMat& m, double tol);

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// On return h_evecs columns are orthonormal eigenvectors, evals ascending.
void hermitian_eig(const CMat& h, std::vector<double>& evals, CMat& evecs);

/// exp(-i t H) for Hermitian H, via eigendecomposition.
CMat expm_i_hermitian(const CMat& h, double t);

/// Largest singular value (computed exactly through hermitian_eig of M^dag M).
double sup_norm(const CMat& m);

}  // namespace graphsim
