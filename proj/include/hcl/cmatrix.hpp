#pragma once

#include <complex>
#include <vector>

#include "hcl/error.hpp"
#include "hcl/rng.hpp"

namespace hcl {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

/// Dense complex matrix, row-major, value semantics. All operations in this
/// module are pure functions; nothing here mutates shared state, so
/// concurrent use from multiple threads is safe.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::vector<cplx> entries);

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<cplx>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  ComplexMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const ComplexMatrix& m);
  ComplexMatrix column(int j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  bool all_finite() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

cplx trace(const ComplexMatrix& a);
double norm_fro(const ComplexMatrix& a);
double norm_max(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Invariant inner product g(A, B) = trace(A B*). Conjugate-symmetric.
/// Throws ShapeMismatch on shape disagreement.
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenResult {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary, column j pairs with values[j]
};

/// Hermitian eigendecomposition by cyclic Jacobi sweeps (cap 100).
/// Throws NonHermitian when the symmetry defect of H exceeds tol * |H|,
/// NoConvergence if the sweep cap is reached.
EigenResult herm_eig(const ComplexMatrix& H, double tol = kDefaultTol);

/// Matrix exponential by argument scaling, series summation and repeated
/// squaring. Relative accuracy ~1e-13 for |M| up to ~10.
ComplexMatrix expm(const ComplexMatrix& M);

/// Orthonormal basis (as columns) of the numerical kernel of a Hermitian
/// matrix: eigenvectors with |eigenvalue| <= max(tol * max(1, |H|), 1e-12).
/// May have zero columns.
ComplexMatrix kernel_basis(const ComplexMatrix& H, double tol = kDefaultTol);

// ---- helpers used across modules ----

ComplexMatrix random_gaussian(int rows, int cols, Rng& rng);

/// Column-polar factor A (A*A)^{-1/2}; requires full column rank.
ComplexMatrix polar_columns(const ComplexMatrix& a);

/// Haar-ish random unitary (polar factor of a Gaussian matrix).
ComplexMatrix random_unitary(int n, Rng& rng);

/// Largest sine of a principal angle between the column spans, symmetrized:
/// max(|(I-P1)V2|, |(I-P2)V1|) in Frobenius norm. Zero iff equal spans.
double subspace_residual(const ComplexMatrix& v1, const ComplexMatrix& v2);

ComplexMatrix hstack(const std::vector<ComplexMatrix>& cols);

}  // namespace hcl
