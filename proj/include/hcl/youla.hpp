#pragma once

#include <vector>

#include "hcl/cmatrix.hpp"

namespace hcl {

/// Canonical form of a complex skew-symmetric matrix under unitary
/// congruence A -> U^t A U: block diagonal with 2x2 blocks [[0, s],[-s, 0]],
/// s > 0 descending, padded by zeros.
struct YoulaDecomposition {
  ComplexMatrix U;             // unitary
  std::vector<double> sigmas;  // block magnitudes, descending
  double residual = 0.0;       // |U^t A U - canonical| (absolute)

  ComplexMatrix canonical_form(int n) const;
};

/// Throws NotSkew if |A + A^t| > tol * |A|, NoConvergence on eigenspace
/// pairing breakdown.
YoulaDecomposition youla_decompose(const ComplexMatrix& a, double tol = kDefaultTol);

/// Eigenvalues of A*A for skew-symmetric A, returned descending with the
/// forced pairing applied (pair means averaged, kernel values snapped to 0).
/// Throws PairingFailure when values cannot be matched within 1e-8 * max.
std::vector<double> paired_eigenvalues(const ComplexMatrix& a);

}  // namespace hcl
