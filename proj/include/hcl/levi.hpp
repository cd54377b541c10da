#pragma once

#include <cstdint>
#include <vector>

#include "hcl/cmatrix.hpp"
#include "hcl/report.hpp"

namespace hcl {

/// Coordinates a_1..a_{n(n-1)/2} of an n x n skew-symmetric matrix, filling
/// the strict upper triangle row by row (stored 0-based here).
struct SkewCoords {
  int n = 5;
  std::vector<cplx> a;

  SkewCoords(int n_, std::vector<cplx> a_);
};

/// Hermitian coordinate form of the defining function's mixed second
/// derivatives; Q(j,k) = d^2 F / (da_k d conj(a_j)).
struct LeviForm {
  int n = 5;
  ComplexMatrix Q;
};

int skew_coord_count(int n);
/// (row, col) of coordinate index j, 0-based, row-major strict upper triangle.
std::pair<int, int> skew_coord_position(int n, int j);

ComplexMatrix embed_skew(const SkewCoords& c);
SkewCoords extract_skew(const ComplexMatrix& a);

/// Base point with unit entries at positions (1,2), (3,4) (and (5,6) for
/// n = 7): the rank-maximal point of the flat locus.
SkewCoords skew_base_point(int n);

/// Defining function of the maximal-curvature locus:
/// (tr A*A)^2 - 4 tr((A*A)^2) for n = 5, coefficient 6 for n = 7.
/// Nonpositive on skew matrices, zero exactly on the locus.
double big_F(int n, const ComplexMatrix& a);

/// Companion cubic invariant for n = 7: (tr A*A)^3 - 36 tr((A*A)^3).
/// Computed and reported only; the kernel argument does not use it.
double cubic_invariant(const ComplexMatrix& a);

/// Closed-form Levi form of F at c0, cross-validated entrywise against the
/// finite-difference oracle before being returned.
LeviForm levi_form_at(int n, const SkewCoords& c0);

/// Finite-difference oracle for the Levi form (central differences, default
/// step 1e-5, extended-precision function evaluations).
ComplexMatrix levi_form_fd(int n, const SkewCoords& c0, double step = 1e-5);

/// Full report: Q at the base point is negative semi-definite, its kernel
/// has the forced dimension (5 or 7), the n = 5 kernel matches the explicit
/// basis, and the restricted slice identity / negativity holds on random
/// kernel points.
LemmaReport verify_negative_semidefinite_kernel(int n, int samples = 1000,
                                                std::uint64_t seed = 42);

}  // namespace hcl
