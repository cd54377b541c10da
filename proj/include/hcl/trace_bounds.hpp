#pragma once

#include <cstdint>
#include <vector>

#include "hcl/cmatrix.hpp"
#include "hcl/lie_spaces.hpp"

namespace hcl {

/// Linear space of p x q matrices whose nonzero members all sit on the
/// minimal trace-ratio locus: any combination C = sum t_j members[j]
/// satisfies C*C = (sum |t_j|^2) I_q.
struct FlatFamily {
  int p = 0;
  int q = 0;
  std::vector<ComplexMatrix> members;
};

/// tr((A*A)^2) / (tr A*A)^2. Throws ZeroMatrix on (numerically) zero input.
double trace_ratio(const ComplexMatrix& a);

/// Nonnegative residual vanishing exactly on the family's maximal-curvature
/// locus. su / sp / so*-even: |A*A - (tr A*A / q) I|; so(p,2):
/// |v|^4 - |sum v_j^2|^2; so*-odd: spread of the top n-1 eigenvalues of A*A
/// plus the smallest one.
double equality_locus_residual(const HermitianFamily& f, const TangentParam& t);

/// The stacked-identity family A_1, ..., A_m with m = floor(p/q).
FlatFamily standard_flat_family(int p, int q);

/// Sampled check of the FlatFamily combination identity; returns the largest
/// residual |C*C - (sum|t|^2) I| over `tuples` random coefficient tuples.
double flat_family_residual(const FlatFamily& fam, int tuples, Rng& rng);

struct OrthoResult {
  bool dependent = false;
  ComplexMatrix modified;    // B - coefficient * A, untouched scale
  ComplexMatrix normalized;  // modified rescaled back to B'*B' = I (empty if dependent)
  cplx coefficient;          // (lambda - 2 + i(2 - mu)) / 2
  double lambda = 0.0;
  double mu = 0.0;
};

/// Pairwise orthonormalization step for two equality-locus matrices with
/// A*A = B*B = I_q. Extracts lambda from (A+B)*(A+B) and mu from
/// (A+iB)*(A+iB) and subtracts the forced component of B along A.
/// Throws NotScalar when the combinations are not scalar matrices.
OrthoResult orthonormalize_pair(const ComplexMatrix& a, const ComplexMatrix& b);

/// Greedy randomized lower bound for the maximal dimension of a flat linear
/// space of equality-locus tangents.
int max_flat_dimension_search(const HermitianFamily& f, int trials, std::uint64_t seed);

/// Random point on the family's maximal-curvature locus (unit-free scale:
/// su/sp/so* give A with A*A = I-like spectra, so gives v in U(1)*R^p).
TangentParam random_equality_locus_witness(const HermitianFamily& f, Rng& rng);

}  // namespace hcl
