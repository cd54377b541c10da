#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hcl/cmatrix.hpp"
#include "hcl/lie_spaces.hpp"
#include "hcl/report.hpp"

namespace hcl {

/// Element of sl2(R) ~ su(1,1). Canonical data (a, beta) realizes the
/// su(1,1) matrix [[ia, beta],[conj(beta), -ia]]; the sl2(R) presentation
/// [[a', b'],[c', -a']] is linked through the standard Cayley isomorphism
/// (a' = -Im beta, b' = Re beta - a, c' = Re beta + a).
struct Sl2Element {
  double a = 0.0;
  cplx beta{0.0, 0.0};

  static Sl2Element from_su11(double a, cplx beta) { return {a, beta}; }
  static Sl2Element from_sl2r(double a, double b, double c);
  static Sl2Element from_su11_matrix(const ComplexMatrix& m);
  static Sl2Element from_sl2r_matrix(const ComplexMatrix& m);

  ComplexMatrix su11() const;
  ComplexMatrix sl2r() const;
};

/// Canonical maximal homomorphism data for one family: the three basis
/// images of f_*, and the invariant form cutting out g.
struct CanonicalRep {
  HermitianFamily family;
  std::array<ComplexMatrix, 3> f_star_images;
  bool has_rho_tot = false;
  ComplexMatrix defining_form;
};

/// Basis-image map of the canonical Lie algebra homomorphism. Linear in the
/// element. For so*(2n) with odd n the displayed matrix needs J^2 = -I, so
/// the map is realized through the padded even-part homomorphism (J and I
/// carry a trailing zero row/column).
ComplexMatrix f_star(const HermitianFamily& f, const Sl2Element& x);

/// Group-level canonical homomorphism where a closed form exists
/// (su / sp / so). Throws NotInGroup for inputs off the source group,
/// NoClosedForm for so* (group level goes through expm of f_star there).
ComplexMatrix rho_tot(const HermitianFamily& f, const ComplexMatrix& g2);

CanonicalRep canonical_rep(const HermitianFamily& f);

/// Tangent parameter of the direction the raising element is sent to.
TangentParam canonical_tangent(const HermitianFamily& f);

ComplexMatrix defining_form(const HermitianFamily& f);
double algebra_membership_residual(const HermitianFamily& f, const ComplexMatrix& x);
double group_membership_residual(const HermitianFamily& f, const ComplexMatrix& g);

/// Basis of g as a real vector space.
std::vector<ComplexMatrix> algebra_basis(const HermitianFamily& f);

/// Four checks: bracket preservation on random pairs, membership of the
/// images in g, exp-intertwining against rho_tot (skipped where no closed
/// form exists), and the raising image landing on the maximal-curvature
/// locus.
LemmaReport verify_canonical_rep(const HermitianFamily& f, int samples, std::uint64_t seed,
                                 double tol);

struct CentralizerResult {
  HermitianFamily family;
  int dimension = 0;
  std::vector<ComplexMatrix> basis;
};

/// Commutant of the f_star images inside g via nullspace extraction from
/// the real constraint system.
CentralizerResult centralizer(const HermitianFamily& f, double tol = 1e-8);

/// Real dimension of the displayed centralizer group; -1 when no value is
/// asserted (odd so*).
int expected_centralizer_dimension(const HermitianFamily& f);

/// sp: checks the closed-form conjugation identity on the base tangent and
/// the symmetric-unitary logarithm round trip. so* (even n): numerically
/// drives the base tangent line onto random equality-locus lines using
/// exponentials of the non-centralizing factor of k.
LemmaReport adjoint_transitivity_check(const HermitianFamily& f, int trials,
                                       std::uint64_t seed);

/// Real symmetric C with exp(2iC) = S, for unitary symmetric S; principal
/// phases in (-pi, pi].
ComplexMatrix symmetric_unitary_log(const ComplexMatrix& s);

/// The two summands of k for so*(2n), n even: factor 1 is the centralizer
/// of the canonical image, factor 2 its invariant complement.
std::vector<ComplexMatrix> sostar_k_factor_basis(int n, int which);

}  // namespace hcl
