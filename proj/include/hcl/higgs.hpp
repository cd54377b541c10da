#pragma once

#include "hcl/cmatrix.hpp"
#include "hcl/lie_spaces.hpp"

namespace hcl {

/// Generator of the center of k normalized to eigenvalues +-i on the
/// complexified tangent space: [Z, M] = iM for every embedded tangent M.
struct CenterElement {
  HermitianFamily family;
  ComplexMatrix Z;
};

CenterElement center_generator(const HermitianFamily& f);

/// Fiberwise Higgs pair: phi_plus in the +i eigenspace of ad(Z), phi_minus
/// in the -i eigenspace (realized as adjoints of embedded tangents).
struct HiggsElement {
  HermitianFamily family;
  ComplexMatrix phi_plus;
  ComplexMatrix phi_minus;
};

/// Builds the pair from two tangent parameters; phi_minus is the adjoint
/// embedding of `minus`. Validates the ad(Z) eigenspace equations within
/// 1e-12 and throws EigenspaceViolation otherwise.
HiggsElement make_higgs(const TangentParam& plus, const TangentParam& minus);

/// Re<Phi, [Phi, iZ]> with Phi = phi_plus + phi_minus. Computed both ways
/// (bracket pairing and |Phi+|^2 - |Phi-|^2) and cross-checked internally.
double toledo_density(const HiggsElement& h);

/// |phi_plus|^2 + |phi_minus|^2; always >= |toledo_density|.
double energy_density(const HiggsElement& h);

/// Bound arithmetic: (-2k / (n+1)) * rank * vol. Throws BadSign for k > 0
/// or vol <= 0.
double milnor_wood_bound(double k, int n, int rank, double vol);

}  // namespace hcl
