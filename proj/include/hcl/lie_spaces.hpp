#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "hcl/cmatrix.hpp"
#include "hcl/rng.hpp"

namespace hcl {

enum class FamilyKind { su_pq, sp_2n, so_p2, sostar_2n };

/// One of the four classical families with its size parameters.
/// su(p,q) uses (p, q) with p >= q >= 1; the others use p as their n.
struct HermitianFamily {
  FamilyKind kind = FamilyKind::su_pq;
  int p = 0;
  int q = 0;

  static HermitianFamily su(int p, int q);
  static HermitianFamily sp(int n);      // Sp(2n, R), n >= 1
  static HermitianFamily so(int p);      // SO(p, 2), p >= 2
  static HermitianFamily sostar(int n);  // SO*(2n), n >= 2

  int n() const { return p; }
  /// Size of the ambient square matrices holding tangent vectors.
  int ambient() const;
  /// Real rank, i.e. the rank entering the curvature pinching.
  int rank() const;
  std::string name() const;
};

/// Free parameter of a holomorphic tangent direction: a p x q matrix (su),
/// an n x n symmetric matrix (sp), a p-vector stored as p x 1 (so), or an
/// n x n skew-symmetric matrix (so*).
struct TangentParam {
  HermitianFamily family;
  ComplexMatrix payload;
};

struct CurvatureBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Throws PayloadShape if the payload's shape or (anti)symmetry is off.
void validate_payload(const TangentParam& t);

/// Full ambient matrix of the tangent direction; linear and injective in
/// the payload.
ComplexMatrix embed_tangent(const TangentParam& t);

/// Holomorphic sectional curvature -tr([M,M*]^2) / (tr M M*)^2 for the
/// invariant metric g(A,B) = tr(A B*). Throws ZeroTangent below 1e-14.
double sectional_curvature(const TangentParam& t);

CurvatureBounds curvature_bounds(const HermitianFamily& f);

enum class ExtremizeMode { minimize, maximize };

/// Random-restart projected finite-difference gradient search of the
/// curvature over unit-norm payloads. Returns the best parameter found and
/// its curvature value.
std::pair<TangentParam, double> extremize_curvature(const HermitianFamily& f,
                                                    ExtremizeMode mode, int restarts,
                                                    std::uint64_t seed);

/// Gaussian payload projected to the family constraint and normalized.
TangentParam random_tangent(const HermitianFamily& f, Rng& rng);

/// Re-symmetrize / re-skew a raw payload candidate (no-op for su / so).
ComplexMatrix project_payload(const HermitianFamily& f, const ComplexMatrix& raw);

}  // namespace hcl
