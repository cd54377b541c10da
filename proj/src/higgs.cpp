#include "hcl/higgs.hpp"

#include <cmath>

namespace hcl {

namespace {
const cplx i1(0.0, 1.0);
}

CenterElement center_generator(const HermitianFamily& f) {
  switch (f.kind) {
    case FamilyKind::su_pq: {
      const int p = f.p, q = f.q;
      ComplexMatrix z(p + q, p + q);
      const double top = static_cast<double>(q) / (p + q);
      const double bot = -static_cast<double>(p) / (p + q);
      for (int k = 0; k < p; ++k) z(k, k) = i1 * top;
      for (int k = 0; k < q; ++k) z(p + k, p + k) = i1 * bot;
      return {f, z};
    }
    case FamilyKind::sp_2n:
    case FamilyKind::sostar_2n: {
      const int n = f.p;
      ComplexMatrix z(2 * n, 2 * n);
      z.set_block(0, n, 0.5 * ComplexMatrix::identity(n));
      z.set_block(n, 0, -0.5 * ComplexMatrix::identity(n));
      return {f, z};
    }
    case FamilyKind::so_p2: {
      const int p = f.p;
      ComplexMatrix z(p + 2, p + 2);
      z(p, p + 1) = 1.0;
      z(p + 1, p) = -1.0;
      return {f, z};
    }
  }
  fail(errc::bad_family, "center_generator");
}

HiggsElement make_higgs(const TangentParam& plus, const TangentParam& minus) {
  if (plus.family.kind != minus.family.kind || plus.family.p != minus.family.p ||
      plus.family.q != minus.family.q)
    fail(errc::bad_family, "mismatched families");
  HiggsElement h{plus.family, embed_tangent(plus), embed_tangent(minus).adjoint()};

  const ComplexMatrix z = center_generator(h.family).Z;
  const double scale_p = std::max(norm_fro(h.phi_plus), 1e-300);
  const double scale_m = std::max(norm_fro(h.phi_minus), 1e-300);
  if (norm_fro(commutator(z, h.phi_plus) - i1 * h.phi_plus) > 1e-12 * scale_p ||
      norm_fro(commutator(z, h.phi_minus) + i1 * h.phi_minus) > 1e-12 * scale_m)
    fail(errc::eigenspace_violation, "ad(Z) eigenspace equations violated");
  if (std::abs(frobenius_inner(h.phi_plus, h.phi_minus)) > 1e-12 * scale_p * scale_m)
    fail(errc::eigenspace_violation, "eigenspace components are not orthogonal");
  return h;
}

double toledo_density(const HiggsElement& h) {
  const ComplexMatrix z = center_generator(h.family).Z;
  const ComplexMatrix phi = h.phi_plus + h.phi_minus;
  const double via_bracket = frobenius_inner(phi, commutator(phi, i1 * z)).real();
  const double np = std::norm(cplx(norm_fro(h.phi_plus), 0.0));
  const double nm = std::norm(cplx(norm_fro(h.phi_minus), 0.0));
  const double via_split = np - nm;
  if (std::abs(via_bracket - via_split) > 1e-10 * std::max(1.0, np + nm))
    fail(errc::eigenspace_violation, "bracket pairing disagrees with eigenspace split");
  return via_bracket;
}

double energy_density(const HiggsElement& h) {
  const double np = norm_fro(h.phi_plus);
  const double nm = norm_fro(h.phi_minus);
  return np * np + nm * nm;
}

double milnor_wood_bound(double k, int n, int rank, double vol) {
  if (k > 0.0) fail(errc::bad_sign, "curvature lower bound must be <= 0");
  if (vol <= 0.0) fail(errc::bad_sign, "volume must be positive");
  if (n < 1 || rank < 1) fail(errc::bad_shape, "n and rank must be positive");
  return (-2.0 * k / (n + 1)) * rank * vol;
}

}  // namespace hcl
