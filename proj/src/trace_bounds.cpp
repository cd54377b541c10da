#include "hcl/trace_bounds.hpp"

#include <algorithm>
#include <cmath>

namespace hcl {

double trace_ratio(const ComplexMatrix& a) {
  const double nrm = norm_fro(a);
  if (nrm <= 1e-14) fail(errc::zero_matrix, "trace_ratio");
  const ComplexMatrix g = a.adjoint() * a;
  const double t1 = trace(g).real();
  const double t2 = trace(g * g).real();
  return t2 / (t1 * t1);
}

double equality_locus_residual(const HermitianFamily& f, const TangentParam& t) {
  validate_payload(t);
  const ComplexMatrix& a = t.payload;
  if (norm_fro(a) <= 1e-14) fail(errc::zero_tangent, "equality_locus_residual");

  if (f.kind == FamilyKind::so_p2) {
    double n2 = 0.0;
    cplx sq(0.0, 0.0);
    for (int i = 0; i < a.rows(); ++i) {
      n2 += std::norm(a(i, 0));
      sq += a(i, 0) * a(i, 0);
    }
    return n2 * n2 - std::norm(sq);
  }

  const ComplexMatrix g = a.adjoint() * a;
  const int q = g.rows();
  if (f.kind == FamilyKind::sostar_2n && f.p % 2 == 1) {
    // Odd so*: the top n-1 eigenvalues of A*A must agree and the last vanish.
    const EigenResult eig = herm_eig(g, 1e-8);
    double mean = 0.0;
    for (int j = 1; j < q; ++j) mean += eig.values[j];
    mean /= (q - 1);
    double spread = 0.0;
    for (int j = 1; j < q; ++j) spread += (eig.values[j] - mean) * (eig.values[j] - mean);
    return std::sqrt(spread) + std::abs(eig.values[0]);
  }

  const double lam = trace(g).real() / q;
  return norm_fro(g - cplx(lam, 0.0) * ComplexMatrix::identity(q));
}

FlatFamily standard_flat_family(int p, int q) {
  if (q < 1 || p < q) fail(errc::bad_shape, "standard_flat_family needs p >= q >= 1");
  const int m = p / q;
  FlatFamily fam{p, q, {}};
  for (int k = 0; k < m; ++k) {
    ComplexMatrix a(p, q);
    a.set_block(k * q, 0, ComplexMatrix::identity(q));
    fam.members.push_back(std::move(a));
  }
  return fam;
}

double flat_family_residual(const FlatFamily& fam, int tuples, Rng& rng) {
  double worst = 0.0;
  const ComplexMatrix id = ComplexMatrix::identity(fam.q);
  for (int t = 0; t < tuples; ++t) {
    ComplexMatrix c(fam.p, fam.q);
    double s2 = 0.0;
    for (const auto& a : fam.members) {
      const cplx coeff = rng.complex_gaussian();
      s2 += std::norm(coeff);
      c += coeff * a;
    }
    worst = std::max(worst, norm_fro(c.adjoint() * c - cplx(s2, 0.0) * id));
  }
  return worst;
}

OrthoResult orthonormalize_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::shape_mismatch, "orthonormalize_pair");
  const int q = a.cols();
  const ComplexMatrix id = ComplexMatrix::identity(q);
  if (norm_fro(a.adjoint() * a - id) > 1e-8 || norm_fro(b.adjoint() * b - id) > 1e-8)
    fail(errc::not_scalar, "inputs must satisfy A*A = B*B = I_q");

  const cplx i1(0.0, 1.0);
  const ComplexMatrix s1 = (a + b).adjoint() * (a + b);
  const ComplexMatrix s2 = (a + i1 * b).adjoint() * (a + i1 * b);
  OrthoResult res;
  res.lambda = trace(s1).real() / q;
  res.mu = trace(s2).real() / q;
  const double dev1 = norm_fro(s1 - cplx(res.lambda, 0.0) * id);
  const double dev2 = norm_fro(s2 - cplx(res.mu, 0.0) * id);
  if (std::max(dev1, dev2) > 1e-6 * std::max(1.0, std::max(norm_fro(s1), norm_fro(s2))))
    fail(errc::not_scalar, "pair combination is not a scalar matrix");

  res.coefficient = 0.5 * cplx(res.lambda - 2.0, 2.0 - res.mu);
  res.modified = b - res.coefficient * a;
  if (norm_fro(res.modified) <= 1e-10) {
    res.dependent = true;
    return res;
  }
  // B'*B' = (1 - |coeff|^2) I for inputs on the locus, so one scale factor
  // restores normalization.
  const double scale2 = trace(res.modified.adjoint() * res.modified).real() / q;
  res.normalized = res.modified * cplx(1.0 / std::sqrt(scale2), 0.0);
  return res;
}

TangentParam random_equality_locus_witness(const HermitianFamily& f, Rng& rng) {
  switch (f.kind) {
    case FamilyKind::su_pq: {
      for (;;) {
        try {
          return {f, polar_columns(random_gaussian(f.p, f.q, rng))};
        } catch (const Error&) {
          continue;
        }
      }
    }
    case FamilyKind::sp_2n: {
      // W W^t for unitary W is symmetric with A*A = I.
      const ComplexMatrix w = random_unitary(f.p, rng);
      return {f, w * w.transpose()};
    }
    case FamilyKind::so_p2: {
      ComplexMatrix v(f.p, 1);
      double n2 = 0.0;
      for (int i = 0; i < f.p; ++i) {
        const double x = rng.gaussian();
        v(i, 0) = x;
        n2 += x * x;
      }
      const double theta = 2.0 * 3.14159265358979323846 * rng.uniform();
      const cplx phase(std::cos(theta), std::sin(theta));
      v *= phase * cplx(1.0 / std::sqrt(n2), 0.0);
      return {f, v};
    }
    case FamilyKind::sostar_2n: {
      const int n = f.p;
      const int m = n / 2;
      ComplexMatrix j(n, n);
      for (int k = 0; k < m; ++k) {
        j(2 * k, 2 * k + 1) = 1.0;
        j(2 * k + 1, 2 * k) = -1.0;
      }
      const ComplexMatrix w = random_unitary(n, rng);
      return {f, w * j * w.transpose()};
    }
  }
  fail(errc::bad_family, "random_equality_locus_witness");
}

namespace {

// Checks that random combinations of the candidate set stay on the family's
// maximal-curvature locus (the defining property of a flat space).
bool span_is_flat(const HermitianFamily& f, const std::vector<ComplexMatrix>& members,
                  Rng& rng, int tuples, double tol) {
  for (int t = 0; t < tuples; ++t) {
    ComplexMatrix c(members.front().rows(), members.front().cols());
    for (const auto& a : members) c += rng.complex_gaussian() * a;
    const double nc = norm_fro(c);
    if (nc < 1e-6) continue;
    c *= cplx(1.0 / nc, 0.0);
    if (equality_locus_residual(f, {f, c}) > tol) return false;
  }
  return true;
}

// For su(p,q): a fresh locus witness whose columns live in the orthogonal
// complement of everything chosen so far. Such a witness extends the flat
// family exactly; when the complement is too small the family is maximal.
bool propose_su_extension(const std::vector<ComplexMatrix>& members, int p, int q, Rng& rng,
                          ComplexMatrix& out) {
  ComplexMatrix g = random_gaussian(p, q, rng);
  for (const auto& a : members) g -= a * (a.adjoint() * g);
  try {
    out = polar_columns(g);
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace

int max_flat_dimension_search(const HermitianFamily& f, int trials, std::uint64_t seed) {
  if (trials < 1) fail(errc::bad_shape, "max_flat_dimension_search needs trials >= 1");
  Rng rng(seed);
  const bool su = f.kind == FamilyKind::su_pq;
  const int cap = su ? f.p / f.q + 2 : 3;
  int best = 1;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<ComplexMatrix> members{random_equality_locus_witness(f, rng).payload};
    int rejected = 0;
    while (static_cast<int>(members.size()) < cap && rejected < 16) {
      ComplexMatrix cand;
      bool ok = su ? propose_su_extension(members, f.p, f.q, rng, cand)
                   : [&] {
                       cand = random_equality_locus_witness(f, rng).payload;
                       return true;
                     }();
      if (ok) {
        // Clean against each member; any non-scalar combination means the
        // candidate cannot share a flat space with the current family.
        for (const auto& a : members) {
          try {
            const OrthoResult r = orthonormalize_pair(a, cand);
            if (r.dependent) {
              ok = false;
              break;
            }
            cand = r.normalized;
          } catch (const Error&) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        auto extended = members;
        extended.push_back(cand);
        ok = span_is_flat(f, extended, rng, 24, 1e-8);
        if (ok) members.swap(extended);
      }
      if (!ok) ++rejected;
    }
    best = std::max(best, static_cast<int>(members.size()));
  }
  return best;
}

}  // namespace hcl
