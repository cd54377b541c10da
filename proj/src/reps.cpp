#include "hcl/reps.hpp"

#include <algorithm>
#include <cmath>

#include "hcl/trace_bounds.hpp"

namespace hcl {

namespace {

const cplx i1(0.0, 1.0);

ComplexMatrix sostar_hermitian_form(int n) {
  ComplexMatrix h(2 * n, 2 * n);
  h.set_block(0, n, i1 * ComplexMatrix::identity(n));
  h.set_block(n, 0, -i1 * ComplexMatrix::identity(n));
  return h;
}

// Block J for so*: [[0, I_m],[-I_m, 0]] with m = floor(n/2); for odd n the
// last row and column stay zero.
ComplexMatrix sostar_J(int n) {
  const int m = n / 2;
  ComplexMatrix j(n, n);
  j.set_block(0, m, ComplexMatrix::identity(m));
  j.set_block(m, 0, -ComplexMatrix::identity(m));
  return j;
}

ComplexMatrix sostar_E(int n) {
  ComplexMatrix e = ComplexMatrix::identity(n);
  if (n % 2 == 1) e(n - 1, n - 1) = 0.0;
  return e;
}

double imag_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s += v.imag() * v.imag();
  return std::sqrt(s);
}

}  // namespace

Sl2Element Sl2Element::from_sl2r(double a, double b, double c) {
  // Inverse Cayley: a' = (c - b)/2, beta = (b + c)/2 - i a.
  return {(c - b) / 2.0, cplx((b + c) / 2.0, -a)};
}

Sl2Element Sl2Element::from_su11_matrix(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) fail(errc::bad_shape, "from_su11_matrix");
  return {m(0, 0).imag(), m(0, 1)};
}

Sl2Element Sl2Element::from_sl2r_matrix(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) fail(errc::bad_shape, "from_sl2r_matrix");
  return from_sl2r(m(0, 0).real(), m(0, 1).real(), m(1, 0).real());
}

ComplexMatrix Sl2Element::su11() const {
  ComplexMatrix m(2, 2);
  m(0, 0) = i1 * a;
  m(0, 1) = beta;
  m(1, 0) = std::conj(beta);
  m(1, 1) = -i1 * a;
  return m;
}

ComplexMatrix Sl2Element::sl2r() const {
  const double ar = -beta.imag();
  const double b = beta.real() - a;
  const double c = beta.real() + a;
  ComplexMatrix m(2, 2);
  m(0, 0) = ar;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = -ar;
  return m;
}

ComplexMatrix defining_form(const HermitianFamily& f) {
  switch (f.kind) {
    case FamilyKind::su_pq: {
      ComplexMatrix j = ComplexMatrix::identity(f.p + f.q);
      for (int k = f.p; k < f.p + f.q; ++k) j(k, k) = -1.0;
      return j;
    }
    case FamilyKind::sp_2n: {
      const int n = f.p;
      ComplexMatrix o(2 * n, 2 * n);
      o.set_block(0, n, ComplexMatrix::identity(n));
      o.set_block(n, 0, -ComplexMatrix::identity(n));
      return o;
    }
    case FamilyKind::so_p2: {
      ComplexMatrix j = ComplexMatrix::identity(f.p + 2);
      j(f.p, f.p) = -1.0;
      j(f.p + 1, f.p + 1) = -1.0;
      return j;
    }
    case FamilyKind::sostar_2n: return sostar_hermitian_form(f.p);
  }
  fail(errc::bad_family, "defining_form");
}

ComplexMatrix f_star(const HermitianFamily& f, const Sl2Element& x) {
  switch (f.kind) {
    case FamilyKind::su_pq: {
      const int p = f.p, q = f.q;
      ComplexMatrix m(p + q, p + q);
      for (int k = 0; k < q; ++k) {
        m(k, k) = i1 * x.a;
        m(p + k, p + k) = -i1 * x.a;
        m(k, p + k) = x.beta;
        m(p + k, k) = std::conj(x.beta);
      }
      // The p - q middle coordinates stay fixed: a nonzero middle block
      // would break tracelessness, so the image keeps 0 there.
      return m;
    }
    case FamilyKind::sp_2n: {
      const ComplexMatrix x2 = x.sl2r();
      const int n = f.p;
      ComplexMatrix m(2 * n, 2 * n);
      m.set_block(0, 0, x2(0, 0) * ComplexMatrix::identity(n));
      m.set_block(0, n, x2(0, 1) * ComplexMatrix::identity(n));
      m.set_block(n, 0, x2(1, 0) * ComplexMatrix::identity(n));
      m.set_block(n, n, x2(1, 1) * ComplexMatrix::identity(n));
      return m;
    }
    case FamilyKind::so_p2: {
      const int n = f.p;
      const double b = x.beta.real();
      const double c = -x.beta.imag();
      ComplexMatrix m(n + 2, n + 2);
      m(0, n) = 2.0 * b;
      m(0, n + 1) = 2.0 * c;
      m(n, 0) = 2.0 * b;
      m(n + 1, 0) = 2.0 * c;
      m(n, n + 1) = 2.0 * x.a;
      m(n + 1, n) = -2.0 * x.a;
      return m;
    }
    case FamilyKind::sostar_2n: {
      const int n = f.p;
      const double b = x.beta.real();
      const double c = -x.beta.imag();
      const ComplexMatrix j = sostar_J(n);
      const ComplexMatrix e = sostar_E(n);
      ComplexMatrix m(2 * n, 2 * n);
      m.set_block(0, 0, (i1 * b) * j);
      m.set_block(0, n, x.a * e + (i1 * c) * j);
      m.set_block(n, 0, -x.a * e + (i1 * c) * j);
      m.set_block(n, n, (-i1 * b) * j);
      return m;
    }
  }
  fail(errc::bad_family, "f_star");
}

namespace {

void check_su11_group(const ComplexMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) fail(errc::bad_shape, "2x2 group element expected");
  const cplx det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  const double scale = std::max(1.0, norm_fro(g));
  if (std::abs(g(1, 0) - std::conj(g(0, 1))) > 1e-8 * scale ||
      std::abs(g(1, 1) - std::conj(g(0, 0))) > 1e-8 * scale || std::abs(det - 1.0) > 1e-8)
    fail(errc::not_in_group, "not an SU(1,1) element");
}

void check_sl2r_group(const ComplexMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) fail(errc::bad_shape, "2x2 group element expected");
  const cplx det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  if (imag_norm(g) > 1e-8 * std::max(1.0, norm_fro(g)) || std::abs(det - 1.0) > 1e-8)
    fail(errc::not_in_group, "not an SL(2,R) element");
}

}  // namespace

ComplexMatrix rho_tot(const HermitianFamily& f, const ComplexMatrix& g2) {
  switch (f.kind) {
    case FamilyKind::su_pq: {
      check_su11_group(g2);
      const int p = f.p, q = f.q;
      const cplx alpha = g2(0, 0), beta = g2(0, 1);
      ComplexMatrix m = ComplexMatrix::identity(p + q);
      for (int k = 0; k < q; ++k) {
        m(k, k) = alpha;
        m(p + k, p + k) = std::conj(alpha);
        m(k, p + k) = beta;
        m(p + k, k) = std::conj(beta);
      }
      return m;
    }
    case FamilyKind::sp_2n: {
      check_sl2r_group(g2);
      const int n = f.p;
      ComplexMatrix m(2 * n, 2 * n);
      m.set_block(0, 0, g2(0, 0) * ComplexMatrix::identity(n));
      m.set_block(0, n, g2(0, 1) * ComplexMatrix::identity(n));
      m.set_block(n, 0, g2(1, 0) * ComplexMatrix::identity(n));
      m.set_block(n, n, g2(1, 1) * ComplexMatrix::identity(n));
      return m;
    }
    case FamilyKind::so_p2: {
      check_su11_group(g2);
      const int n = f.p;
      const cplx alpha = g2(0, 0), beta = g2(0, 1);
      ComplexMatrix m = ComplexMatrix::identity(n + 2);
      const cplx ab_bar = alpha * std::conj(beta);
      const cplx ab = alpha * beta;
      const cplx sum2 = alpha * alpha + beta * beta;
      const cplx diff2 = alpha * alpha - beta * beta;
      m(0, 0) = 2.0 * std::norm(beta) + 1.0;
      m(0, n) = 2.0 * ab_bar.real();
      m(0, n + 1) = 2.0 * ab_bar.imag();
      m(n, 0) = 2.0 * ab.real();
      m(n + 1, 0) = -2.0 * ab.imag();
      m(n, n) = sum2.real();
      // The (n, n+1) entry must read Im(alpha^2 - beta^2): with the
      // plus-sign variant the map stops being multiplicative and no longer
      // matches expm of the algebra-level map.
      m(n, n + 1) = diff2.imag();
      m(n + 1, n) = -sum2.imag();
      m(n + 1, n + 1) = diff2.real();
      return m;
    }
    case FamilyKind::sostar_2n:
      fail(errc::no_closed_form, "so* group level goes through expm(f_star(.))");
  }
  fail(errc::bad_family, "rho_tot");
}

CanonicalRep canonical_rep(const HermitianFamily& f) {
  CanonicalRep cr;
  cr.family = f;
  if (f.kind == FamilyKind::sp_2n) {
    cr.f_star_images = {f_star(f, Sl2Element::from_sl2r(1, 0, 0)),
                        f_star(f, Sl2Element::from_sl2r(0, 1, 0)),
                        f_star(f, Sl2Element::from_sl2r(0, 0, 1))};
  } else {
    cr.f_star_images = {f_star(f, Sl2Element::from_su11(1.0, 0.0)),
                        f_star(f, Sl2Element::from_su11(0.0, cplx(1.0, 0.0))),
                        f_star(f, Sl2Element::from_su11(0.0, cplx(0.0, -1.0)))};
  }
  cr.has_rho_tot = f.kind != FamilyKind::sostar_2n;
  cr.defining_form = defining_form(f);
  return cr;
}

TangentParam canonical_tangent(const HermitianFamily& f) {
  ComplexMatrix mplus;
  if (f.kind == FamilyKind::sp_2n) {
    // Raising direction [[1, i],[i, -1]] = h + i(e + f).
    mplus = f_star(f, Sl2Element::from_sl2r(1, 0, 0)) +
            i1 * (f_star(f, Sl2Element::from_sl2r(0, 1, 0)) +
                  f_star(f, Sl2Element::from_sl2r(0, 0, 1)));
  } else {
    // Raising direction E_12 = (E_b + i E_c)/2 in su(1,1).
    mplus = 0.5 * (f_star(f, Sl2Element::from_su11(0.0, cplx(1.0, 0.0))) +
                   i1 * f_star(f, Sl2Element::from_su11(0.0, cplx(0.0, -1.0))));
  }
  switch (f.kind) {
    case FamilyKind::su_pq: return {f, mplus.block(0, f.p, f.p, f.q)};
    case FamilyKind::sp_2n: return {f, mplus.block(0, 0, f.p, f.p)};
    case FamilyKind::so_p2: return {f, mplus.block(0, f.p, f.p, 1)};
    case FamilyKind::sostar_2n: return {f, -i1 * mplus.block(0, 0, f.p, f.p)};
  }
  fail(errc::bad_family, "canonical_tangent");
}

double algebra_membership_residual(const HermitianFamily& f, const ComplexMatrix& x) {
  const ComplexMatrix j = defining_form(f);
  switch (f.kind) {
    case FamilyKind::su_pq:
      return norm_fro(x.adjoint() * j + j * x) + std::abs(trace(x));
    case FamilyKind::sp_2n:
      return norm_fro(x.transpose() * j + j * x) + imag_norm(x);
    case FamilyKind::so_p2:
      return norm_fro(x.transpose() * j + j * x) + imag_norm(x);
    case FamilyKind::sostar_2n:
      return norm_fro(x + x.transpose()) + norm_fro(x.adjoint() * j + j * x);
  }
  fail(errc::bad_family, "algebra_membership_residual");
}

double group_membership_residual(const HermitianFamily& f, const ComplexMatrix& g) {
  const ComplexMatrix j = defining_form(f);
  switch (f.kind) {
    case FamilyKind::su_pq: return norm_fro(g.adjoint() * j * g - j);
    case FamilyKind::sp_2n: return norm_fro(g.transpose() * j * g - j) + imag_norm(g);
    case FamilyKind::so_p2: return norm_fro(g.transpose() * j * g - j) + imag_norm(g);
    case FamilyKind::sostar_2n: {
      const int n2 = g.rows();
      return norm_fro(g.transpose() * g - ComplexMatrix::identity(n2)) +
             norm_fro(g.adjoint() * j * g - j);
    }
  }
  fail(errc::bad_family, "group_membership_residual");
}

std::vector<ComplexMatrix> algebra_basis(const HermitianFamily& f) {
  std::vector<ComplexMatrix> basis;
  const auto unit = [](int n, int i, int j) {
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
  };
  switch (f.kind) {
    case FamilyKind::su_pq: {
      const int p = f.p, q = f.q, n = p + q;
      const auto antiherm_block = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
          for (int j = i + 1; j < hi; ++j) {
            basis.push_back(unit(n, i, j) - unit(n, j, i));
            basis.push_back(i1 * (unit(n, i, j) + unit(n, j, i)));
          }
      };
      antiherm_block(0, p);
      antiherm_block(p, n);
      for (int k = 0; k < n - 1; ++k)
        basis.push_back(i1 * (unit(n, k, k) - unit(n, n - 1, n - 1)));
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
          basis.push_back(unit(n, i, p + j) + unit(n, p + j, i));
          basis.push_back(i1 * (unit(n, i, p + j) - unit(n, p + j, i)));
        }
      return basis;
    }
    case FamilyKind::sp_2n: {
      const int n = f.p, n2 = 2 * n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          ComplexMatrix m(n2, n2);
          m(i, j) = 1.0;
          m(n + j, n + i) = -1.0;
          basis.push_back(m);
        }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          ComplexMatrix mq(n2, n2), mr(n2, n2);
          mq(i, n + j) = 1.0;
          mq(j, n + i) = 1.0;
          mr(n + i, j) = 1.0;
          mr(n + j, i) = 1.0;
          basis.push_back(mq);
          basis.push_back(mr);
        }
      return basis;
    }
    case FamilyKind::so_p2: {
      const int n = f.p, n2 = n + 2;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) basis.push_back(unit(n2, i, j) - unit(n2, j, i));
      basis.push_back(unit(n2, n, n + 1) - unit(n2, n + 1, n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j)
          basis.push_back(unit(n2, i, n + j) + unit(n2, n + j, i));
      return basis;
    }
    case FamilyKind::sostar_2n: {
      const int n = f.p;
      const auto embed_kp = [&](const ComplexMatrix& p1, const ComplexMatrix& p2,
                                const ComplexMatrix& x, const ComplexMatrix& y) {
        ComplexMatrix m(2 * n, 2 * n);
        m.set_block(0, 0, p1 + i1 * x);
        m.set_block(0, n, p2 + i1 * y);
        m.set_block(n, 0, -p2 + i1 * y);
        m.set_block(n, n, p1 - i1 * x);
        return m;
      };
      const ComplexMatrix zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const ComplexMatrix sk = unit(n, i, j) - unit(n, j, i);
          basis.push_back(embed_kp(sk, zero, zero, zero));
          basis.push_back(embed_kp(zero, zero, sk, zero));
          basis.push_back(embed_kp(zero, zero, zero, sk));
        }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const ComplexMatrix sym = unit(n, i, j) + unit(n, j, i);
          basis.push_back(embed_kp(zero, 0.5 * sym, zero, zero));
        }
      return basis;
    }
  }
  fail(errc::bad_family, "algebra_basis");
}

LemmaReport verify_canonical_rep(const HermitianFamily& f, int samples, std::uint64_t seed,
                                 double tol) {
  if (samples < 1) fail(errc::bad_shape, "verify_canonical_rep needs samples >= 1");
  LemmaReport rep;
  rep.check_name = "canonical_rep_" + f.name();
  rep.paper_anchor = "Table 1: canonical maximal holomorphic representation";
  rep.samples = samples;
  rep.seed = seed;
  Rng rng(seed);

  const bool sl2r = f.kind == FamilyKind::sp_2n;
  const auto realize = [&](const Sl2Element& x) { return sl2r ? x.sl2r() : x.su11(); };
  const auto from_matrix = [&](const ComplexMatrix& m) {
    return sl2r ? Sl2Element::from_sl2r_matrix(m) : Sl2Element::from_su11_matrix(m);
  };
  const auto random_element = [&](double scale) {
    return Sl2Element{scale * rng.gaussian(),
                      cplx(scale * rng.gaussian(), scale * rng.gaussian())};
  };

  double bracket_worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Sl2Element x = random_element(1.0);
    const Sl2Element y = random_element(1.0);
    const ComplexMatrix z2 = commutator(realize(x), realize(y));
    const ComplexMatrix lhs = f_star(f, from_matrix(z2));
    const ComplexMatrix rhs = commutator(f_star(f, x), f_star(f, y));
    bracket_worst = std::max(
        bracket_worst, norm_fro(lhs - rhs) / std::max(1.0, norm_fro(rhs)));
  }
  rep.add("bracket preservation", bracket_worst, 1e-12);

  const CanonicalRep cr = canonical_rep(f);
  double member_worst = 0.0;
  for (const auto& img : cr.f_star_images)
    member_worst = std::max(member_worst, algebra_membership_residual(f, img));
  for (int s = 0; s < std::min(samples, 32); ++s)
    member_worst = std::max(
        member_worst, algebra_membership_residual(f, f_star(f, random_element(1.0))));
  rep.add("images lie in g", member_worst, 1e-12);

  if (cr.has_rho_tot) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      Sl2Element x = random_element(0.7);
      // Cap |x| <= 2 as sampled domain for the intertwining check.
      const double nx = norm_fro(realize(x));
      if (nx > 2.0) {
        x.a *= 2.0 / nx;
        x.beta *= 2.0 / nx;
      }
      const ComplexMatrix lhs = expm(f_star(f, x));
      const ComplexMatrix rhs = rho_tot(f, expm(realize(x)));
      worst = std::max(worst, norm_fro(lhs - rhs) / std::max(1.0, norm_fro(rhs)));
    }
    rep.add("exp intertwining", worst, tol);
  } else {
    rep.add("exp intertwining", 0.0, tol, "skipped: no closed form at group level");
  }

  rep.add("raising image on maximal-curvature locus",
          equality_locus_residual(f, canonical_tangent(f)), std::max(tol, 1e-10));
  return rep;
}

CentralizerResult centralizer(const HermitianFamily& f, double tol) {
  const CanonicalRep cr = canonical_rep(f);
  const std::vector<ComplexMatrix> basis = algebra_basis(f);
  const int d = static_cast<int>(basis.size());

  // Normal matrix of the real-linear system [W, F_j] = 0, W in g.
  std::vector<std::array<ComplexMatrix, 3>> comms(d);
  for (int a = 0; a < d; ++a)
    for (int j = 0; j < 3; ++j) comms[a][j] = commutator(basis[a], cr.f_star_images[j]);

  ComplexMatrix nmat(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j) s += frobenius_inner(comms[a][j], comms[b][j]).real();
      nmat(a, b) = s;
      nmat(b, a) = s;
    }

  const EigenResult eig = herm_eig(nmat, 1e-8);
  const double lmax = std::max(std::abs(eig.values.back()), 1e-300);
  CentralizerResult res;
  res.family = f;
  for (int k = 0; k < d; ++k) {
    if (std::abs(eig.values[k]) > tol * lmax) continue;
    ComplexMatrix w(basis.front().rows(), basis.front().cols());
    for (int a = 0; a < d; ++a) {
      const double coeff = eig.vectors(a, k).real();
      if (std::abs(coeff) > 0.0) w += cplx(coeff, 0.0) * basis[a];
    }
    const double nw = norm_fro(w);
    if (nw > 1e-12) w *= cplx(1.0 / nw, 0.0);
    res.basis.push_back(std::move(w));
  }
  res.dimension = static_cast<int>(res.basis.size());
  return res;
}

int expected_centralizer_dimension(const HermitianFamily& f) {
  switch (f.kind) {
    case FamilyKind::su_pq:
      // p > q: U(q) x SU(p-q); p = q: {U in U(p) : det U = +-1}.
      return f.p > f.q ? f.q * f.q + (f.p - f.q) * (f.p - f.q) - 1 : f.p * f.p - 1;
    case FamilyKind::sp_2n: return f.p * (f.p - 1) / 2;  // O(n)
    case FamilyKind::so_p2: return (f.p - 1) * (f.p - 2) / 2;  // O(n-1)
    case FamilyKind::sostar_2n: {
      if (f.p % 2 != 0) return -1;
      const int m = f.p / 2;  // compact symplectic group on H^m inside U(n)
      return m * (2 * m + 1);
    }
  }
  fail(errc::bad_family, "expected_centralizer_dimension");
}

std::vector<ComplexMatrix> sostar_k_factor_basis(int n, int which) {
  if (n % 2 != 0) fail(errc::bad_family, "k factor split needs even n");
  if (which != 1 && which != 2) fail(errc::bad_shape, "factor index must be 1 or 2");
  const int m = n / 2;
  std::vector<ComplexMatrix> out;
  const auto unit = [&](int i, int j) {
    ComplexMatrix u(m, m);
    u(i, j) = 1.0;
    return u;
  };
  const auto assemble = [&](const ComplexMatrix& p1, const ComplexMatrix& p2) {
    ComplexMatrix k(2 * n, 2 * n);
    k.set_block(0, 0, p1);
    k.set_block(0, n, p2);
    k.set_block(n, 0, -p2);
    k.set_block(n, n, p1);
    const double nk = norm_fro(k);
    k *= cplx(1.0 / nk, 0.0);
    return k;
  };
  // n x n matrix from four m x m blocks.
  const auto four = [&](const ComplexMatrix& tl, const ComplexMatrix& tr,
                        const ComplexMatrix& bl, const ComplexMatrix& br) {
    ComplexMatrix p(n, n);
    p.set_block(0, 0, tl);
    p.set_block(0, m, tr);
    p.set_block(m, 0, bl);
    p.set_block(m, m, br);
    return p;
  };
  const ComplexMatrix zm(m, m);
  const ComplexMatrix zn(n, n);
  if (which == 1) {
    // Centralizer factor: P1 = [[B, C],[-C, B]] (B skew, C sym),
    // P2 = [[D, E],[E, -D]] (D, E sym).
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const ComplexMatrix sk = unit(i, j) - unit(j, i);
        out.push_back(assemble(four(sk, zm, zm, sk), zn));
      }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const ComplexMatrix sym = 0.5 * (unit(i, j) + unit(j, i));
        out.push_back(assemble(four(zm, sym, -sym, zm), zn));
        out.push_back(assemble(zn, four(sym, zm, zm, -sym)));
        out.push_back(assemble(zn, four(zm, sym, sym, zm)));
      }
  } else {
    // Complement: P1 = [[B, C],[C, -B]] (B, C skew),
    // P2 = [[D, E],[-E, D]] (D sym, E skew).
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const ComplexMatrix sk = unit(i, j) - unit(j, i);
        out.push_back(assemble(four(sk, zm, zm, -sk), zn));
        out.push_back(assemble(four(zm, sk, sk, zm), zn));
        out.push_back(assemble(zn, four(zm, sk, -sk, zm)));
      }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const ComplexMatrix sym = 0.5 * (unit(i, j) + unit(j, i));
        out.push_back(assemble(zn, four(sym, zm, zm, sym)));
      }
  }
  return out;
}

ComplexMatrix symmetric_unitary_log(const ComplexMatrix& s) {
  const int n = s.rows();
  if (s.cols() != n) fail(errc::bad_shape, "symmetric_unitary_log");
  if (norm_fro(s - s.transpose()) > 1e-8 * std::max(1.0, norm_fro(s)) ||
      norm_fro(s.adjoint() * s - ComplexMatrix::identity(n)) > 1e-8)
    fail(errc::not_in_group, "input must be unitary symmetric");

  // S = X + iY with commuting real symmetric X, Y; diagonalize jointly.
  ComplexMatrix x(n, n), y(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      x(i, j) = 0.5 * (s(i, j).real() + s(j, i).real());
      y(i, j) = 0.5 * (s(i, j).imag() + s(j, i).imag());
    }

  EigenResult ex = herm_eig(x, 1e-8);
  ComplexMatrix v = ex.vectors;
  int at = 0;
  while (at < n) {
    int end = at + 1;
    while (end < n && std::abs(ex.values[end] - ex.values[at]) <= 1e-7) ++end;
    if (end - at > 1) {
      ComplexMatrix vc(n, end - at);
      for (int j = at; j < end; ++j) vc.set_block(0, j - at, v.column(j));
      const EigenResult ey = herm_eig(vc.adjoint() * y * vc, 1e-6);
      const ComplexMatrix refined = vc * ey.vectors;
      for (int j = at; j < end; ++j) v.set_block(0, j, refined.column(j - at));
    }
    at = end;
  }

  ComplexMatrix c(n, n);
  std::vector<cplx> theta(n);
  for (int j = 0; j < n; ++j) {
    const ComplexMatrix vj = v.column(j);
    const double dx = (vj.adjoint() * x * vj)(0, 0).real();
    const double dy = (vj.adjoint() * y * vj)(0, 0).real();
    theta[j] = 0.5 * std::atan2(dy, dx);
  }
  const ComplexMatrix res = v * ComplexMatrix::diagonal(theta) * v.transpose();
  // C is real symmetric by construction; scrub the numerical dust.
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = 0.5 * (res(i, j).real() + res(j, i).real());
  return out;
}

namespace {

ComplexMatrix random_real_symmetric(int n, Rng& rng, double scale) {
  ComplexMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = scale * rng.gaussian();
      c(i, j) = v;
      c(j, i) = v;
    }
  return c;
}

}  // namespace

LemmaReport adjoint_transitivity_check(const HermitianFamily& f, int trials,
                                       std::uint64_t seed) {
  if (trials < 1) fail(errc::bad_shape, "adjoint_transitivity_check needs trials >= 1");
  LemmaReport rep;
  rep.check_name = "adjoint_transitivity_" + f.name();
  rep.samples = trials;
  rep.seed = seed;
  Rng rng(seed);

  if (f.kind == FamilyKind::sp_2n) {
    rep.paper_anchor = "Ad_exp = e^ad conjugation of the base tangent (sp)";
    const int n = f.p;
    const ComplexMatrix m0 = embed_tangent({f, ComplexMatrix::identity(n)});

    const ComplexMatrix e0 = expm(ComplexMatrix(2 * n, 2 * n));  // k = 0
    rep.add("fixed point at C = 0", norm_fro(e0 * m0 * e0 - m0), 1e-12);

    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      const ComplexMatrix c = random_real_symmetric(n, rng, 0.6);
      ComplexMatrix k(2 * n, 2 * n);
      k.set_block(0, n, c);
      k.set_block(n, 0, -c);
      const ComplexMatrix lhs = expm(k) * m0 * expm(-k);
      const ComplexMatrix rhs = embed_tangent({f, expm((2.0 * i1) * c)});
      worst = std::max(worst, norm_fro(lhs - rhs) / std::max(1.0, norm_fro(rhs)));
    }
    rep.add("conjugation reaches exp(2iC) payloads", worst, 1e-8);

    double log_worst = 0.0;
    const int log_trials = std::min(trials, 20);
    for (int t = 0; t < log_trials; ++t) {
      ComplexMatrix c0 = random_real_symmetric(n, rng, 0.5);
      const double nc = norm_fro(c0);
      if (nc > 1.2) c0 *= cplx(1.2 / nc, 0.0);
      const ComplexMatrix s = expm((2.0 * i1) * c0);
      const ComplexMatrix c = symmetric_unitary_log(s);
      log_worst = std::max(log_worst, norm_fro(expm((2.0 * i1) * c) - s));
    }
    rep.add("symmetric unitary log round trip", log_worst, 1e-6);
    return rep;
  }

  if (f.kind != FamilyKind::sostar_2n || f.p % 2 != 0)
    fail(errc::bad_family, "transitivity check covers sp and even so*");

  rep.paper_anchor = "Ad_exp = e^ad orbit of the base tangent (so*, even n)";
  const int n = f.p;
  const ComplexMatrix base = embed_tangent({f, sostar_J(n)});
  const double base_norm = norm_fro(base);
  const std::vector<ComplexMatrix> dirs = sostar_k_factor_basis(n, 2);
  const int dim = static_cast<int>(dirs.size());

  const auto conj_base = [&](const std::vector<double>& xi) {
    ComplexMatrix k(2 * n, 2 * n);
    for (int a = 0; a < dim; ++a)
      if (xi[a] != 0.0) k += cplx(xi[a], 0.0) * dirs[a];
    const ComplexMatrix e = expm(k);
    return e * base * e.transpose();  // exp(k) is real orthogonal
  };

  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix g = random_unitary(n, rng);
    const ComplexMatrix target = embed_tangent({f, g * sostar_J(n) * g.transpose()});
    const double tn = norm_fro(target);

    const auto dist = [&](const std::vector<double>& xi) {
      const ComplexMatrix u = conj_base(xi);
      const double ip = std::abs(frobenius_inner(u, target)) / (base_norm * tn);
      return std::sqrt(std::max(0.0, 1.0 - ip * ip));
    };

    double best = 2.0;
    for (int restart = 0; restart < 6 && best > 5e-5; ++restart) {
      std::vector<double> xi(dim, 0.0);
      if (restart > 0)
        for (auto& v : xi) v = 0.7 * rng.gaussian();
      double fx = dist(xi);
      double step = 0.3;
      const double h = 1e-6;
      for (int it = 0; it < 400 && step > 1e-12; ++it) {
        std::vector<double> grad(dim);
        double gn = 0.0;
        for (int a = 0; a < dim; ++a) {
          std::vector<double> xp = xi, xm = xi;
          xp[a] += h;
          xm[a] -= h;
          grad[a] = (dist(xp) - dist(xm)) / (2.0 * h);
          gn += grad[a] * grad[a];
        }
        gn = std::sqrt(gn);
        if (gn < 1e-14) break;
        bool moved = false;
        while (step > 1e-12) {
          std::vector<double> xc = xi;
          for (int a = 0; a < dim; ++a) xc[a] -= step * grad[a] / gn;
          const double fc = dist(xc);
          if (fc < fx - 1e-16) {
            xi = xc;
            fx = fc;
            step *= 1.4;
            moved = true;
            break;
          }
          step *= 0.5;
        }
        if (!moved || fx < 1e-6) break;
      }
      best = std::min(best, fx);
    }
    worst = std::max(worst, best);
  }
  rep.add("orbit reaches random equality-locus lines", worst, 1e-4);
  return rep;
}

}  // namespace hcl
