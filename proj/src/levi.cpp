#include "hcl/levi.hpp"

#include <algorithm>
#include <cmath>

#include "hcl/rng.hpp"

namespace hcl {

namespace {

void check_n(int n) {
  if (n != 5 && n != 7) fail(errc::bad_size, "only n in {5, 7} is supported");
}

int coeff_for(int n) { return n == 5 ? 4 : 6; }

}  // namespace

int skew_coord_count(int n) { return n * (n - 1) / 2; }

std::pair<int, int> skew_coord_position(int n, int j) {
  int idx = j;
  for (int r = 0; r < n - 1; ++r) {
    const int in_row = n - 1 - r;
    if (idx < in_row) return {r, r + 1 + idx};
    idx -= in_row;
  }
  fail(errc::bad_length, "coordinate index out of range");
}

SkewCoords::SkewCoords(int n_, std::vector<cplx> a_) : n(n_), a(std::move(a_)) {
  check_n(n);
  if (static_cast<int>(a.size()) != skew_coord_count(n))
    fail(errc::bad_length, "coordinate vector has wrong length");
}

ComplexMatrix embed_skew(const SkewCoords& c) {
  ComplexMatrix m(c.n, c.n);
  for (int j = 0; j < skew_coord_count(c.n); ++j) {
    const auto [r, s] = skew_coord_position(c.n, j);
    m(r, s) = c.a[j];
    m(s, r) = -c.a[j];
  }
  return m;
}

SkewCoords extract_skew(const ComplexMatrix& a) {
  const int n = a.rows();
  check_n(n);
  if (norm_fro(a + a.transpose()) > 1e-10 * std::max(norm_fro(a), 1e-300))
    fail(errc::not_skew, "extract_skew");
  std::vector<cplx> coords(skew_coord_count(n));
  for (int j = 0; j < skew_coord_count(n); ++j) {
    const auto [r, s] = skew_coord_position(n, j);
    coords[j] = a(r, s);
  }
  return {n, std::move(coords)};
}

SkewCoords skew_base_point(int n) {
  check_n(n);
  std::vector<cplx> coords(skew_coord_count(n), cplx(0.0, 0.0));
  if (n == 5) {
    coords[0] = 1.0;  // (1,2)
    coords[7] = 1.0;  // (3,4)
  } else {
    coords[0] = 1.0;   // (1,2)
    coords[11] = 1.0;  // (3,4)
    coords[18] = 1.0;  // (5,6)
  }
  return {n, std::move(coords)};
}

double big_F(int n, const ComplexMatrix& a) {
  check_n(n);
  if (a.rows() != n || a.cols() != n) fail(errc::bad_size, "big_F matrix size");
  if (norm_fro(a + a.transpose()) > 1e-10 * std::max(norm_fro(a), 1e-300))
    fail(errc::not_skew, "big_F");
  const ComplexMatrix g = a.adjoint() * a;
  const double t1 = trace(g).real();
  const double t2 = trace(g * g).real();
  return t1 * t1 - coeff_for(n) * t2;
}

double cubic_invariant(const ComplexMatrix& a) {
  if (a.rows() != 7 || a.cols() != 7) fail(errc::bad_size, "cubic_invariant needs n = 7");
  const ComplexMatrix g = a.adjoint() * a;
  const double t1 = trace(g).real();
  const double t3 = trace(g * g * g).real();
  return t1 * t1 * t1 - 36.0 * t3;
}

namespace {

using ldcplx = std::complex<long double>;

// Extended-precision evaluation of F from raw coordinates. The
// finite-difference oracle divides function values by step^2 = 1e-10, so
// double-precision evaluations would leave ~1e-5 of rounding noise in the
// quotient; long double brings that down to ~1e-8.
long double big_f_ld(int n, const std::vector<ldcplx>& coords) {
  const int count = skew_coord_count(n);
  std::vector<ldcplx> m(static_cast<size_t>(n) * n, ldcplx(0.0L, 0.0L));
  for (int j = 0; j < count; ++j) {
    const auto [r, s] = skew_coord_position(n, j);
    m[static_cast<size_t>(r) * n + s] = coords[j];
    m[static_cast<size_t>(s) * n + r] = -coords[j];
  }
  // g = A* A
  std::vector<ldcplx> g(static_cast<size_t>(n) * n, ldcplx(0.0L, 0.0L));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ldcplx acc(0.0L, 0.0L);
      for (int k = 0; k < n; ++k)
        acc += std::conj(m[static_cast<size_t>(k) * n + i]) * m[static_cast<size_t>(k) * n + j];
      g[static_cast<size_t>(i) * n + j] = acc;
    }
  long double t1 = 0.0L;
  for (int i = 0; i < n; ++i) t1 += g[static_cast<size_t>(i) * n + i].real();
  long double t2 = 0.0L;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      t2 += (g[static_cast<size_t>(i) * n + k] * g[static_cast<size_t>(k) * n + i]).real();
  return t1 * t1 - coeff_for(n) * t2;
}

}  // namespace

ComplexMatrix levi_form_fd(int n, const SkewCoords& c0, double step) {
  check_n(n);
  const int count = skew_coord_count(n);
  std::vector<ldcplx> base(count);
  for (int j = 0; j < count; ++j) base[j] = ldcplx(c0.a[j].real(), c0.a[j].imag());
  const long double h = step;

  // Real coordinate index: (j, 0) is Re a_j, (j, 1) is Im a_j.
  const auto eval_shift = [&](int u, int cu, long double du, int v, int cv, long double dv) {
    std::vector<ldcplx> x = base;
    const ldcplx eu = cu == 0 ? ldcplx(1.0L, 0.0L) : ldcplx(0.0L, 1.0L);
    const ldcplx ev = cv == 0 ? ldcplx(1.0L, 0.0L) : ldcplx(0.0L, 1.0L);
    x[u] += du * eu;
    x[v] += dv * ev;
    return big_f_ld(n, x);
  };
  const long double f0 = big_f_ld(n, base);
  const auto second = [&](int u, int cu, int v, int cv) -> long double {
    if (u == v && cu == cv) {
      std::vector<ldcplx> xp = base, xm = base;
      const ldcplx e = cu == 0 ? ldcplx(1.0L, 0.0L) : ldcplx(0.0L, 1.0L);
      xp[u] += h * e;
      xm[u] -= h * e;
      return (big_f_ld(n, xp) - 2.0L * f0 + big_f_ld(n, xm)) / (h * h);
    }
    const long double fpp = eval_shift(u, cu, h, v, cv, h);
    const long double fpm = eval_shift(u, cu, h, v, cv, -h);
    const long double fmp = eval_shift(u, cu, -h, v, cv, h);
    const long double fmm = eval_shift(u, cu, -h, v, cv, -h);
    return (fpp - fpm - fmp + fmm) / (4.0L * h * h);
  };

  // d/da_k d/d conj(a_j) = 1/4 [F_{x_k x_j} + F_{y_k y_j} + i(F_{x_k y_j} - F_{y_k x_j})]
  ComplexMatrix q(count, count);
  for (int j = 0; j < count; ++j) {
    for (int k = j; k < count; ++k) {
      const long double fxx = second(k, 0, j, 0);
      const long double fyy = second(k, 1, j, 1);
      const long double fxy = second(k, 0, j, 1);
      const long double fyx = second(k, 1, j, 0);
      const cplx val(static_cast<double>(0.25L * (fxx + fyy)),
                     static_cast<double>(0.25L * (fxy - fyx)));
      q(j, k) = val;
      q(k, j) = std::conj(val);
    }
  }
  return q;
}

LeviForm levi_form_at(int n, const SkewCoords& c0) {
  check_n(n);
  const int count = skew_coord_count(n);
  const ComplexMatrix a = embed_skew(c0);
  const ComplexMatrix aa_l = a * a.adjoint();
  const ComplexMatrix aa_r = a.adjoint() * a;
  const double t = trace(aa_r).real();

  // Sparse products with the coordinate basis S_j = E_{rs} - E_{sr}:
  // tr(S_j S_k G) touches at most four entries of G.
  const auto tr_ss = [&](int j, int k, const ComplexMatrix& g) -> cplx {
    const auto [a1, b1] = skew_coord_position(n, j);
    const auto [c1, d1] = skew_coord_position(n, k);
    // S_j S_k = d_{b c} E_{a d} - d_{b d} E_{a c} - d_{a c} E_{b d} + d_{a d} E_{b c}
    cplx acc(0.0, 0.0);
    if (b1 == c1) acc += g(d1, a1);
    if (b1 == d1) acc -= g(c1, a1);
    if (a1 == c1) acc -= g(d1, b1);
    if (a1 == d1) acc += g(c1, b1);
    return acc;
  };

  ComplexMatrix q(count, count);
  for (int j = 0; j < count; ++j) {
    for (int k = 0; k < count; ++k) {
      cplx q1 = 8.0 * c0.a[j] * std::conj(c0.a[k]);
      if (j == k) q1 += 4.0 * t;
      const cplx q2 = -2.0 * (tr_ss(k, j, aa_l) + tr_ss(j, k, aa_r));
      q(j, k) = q1 - static_cast<double>(coeff_for(n)) * q2;
    }
  }
  q = 0.5 * (q + q.adjoint());

  // The closed form must agree with the finite-difference oracle; the
  // relative factor only matters for large-norm inputs where the quartic
  // growth of F inflates the oracle's own error.
  const ComplexMatrix fd = levi_form_fd(n, c0);
  const double allowed = 1e-6 * std::max(1.0, 0.01 * norm_max(q));
  if (norm_max(q - fd) > allowed)
    fail(errc::no_convergence, "levi closed form disagrees with finite differences");
  return {n, q};
}

LemmaReport verify_negative_semidefinite_kernel(int n, int samples, std::uint64_t seed) {
  check_n(n);
  LemmaReport rep;
  rep.check_name = n == 5 ? "levi_kernel_n5" : "levi_kernel_n7";
  rep.paper_anchor = n == 5
                         ? "Lemma 5.2(3): Levi form negative semi-definite with 5-dimensional kernel"
                         : "Lemma 5.2(3): Levi form negative semi-definite with 7-dimensional kernel";
  rep.samples = samples;
  rep.seed = seed;
  Rng rng(seed);

  const SkewCoords a0 = skew_base_point(n);
  const LeviForm lf = levi_form_at(n, a0);
  const int count = skew_coord_count(n);
  const EigenResult eig = herm_eig(lf.Q, 1e-10);

  rep.add("eigenvalues nonpositive", std::max(0.0, eig.values.back()), 1e-10);

  const ComplexMatrix ker = kernel_basis(lf.Q, 1e-10);
  const int expected_dim = n == 5 ? 5 : 7;
  rep.add("kernel dimension", std::abs(ker.cols() - expected_dim), 0.5,
          "computed " + std::to_string(ker.cols()) + ", expected " +
              std::to_string(expected_dim));

  if (n == 5) {
    // Explicit kernel basis: e4, e7, e9, e10, (e1 + e8)/sqrt(2), 1-based.
    ComplexMatrix target(count, 5);
    target(3, 0) = 1.0;
    target(6, 1) = 1.0;
    target(8, 2) = 1.0;
    target(9, 3) = 1.0;
    target(0, 4) = 1.0 / std::sqrt(2.0);
    target(7, 4) = 1.0 / std::sqrt(2.0);
    rep.add("kernel span", ker.cols() == 5 ? subspace_residual(ker, target) : 1.0, 1e-8);

    // Exact restricted value: F(A0 + a e4 + b e7 + c e9 + d e10) equals
    // -4 (|a|^2+|b|^2+|c|^2+|d|^2)^2. The value is quartic in the offsets
    // (gradient and full Hessian of F vanish at A0 along the kernel), so a
    // quadratic right-hand side cannot match away from unit size.
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      std::vector<cplx> coords = a0.a;
      const cplx ca = rng.complex_gaussian();
      const cplx cb = rng.complex_gaussian();
      const cplx cc = rng.complex_gaussian();
      const cplx cd = rng.complex_gaussian();
      coords[3] += ca;
      coords[6] += cb;
      coords[8] += cc;
      coords[9] += cd;
      const double f = big_F(5, embed_skew({5, coords}));
      const double s2 = std::norm(ca) + std::norm(cb) + std::norm(cc) + std::norm(cd);
      worst = std::max(worst, std::abs(f + 4.0 * s2 * s2));
    }
    rep.add("slice identity F = -4 (sum |.|^2)^2", worst, 1e-9,
            "quartic in the kernel offsets; strictly negative off A0");
  } else {
    ComplexMatrix trivial(count, 1);
    trivial(0, 0) = trivial(11, 0) = trivial(18, 0) = 1.0 / std::sqrt(3.0);
    rep.add("trivial direction in kernel",
            norm_fro(trivial - ker * (ker.adjoint() * trivial)), 1e-8);

    // F stays strictly negative along kernel directions transverse to the
    // line of the base point.
    double worst = 0.0;
    int tested = 0;
    for (int s = 0; s < samples && ker.cols() > 1; ++s) {
      ComplexMatrix xi(count, 1);
      for (int j = 0; j < ker.cols(); ++j) xi += rng.complex_gaussian() * ker.column(j);
      xi -= trivial * (trivial.adjoint() * xi)(0, 0);
      const double nx = norm_fro(xi);
      if (nx < 1e-3) continue;
      xi *= cplx((0.2 + 1.3 * rng.uniform()) / nx, 0.0);
      std::vector<cplx> coords = a0.a;
      for (int j = 0; j < count; ++j) coords[j] += xi(j, 0);
      worst = std::max(worst, big_F(7, embed_skew({7, coords})));
      ++tested;
    }
    rep.add("F < 0 off the trivial kernel direction", std::max(0.0, worst), 0.0,
            std::to_string(tested) + " directions");
    rep.add("cubic invariant vanishes at base point",
            std::abs(cubic_invariant(embed_skew(a0))), 1e-10);
  }
  return rep;
}

}  // namespace hcl
