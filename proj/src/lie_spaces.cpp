#include "hcl/lie_spaces.hpp"

#include <cmath>

namespace hcl {

HermitianFamily HermitianFamily::su(int p, int q) {
  if (p < q || q < 1) fail(errc::bad_family, "su(p,q) needs p >= q >= 1");
  return {FamilyKind::su_pq, p, q};
}

HermitianFamily HermitianFamily::sp(int n) {
  if (n < 1) fail(errc::bad_family, "sp(2n) needs n >= 1");
  return {FamilyKind::sp_2n, n, 0};
}

HermitianFamily HermitianFamily::so(int p) {
  if (p < 2) fail(errc::bad_family, "so(p,2) needs p >= 2");
  return {FamilyKind::so_p2, p, 0};
}

HermitianFamily HermitianFamily::sostar(int n) {
  if (n < 2) fail(errc::bad_family, "so*(2n) needs n >= 2");
  return {FamilyKind::sostar_2n, n, 0};
}

int HermitianFamily::ambient() const {
  switch (kind) {
    case FamilyKind::su_pq: return p + q;
    case FamilyKind::sp_2n: return 2 * p;
    case FamilyKind::so_p2: return p + 2;
    case FamilyKind::sostar_2n: return 2 * p;
  }
  return 0;
}

int HermitianFamily::rank() const {
  switch (kind) {
    case FamilyKind::su_pq: return q;
    case FamilyKind::sp_2n: return p;
    case FamilyKind::so_p2: return 2;
    case FamilyKind::sostar_2n: return p / 2;
  }
  return 0;
}

std::string HermitianFamily::name() const {
  switch (kind) {
    case FamilyKind::su_pq: return "SU(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FamilyKind::sp_2n: return "Sp(" + std::to_string(2 * p) + ")";
    case FamilyKind::so_p2: return "SO(" + std::to_string(p) + ",2)";
    case FamilyKind::sostar_2n: return "SO*(" + std::to_string(2 * p) + ")";
  }
  return "?";
}

void validate_payload(const TangentParam& t) {
  const auto& f = t.family;
  const auto& a = t.payload;
  const double n = norm_fro(a);
  switch (f.kind) {
    case FamilyKind::su_pq:
      if (a.rows() != f.p || a.cols() != f.q) fail(errc::payload_shape, "su payload must be p x q");
      break;
    case FamilyKind::sp_2n:
      if (a.rows() != f.p || a.cols() != f.p) fail(errc::payload_shape, "sp payload must be n x n");
      if (norm_fro(a - a.transpose()) > 1e-12 * std::max(n, 1e-300))
        fail(errc::payload_shape, "sp payload must be symmetric");
      break;
    case FamilyKind::so_p2:
      if (a.rows() != f.p || a.cols() != 1) fail(errc::payload_shape, "so payload must be a p-vector");
      break;
    case FamilyKind::sostar_2n:
      if (a.rows() != f.p || a.cols() != f.p) fail(errc::payload_shape, "so* payload must be n x n");
      if (norm_fro(a + a.transpose()) > 1e-12 * std::max(n, 1e-300))
        fail(errc::payload_shape, "so* payload must be skew-symmetric");
      break;
  }
}

ComplexMatrix embed_tangent(const TangentParam& t) {
  validate_payload(t);
  const auto& f = t.family;
  const auto& a = t.payload;
  const cplx i1(0.0, 1.0);
  switch (f.kind) {
    case FamilyKind::su_pq: {
      ComplexMatrix m(f.p + f.q, f.p + f.q);
      m.set_block(0, f.p, a);
      return m;
    }
    case FamilyKind::sp_2n: {
      const int n = f.p;
      ComplexMatrix m(2 * n, 2 * n);
      m.set_block(0, 0, a);
      m.set_block(0, n, i1 * a);
      m.set_block(n, 0, i1 * a);
      m.set_block(n, n, -a);
      return m;
    }
    case FamilyKind::so_p2: {
      const int p = f.p;
      ComplexMatrix b(p, 2);
      for (int i = 0; i < p; ++i) {
        b(i, 0) = a(i, 0);
        b(i, 1) = i1 * a(i, 0);
      }
      ComplexMatrix m(p + 2, p + 2);
      m.set_block(0, p, b);
      m.set_block(p, 0, b.transpose());
      return m;
    }
    case FamilyKind::sostar_2n: {
      const int n = f.p;
      ComplexMatrix m(2 * n, 2 * n);
      m.set_block(0, 0, i1 * a);
      m.set_block(0, n, -a);
      m.set_block(n, 0, -a);
      m.set_block(n, n, -i1 * a);
      return m;
    }
  }
  fail(errc::bad_family, "embed_tangent");
}

double sectional_curvature(const TangentParam& t) {
  validate_payload(t);
  if (norm_fro(t.payload) <= 1e-14) fail(errc::zero_tangent, "sectional_curvature");
  const ComplexMatrix m = embed_tangent(t);
  const ComplexMatrix c = commutator(m, m.adjoint());
  const double num = trace(c * c).real();
  const double den = trace(m * m.adjoint()).real();
  return -num / (den * den);
}

CurvatureBounds curvature_bounds(const HermitianFamily& f) {
  switch (f.kind) {
    case FamilyKind::su_pq: return {-2.0, -2.0 / f.q};
    case FamilyKind::sp_2n: return {-2.0, -2.0 / f.p};
    case FamilyKind::so_p2: return {-1.0, -0.5};
    case FamilyKind::sostar_2n: return {-1.0, -1.0 / (f.p / 2)};
  }
  return {};
}

ComplexMatrix project_payload(const HermitianFamily& f, const ComplexMatrix& raw) {
  switch (f.kind) {
    case FamilyKind::sp_2n: return 0.5 * (raw + raw.transpose());
    case FamilyKind::sostar_2n: return 0.5 * (raw - raw.transpose());
    default: return raw;
  }
}

TangentParam random_tangent(const HermitianFamily& f, Rng& rng) {
  const bool vec = f.kind == FamilyKind::so_p2;
  for (;;) {
    ComplexMatrix raw = random_gaussian(f.p, vec ? 1 : (f.kind == FamilyKind::su_pq ? f.q : f.p), rng);
    raw = project_payload(f, raw);
    const double n = norm_fro(raw);
    if (n < 1e-8) continue;
    raw *= cplx(1.0 / n, 0.0);
    return {f, raw};
  }
}

namespace {

// Flat view of the payload's real degrees of freedom. The projection step
// keeps iterates on the family constraint, so plain re/im coordinates of the
// full payload matrix are fine as search variables.
std::vector<double> to_coords(const ComplexMatrix& a) {
  std::vector<double> x;
  x.reserve(2 * a.data().size());
  for (const auto& v : a.data()) {
    x.push_back(v.real());
    x.push_back(v.imag());
  }
  return x;
}

ComplexMatrix from_coords(int rows, int cols, const std::vector<double>& x) {
  ComplexMatrix a(rows, cols);
  size_t k = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      a(i, j) = cplx(x[k], x[k + 1]);
      k += 2;
    }
  return a;
}

}  // namespace

std::pair<TangentParam, double> extremize_curvature(const HermitianFamily& f,
                                                    ExtremizeMode mode, int restarts,
                                                    std::uint64_t seed) {
  if (restarts < 1) fail(errc::bad_shape, "extremize_curvature needs restarts >= 1");
  Rng rng(seed);
  const double sign = (mode == ExtremizeMode::maximize) ? 1.0 : -1.0;

  const auto clean = [&](const ComplexMatrix& raw) {
    ComplexMatrix a = project_payload(f, raw);
    const double n = norm_fro(a);
    a *= cplx(1.0 / n, 0.0);
    return a;
  };
  const auto value = [&](const ComplexMatrix& a) {
    return sign * sectional_curvature({f, a});
  };

  TangentParam best_param = random_tangent(f, rng);
  double best = value(best_param.payload);

  const int max_iter = 600;
  const double fd_step = 1e-6;
  for (int r = 0; r < restarts; ++r) {
    ComplexMatrix a = random_tangent(f, rng).payload;
    double fa = value(a);
    double step = 0.2;
    for (int it = 0; it < max_iter && step > 1e-10; ++it) {
      std::vector<double> x = to_coords(a);
      std::vector<double> g(x.size());
      for (size_t k = 0; k < x.size(); ++k) {
        std::vector<double> xp = x, xm = x;
        xp[k] += fd_step;
        xm[k] -= fd_step;
        const double fp = value(clean(from_coords(a.rows(), a.cols(), xp)));
        const double fm = value(clean(from_coords(a.rows(), a.cols(), xm)));
        g[k] = (fp - fm) / (2.0 * fd_step);
      }
      double gn = 0.0;
      for (const double v : g) gn += v * v;
      gn = std::sqrt(gn);
      if (gn < 1e-12) break;

      bool moved = false;
      while (step > 1e-10) {
        std::vector<double> xc = x;
        for (size_t k = 0; k < x.size(); ++k) xc[k] += step * g[k] / gn;
        const ComplexMatrix cand = clean(from_coords(a.rows(), a.cols(), xc));
        const double fc = value(cand);
        if (fc > fa + 1e-16) {
          a = cand;
          fa = fc;
          step *= 1.4;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    if (fa > best) {
      best = fa;
      best_param = {f, a};
    }
  }
  return {best_param, sign * best};
}

}  // namespace hcl
