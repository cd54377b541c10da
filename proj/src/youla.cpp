#include "hcl/youla.hpp"

#include <algorithm>
#include <cmath>

namespace hcl {

namespace {

void check_skew(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) fail(errc::bad_shape, "skew input must be square");
  if (norm_fro(a + a.transpose()) > tol * std::max(norm_fro(a), 1e-300))
    fail(errc::not_skew, "skew-symmetry residual exceeds tolerance");
}

// Antilinear pairing map on an eigenspace of A*A: x -> conj(A x) / sigma.
// It squares to -1, which is what forces even multiplicities.
ComplexMatrix pair_partner(const ComplexMatrix& a, const ComplexMatrix& u, double sigma) {
  ComplexMatrix w = (a * u).conjugate();
  w *= cplx(1.0 / sigma, 0.0);
  return w;
}

}  // namespace

ComplexMatrix YoulaDecomposition::canonical_form(int n) const {
  ComplexMatrix b(n, n);
  for (size_t j = 0; j < sigmas.size(); ++j) {
    b(2 * j, 2 * j + 1) = sigmas[j];
    b(2 * j + 1, 2 * j) = -sigmas[j];
  }
  return b;
}

YoulaDecomposition youla_decompose(const ComplexMatrix& a, double tol) {
  check_skew(a, tol);
  const int n = a.rows();
  const ComplexMatrix s = 0.5 * (a - a.transpose());
  const EigenResult eig = herm_eig(s.adjoint() * s, 1e-8);

  const double lmax = eig.values.empty() ? 0.0 : std::abs(eig.values.back());
  // Rank split happens in eigenvalue scale: the eigensolver resolves A*A to
  // about 1e-15 * |A*A| absolutely, so a relative 1e-12 cut sits safely
  // above the noise floor of exact zeros.
  const double lam_thr = 1e-12 * std::max(lmax, 1e-300);

  // Indices descending by eigenvalue, split into kernel and positive part.
  std::vector<int> pos, ker;
  for (int j = n - 1; j >= 0; --j) {
    if (std::max(eig.values[j], 0.0) <= lam_thr)
      ker.push_back(j);
    else
      pos.push_back(j);
  }

  YoulaDecomposition out;
  out.U = ComplexMatrix(n, n);
  int col = 0;

  size_t at = 0;
  while (at < pos.size()) {
    // Cluster nearly equal eigenvalues; the pairing map only preserves the
    // eigenspace as a whole.
    size_t end = at + 1;
    while (end < pos.size() &&
           std::abs(eig.values[pos[end - 1]] - eig.values[pos[end]]) <= 1e-8 * std::max(lmax, 1e-300))
      ++end;
    std::vector<ComplexMatrix> space;
    double lam_mean = 0.0;
    for (size_t k = at; k < end; ++k) {
      space.push_back(eig.vectors.column(pos[k]));
      lam_mean += eig.values[pos[k]];
    }
    lam_mean /= static_cast<double>(end - at);
    if ((end - at) % 2 != 0)
      fail(errc::no_convergence, "odd eigenvalue cluster; raise the clustering tolerance");
    const double sigma = std::sqrt(lam_mean);

    std::vector<ComplexMatrix> chosen;  // alternating (w, u) pairs
    while (!space.empty()) {
      ComplexMatrix u = space.front();
      // Orthogonalize u against already chosen vectors.
      for (const auto& c : chosen) u -= c * (c.adjoint() * u);
      const double un = norm_fro(u);
      if (un <= 1e-8) {
        space.erase(space.begin());
        continue;
      }
      u *= cplx(1.0 / un, 0.0);

      ComplexMatrix w = pair_partner(s, u, sigma);
      // Keep the partner inside the cluster eigenspace and orthogonal to
      // everything placed so far, u included.
      ComplexMatrix proj(n, 1);
      for (const auto& v : space) proj += v * (v.adjoint() * w);
      w = proj;
      for (const auto& c : chosen) w -= c * (c.adjoint() * w);
      w -= u * (u.adjoint() * w);
      const double wn = norm_fro(w);
      if (wn <= 1e-6) fail(errc::no_convergence, "pairing partner collapsed");
      w *= cplx(1.0 / wn, 0.0);

      // Phase so the block's (1,2) entry w^t S u comes out real positive.
      cplx z = (w.transpose() * s * u)(0, 0);
      if (std::abs(z) <= 1e-12 * sigma) fail(errc::no_convergence, "degenerate pairing entry");
      w *= std::conj(z) / std::abs(z);

      out.U.set_block(0, col, w);
      out.U.set_block(0, col + 1, u);
      out.sigmas.push_back(std::abs(z));
      col += 2;
      chosen.push_back(w);
      chosen.push_back(u);
      space.erase(space.begin());
    }
    at = end;
  }

  for (const int j : ker) {
    out.U.set_block(0, col, eig.vectors.column(j));
    ++col;
  }

  // sigmas were produced in descending eigenvalue order already; enforce it
  // exactly for determinism.
  for (size_t j = 1; j < out.sigmas.size(); ++j)
    if (out.sigmas[j] > out.sigmas[j - 1] + 1e-12)
      fail(errc::no_convergence, "sigma ordering broke");

  out.residual = norm_fro(out.U.transpose() * a * out.U - out.canonical_form(n));
  return out;
}

std::vector<double> paired_eigenvalues(const ComplexMatrix& a) {
  check_skew(a, 1e-10);
  const ComplexMatrix s = 0.5 * (a - a.transpose());
  EigenResult eig = herm_eig(s.adjoint() * s, 1e-8);
  std::vector<double> v(eig.values.rbegin(), eig.values.rend());  // descending
  const int n = static_cast<int>(v.size());
  double lmax = n ? std::max(v.front(), 0.0) : 0.0;
  const double tol = 1e-8 * std::max(lmax, 1e-300);
  const double zero_thr = 1e-12 * std::max(lmax, 1e-300);

  std::vector<double> out(n, 0.0);
  int i = 0;
  while (i < n && v[i] > zero_thr) {
    if (i + 1 >= n || v[i + 1] <= zero_thr || std::abs(v[i] - v[i + 1]) > tol)
      fail(errc::pairing_failure, "positive eigenvalue without a partner");
    const double mean = 0.5 * (v[i] + v[i + 1]);
    out[i] = mean;
    out[i + 1] = mean;
    i += 2;
  }
  // Remaining entries are kernel values, snapped to exact zero.
  return out;
}

}  // namespace hcl
