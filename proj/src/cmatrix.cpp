#include "hcl/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hcl {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::bad_shape, "negative dimension");
  data_.assign(static_cast<size_t>(rows) * cols, cplx(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) fail(errc::bad_shape, "negative dimension");
  if (data_.size() != static_cast<size_t>(rows) * cols)
    fail(errc::bad_shape, "entry count does not match rows*cols");
  if (!all_finite()) fail(errc::bad_shape, "non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  const int n = static_cast<int>(d.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    fail(errc::bad_shape, "block out of range");
  ComplexMatrix r(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void ComplexMatrix::set_block(int r0, int c0, const ComplexMatrix& m) {
  if (r0 < 0 || c0 < 0 || r0 + m.rows() > rows_ || c0 + m.cols() > cols_)
    fail(errc::bad_shape, "block out of range");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

ComplexMatrix ComplexMatrix::column(int j) const { return block(0, j, rows_, 1); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::shape_mismatch, "operator+=");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::shape_mismatch, "operator-=");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator-(ComplexMatrix a) { return a *= cplx(-1.0, 0.0); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail(errc::shape_mismatch, "matrix product");
  ComplexMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

cplx trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) fail(errc::shape_mismatch, "trace of non-square matrix");
  cplx t(0.0, 0.0);
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double norm_fro(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

double norm_max(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s = std::max(s, std::abs(v));
  return s;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::shape_mismatch, "frobenius_inner");
  // trace(A B*) = sum_ij A_ij conj(B_ij)
  cplx s(0.0, 0.0);
  for (size_t k = 0; k < a.data().size(); ++k) s += a.data()[k] * std::conj(b.data()[k]);
  return s;
}

namespace {

double off_diag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Column phase fixed so the largest-modulus entry is real positive; makes
// eigenvector output deterministic.
void normalize_column_phase(ComplexMatrix& v, int j) {
  int imax = 0;
  double best = -1.0;
  for (int i = 0; i < v.rows(); ++i) {
    const double m = std::abs(v(i, j));
    if (m > best + 1e-15) {
      best = m;
      imax = i;
    }
  }
  if (best <= 0.0) return;
  const cplx ph = v(imax, j) / best;
  const cplx corr = std::conj(ph);
  for (int i = 0; i < v.rows(); ++i) v(i, j) *= corr;
}

}  // namespace

EigenResult herm_eig(const ComplexMatrix& H, double tol) {
  if (H.rows() != H.cols()) fail(errc::shape_mismatch, "herm_eig needs a square matrix");
  const int n = H.rows();
  const double hn = norm_fro(H);
  if (norm_fro(H - H.adjoint()) > tol * std::max(hn, 1e-300))
    fail(errc::non_hermitian, "symmetry residual exceeds tolerance");

  // Work on the exact Hermitian part.
  ComplexMatrix a = 0.5 * (H + H.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double conv = 1e-14 * std::max(hn, 1e-300);
  const int max_sweeps = 100;
  bool converged = (n <= 1);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_diag_norm(a) <= conv) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const cplx phase = apq / mag;
        const double tau = (app - aqq) / (2.0 * mag);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- R* A R with R = [[c, -s e^{i phi}], [s e^{-i phi}, c]] on (p,q).
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * c + akq * (s * std::conj(phase));
          a(k, q) = -akp * (s * phase) + akq * c;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = apk * c + aqk * (s * phase);
          a(q, k) = -apk * (s * std::conj(phase)) + aqk * c;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * c + vkq * (s * std::conj(phase));
          v(k, q) = -vkp * (s * phase) + vkq * c;
        }
      }
    }
    if (off_diag_norm(a) <= conv) converged = true;
  }
  if (!converged) fail(errc::no_convergence, "jacobi sweep cap reached");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] < diag[y]; });

  EigenResult res;
  res.values.resize(n);
  res.vectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    res.values[j] = diag[order[j]];
    for (int i = 0; i < n; ++i) res.vectors(i, j) = v(i, order[j]);
    normalize_column_phase(res.vectors, j);
  }
  return res;
}

ComplexMatrix expm(const ComplexMatrix& M) {
  if (M.rows() != M.cols()) fail(errc::shape_mismatch, "expm needs a square matrix");
  const int n = M.rows();
  if (n == 0) return M;
  if (!M.all_finite()) fail(errc::bad_shape, "expm of non-finite matrix");

  const double nrm = norm_fro(M);
  int s = 0;
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  ComplexMatrix t = M;
  t *= cplx(std::ldexp(1.0, -s), 0.0);

  ComplexMatrix x = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = term * t;
    term *= cplx(1.0 / k, 0.0);
    x += term;
    if (norm_fro(term) <= 1e-18 * std::max(1.0, norm_fro(x)) && k >= 8) break;
  }
  for (int i = 0; i < s; ++i) x = x * x;
  return x;
}

ComplexMatrix kernel_basis(const ComplexMatrix& H, double tol) {
  const EigenResult eig = herm_eig(H, tol);
  const int n = H.rows();
  double maxabs = 0.0;
  for (const double lam : eig.values) maxabs = std::max(maxabs, std::abs(lam));
  // Relative threshold with an absolute floor so an exactly-zero kernel of a
  // zero matrix still comes out as the whole space.
  const double thr = std::max(tol * std::max(1.0, maxabs), 1e-12);
  std::vector<int> keep;
  for (int j = 0; j < n; ++j)
    if (std::abs(eig.values[j]) <= thr) keep.push_back(j);
  ComplexMatrix k(n, static_cast<int>(keep.size()));
  for (int j = 0; j < static_cast<int>(keep.size()); ++j)
    for (int i = 0; i < n; ++i) k(i, j) = eig.vectors(i, keep[j]);
  return k;
}

ComplexMatrix random_gaussian(int rows, int cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

ComplexMatrix polar_columns(const ComplexMatrix& a) {
  const ComplexMatrix g = a.adjoint() * a;
  const EigenResult eig = herm_eig(g, 1e-9);
  const double lmax = eig.values.empty() ? 0.0 : eig.values.back();
  ComplexMatrix isqrt(a.cols(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    const double lam = eig.values[j];
    if (lam <= 1e-13 * std::max(1.0, lmax))
      fail(errc::bad_shape, "polar_columns: rank-deficient input");
    isqrt(j, j) = 1.0 / std::sqrt(lam);
  }
  return a * (eig.vectors * isqrt * eig.vectors.adjoint());
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    try {
      return polar_columns(random_gaussian(n, n, rng));
    } catch (const Error&) {
      continue;  // singular draw, retry
    }
  }
  fail(errc::no_convergence, "random_unitary: repeated singular draws");
}

double subspace_residual(const ComplexMatrix& v1, const ComplexMatrix& v2) {
  if (v1.rows() != v2.rows()) fail(errc::shape_mismatch, "subspace_residual");
  const ComplexMatrix r12 = v2 - v1 * (v1.adjoint() * v2);
  const ComplexMatrix r21 = v1 - v2 * (v2.adjoint() * v1);
  return std::max(norm_fro(r12), norm_fro(r21));
}

ComplexMatrix hstack(const std::vector<ComplexMatrix>& cols) {
  if (cols.empty()) return {};
  int total = 0;
  for (const auto& c : cols) {
    if (c.rows() != cols.front().rows()) fail(errc::shape_mismatch, "hstack");
    total += c.cols();
  }
  ComplexMatrix out(cols.front().rows(), total);
  int at = 0;
  for (const auto& c : cols) {
    out.set_block(0, at, c);
    at += c.cols();
  }
  return out;
}

}  // namespace hcl
