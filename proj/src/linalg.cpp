#include "djh/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "djh/errors.hpp"

namespace djh {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw domain_error("matrix product: dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const cplx a = at(i, k);
      if (a == cplx{}) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw domain_error("matrix sum: dimension mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw domain_error("matrix difference: dimension mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

Matrix Matrix::scaled(cplx factor) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

cplx Matrix::trace() const {
  cplx t{};
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::max_abs_diff(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw domain_error("matrix diff: dimension mismatch");
  double m = 0.0;
  for (size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

double Matrix::deviation_from_identity() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      m = std::max(m, std::abs(at(i, j) - (i == j ? cplx{1.0} : cplx{})));
  return m;
}

double Matrix::deviation_from_unitary() const {
  return ((*this) * adjoint()).deviation_from_identity();
}

HermitianEigen hermitian_eigen(const Matrix& a) {
  if (a.rows() != a.cols()) throw domain_error("hermitian_eigen: square matrix required");
  const int n = a.rows();
  if (a.max_abs_diff(a.adjoint()) > 1e-10 * std::max(1.0, a.max_abs()))
    throw domain_error("hermitian_eigen: input is not Hermitian");

  Matrix w = a;
  Matrix v = Matrix::identity(n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += std::norm(w.at(p, q));
    return std::sqrt(s);
  };

  const double scale = std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < 128 && off_norm() > 1e-14 * scale; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx b = w.at(p, q);
        if (std::abs(b) <= 1e-300) continue;
        const double alpha = w.at(p, p).real();
        const double gamma = w.at(q, q).real();
        // smaller-angle Jacobi rotation: tan(2 theta) = 2|b| / (alpha - gamma)
        const double tau = (alpha - gamma) / (2.0 * std::abs(b));
        const double sgn = tau >= 0.0 ? 1.0 : -1.0;
        const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx e = std::polar(1.0, std::arg(b));
        // rotation J: J_pp = c, J_pq = -s e, J_qp = s conj(e), J_qq = c
        for (int r = 0; r < n; ++r) {
          const cplx wp = w.at(r, p), wq = w.at(r, q);
          w.at(r, p) = wp * c + wq * s * std::conj(e);
          w.at(r, q) = -wp * s * e + wq * c;
        }
        for (int r = 0; r < n; ++r) {
          const cplx wp = w.at(p, r), wq = w.at(q, r);
          w.at(p, r) = wp * c + wq * s * e;
          w.at(q, r) = -wp * s * std::conj(e) + wq * c;
        }
        for (int r = 0; r < n; ++r) {
          const cplx vp = v.at(r, p), vq = v.at(r, q);
          v.at(r, p) = vp * c + vq * s * std::conj(e);
          v.at(r, q) = -vp * s * e + vq * c;
        }
      }
    }
  }

  HermitianEigen out;
  out.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) out.eigenvalues[i] = w.at(i, i).real();
  out.vectors = v;

  Matrix check(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s{};
      for (int k = 0; k < n; ++k)
        s += v.at(i, k) * out.eigenvalues[k] * std::conj(v.at(j, k));
      check.at(i, j) = s;
    }
  if (check.max_abs_diff(a) > 1e-10 * scale)
    throw conditioning_error("hermitian_eigen: spectral residual exceeds tolerance");
  return out;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw domain_error("inverse: square matrix required");
  const int n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m.at(r, col)) > std::abs(m.at(pivot, col))) pivot = r;
    if (std::abs(m.at(pivot, col)) < 1e-12)
      throw domain_error("inverse: matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(m.at(pivot, c), m.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const cplx d = m.at(col, col);
    for (int c = 0; c < n; ++c) {
      m.at(col, c) /= d;
      inv.at(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = m.at(r, col);
      if (f == cplx{}) continue;
      for (int c = 0; c < n; ++c) {
        m.at(r, c) -= f * m.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

}  // namespace djh
