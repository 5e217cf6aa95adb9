#pragma once

#include <complex>
#include <vector>

namespace djh {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Sizes in this project stay at or below
// the largest group order we support (256), so nothing here is tuned.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const cplx& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

  Matrix adjoint() const;
  Matrix scaled(cplx factor) const;
  cplx trace() const;

  double max_abs() const;
  double max_abs_diff(const Matrix& other) const;
  // max |A - I|
  double deviation_from_identity() const;
  // max |A A* - I|
  double deviation_from_unitary() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

// Spectral decomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations: a = vectors * diag(eigenvalues) * vectors^adjoint.
// The residual ||a - V D V*|| is checked against 1e-10 * ||a||.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix& a);

// Gaussian elimination with partial pivoting; throws domain_error on a
// (numerically) singular input.
Matrix inverse(const Matrix& a);

}  // namespace djh
