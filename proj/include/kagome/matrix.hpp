#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace kagome {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);

  std::size_t dim() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// max_{ij} |a_ij - b_ij|. Dimensions must agree.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_{ij} |M_ij - conj(M_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

/// A ComplexMatrix that passed the Hermiticity check
/// max |M_ij - conj(M_ji)| <= 1e-13 (1 + max |M_ij|).
class HermitianMatrix {
 public:
  /// Throws std::invalid_argument if `m` fails the Hermiticity check.
  explicit HermitianMatrix(ComplexMatrix m);

  std::size_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

}  // namespace kagome
