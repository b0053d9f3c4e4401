// Copyright 2026 The qkdkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKDKR_NUMERICS_H_
#define QKDKR_NUMERICS_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qkdkr {

using Complex = std::complex<double>;

// Tolerance used by every invariant check in the library.
inline constexpr double kTol = 1e-9;

// Jacobi stopping rule: off-diagonal Frobenius norm <= kJacobiRelTol * ||M||_F.
inline constexpr double kJacobiRelTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Real eigenvalues sorted non-increasing.
class Spectrum {
 public:
  Spectrum() = default;

  // Throws std::invalid_argument if the values are not finite or not sorted
  // non-increasing.
  static Spectrum FromSorted(std::vector<double> values);
  // Sorts a copy of `values` non-increasing.
  static Spectrum FromUnsorted(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;

  // True if every entry is in [-tol, 1 + tol] and the sum is within tol of 1.
  bool IsDensitySpectrum(double tol = kTol) const;

 private:
  explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

// Dense square complex matrix, row-major. Used for Kraus operators, bases and
// intermediate products; HermitianMatrix wraps the self-adjoint case.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix Identity(std::size_t dim);
  // Rows given as nested vectors; throws if not square.
  static Matrix FromRows(const std::vector<std::vector<Complex>>& rows);
  // |u><v|
  static Matrix Outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  std::span<const Complex> data() const { return data_; }

  Matrix Adjoint() const;
  Complex Trace() const;
  double MaxAbs() const;
  double FrobeniusNorm() const;
  // max_{ij} |M_ij - conj(M_ji)|
  double HermitianDefect() const;

  // Column `c` as a vector.
  std::vector<Complex> Column(std::size_t c) const;
  // M v
  std::vector<Complex> Apply(std::span<const Complex> v) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// M = M^dagger within kTol (scaled by max(1, max|M_ij|)). Construction
// symmetrizes the stored entries to (M + M^dagger) / 2 so downstream code sees
// an exactly Hermitian matrix.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  // Throws std::invalid_argument when `m` is not Hermitian within tolerance.
  explicit HermitianMatrix(const Matrix& m);

  static HermitianMatrix Zero(std::size_t dim);
  static HermitianMatrix Identity(std::size_t dim);
  static HermitianMatrix FromReal(const std::vector<std::vector<double>>& rows);
  // |v><v|
  static HermitianMatrix Projector(std::span<const Complex> v);

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  double Trace() const { return m_.Trace().real(); }

  // U M U^dagger
  HermitianMatrix Conjugated(const Matrix& u) const;

  HermitianMatrix& operator+=(const HermitianMatrix& other);
  HermitianMatrix& operator-=(const HermitianMatrix& other);
  HermitianMatrix& operator*=(double s);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) {
    return a += b;
  }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) {
    return a -= b;
  }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

 private:
  Matrix m_;
};

// Probabilities summing to 1 within kTol. Entries in [-kTol, 0) are clamped to
// zero; anything more negative is rejected.
class ProbabilityDistribution {
 public:
  ProbabilityDistribution() = default;
  explicit ProbabilityDistribution(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

// x ln x with 0 ln 0 = 0.
double XLogX(double x);

// Binary entropy in bits. Throws std::domain_error outside [0, 1] beyond kTol.
double BinaryEntropy(double x);

// D-ary entropy x log_D(D-1) - x log_D x - (1-x) log_D(1-x), in D-ary units.
double DAryEntropy(double x, int dim);

// Shannon entropy in bits.
double ShannonEntropy(const ProbabilityDistribution& p);
// Same for a raw probability vector (validated as above).
double ShannonEntropy(std::span<const double> probs);

struct EigenDecomposition {
  Spectrum values;
  // vectors[k] is a unit eigenvector for values[k].
  std::vector<std::vector<Complex>> vectors;
};

// All eigenvalues of a Hermitian matrix, sorted non-increasing.
//
// Cyclic Jacobi rotations on the real symmetric embedding
//   [ Re M  -Im M ]
//   [ Im M   Re M ]
// whose spectrum is that of M with every eigenvalue doubled. The matrix is
// first split into the connected components of its nonzero pattern and each
// component is diagonalized separately. Throws std::runtime_error if a
// component fails to converge within kJacobiMaxSweeps sweeps.
Spectrum HermitianEigenvalues(const HermitianMatrix& m);
EigenDecomposition HermitianEigensystem(const HermitianMatrix& m);

// Eigenvalues of a real symmetric matrix (row-major, n*n), non-increasing.
// Exposed for the embedding path and for tests.
std::vector<double> JacobiEigenvalues(std::vector<double> a, std::size_t n,
                                      std::vector<double>* vectors = nullptr);

double TraceNorm(const HermitianMatrix& m);

// 1/2 ||a - b||_1. Throws std::invalid_argument on dimension mismatch.
double TraceDistance(const HermitianMatrix& a, const HermitianMatrix& b);

// Largest |eigenvalue|.
double OperatorNorm(const HermitianMatrix& m);

// Von Neumann entropy in bits. Requires a density operator: eigenvalues below
// -kTol or a trace away from 1 by more than kTol throw std::domain_error.
double VonNeumannEntropy(const HermitianMatrix& m);
double VonNeumannEntropy(const Spectrum& s);

}  // namespace qkdkr

#endif  // QKDKR_NUMERICS_H_
