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

#include "qkdkr/numerics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qkdkr {

// ---------------------------------------------------------------------------
// Spectrum

Spectrum Spectrum::FromSorted(std::vector<double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::invalid_argument("Spectrum: non-finite eigenvalue at index " +
                                  std::to_string(i));
    }
    if (i > 0 && values[i] > values[i - 1]) {
      throw std::invalid_argument(
          "Spectrum: values must be sorted non-increasing (index " +
          std::to_string(i) + ")");
    }
  }
  return Spectrum(std::move(values));
}

Spectrum Spectrum::FromUnsorted(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return FromSorted(std::move(values));
}

double Spectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

bool Spectrum::IsDensitySpectrum(double tol) const {
  for (double v : values_) {
    if (v < -tol || v > 1.0 + tol) return false;
  }
  return std::abs(sum() - 1.0) <= tol;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::Identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::FromRows(const std::vector<std::vector<Complex>>& rows) {
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw std::invalid_argument("Matrix: row " + std::to_string(r) +
                                  " has " + std::to_string(rows[r].size()) +
                                  " entries, expected " +
                                  std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::Outer(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("Matrix::Outer: size mismatch");
  }
  Matrix m(u.size());
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  }
  return m;
}

Matrix Matrix::Adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex Matrix::Trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::MaxAbs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::FrobeniusNorm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::HermitianDefect() const {
  double d = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return d;
}

std::vector<Complex> Matrix::Column(std::size_t c) const {
  std::vector<Complex> v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Complex> Matrix::Apply(std::span<const Complex> v) const {
  if (v.size() != dim_) throw std::invalid_argument("Matrix::Apply: size mismatch");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Matrix: dimension mismatch");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(const Matrix& m) : m_(m) {
  const double scale = std::max(1.0, m.MaxAbs());
  const double defect = m.HermitianDefect();
  for (const Complex& z : m.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("HermitianMatrix: non-finite entry");
    }
  }
  if (defect > kTol * scale) {
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    m_(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m_(r, c) = avg;
      m_(c, r) = std::conj(avg);
    }
  }
}

HermitianMatrix HermitianMatrix::Zero(std::size_t dim) {
  return HermitianMatrix(Matrix(dim));
}

HermitianMatrix HermitianMatrix::Identity(std::size_t dim) {
  return HermitianMatrix(Matrix::Identity(dim));
}

HermitianMatrix HermitianMatrix::FromReal(
    const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<Complex>> c(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    c[r].assign(rows[r].begin(), rows[r].end());
  }
  return HermitianMatrix(Matrix::FromRows(c));
}

HermitianMatrix HermitianMatrix::Projector(std::span<const Complex> v) {
  return HermitianMatrix(Matrix::Outer(v, v));
}

HermitianMatrix HermitianMatrix::Conjugated(const Matrix& u) const {
  return HermitianMatrix(u * m_ * u.Adjoint());
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  m_ += other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
  m_ -= other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// ProbabilityDistribution

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("ProbabilityDistribution: empty");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    double& p = probs_[i];
    if (!std::isfinite(p) || p < -kTol || p > 1.0 + kTol) {
      throw std::invalid_argument("ProbabilityDistribution: entry " +
                                  std::to_string(i) + " = " + std::to_string(p) +
                                  " outside [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
    total += p;
  }
  if (std::abs(total - 1.0) > kTol) {
    throw std::invalid_argument("ProbabilityDistribution: entries sum to " +
                                std::to_string(total));
  }
}

// ---------------------------------------------------------------------------
// Entropies

double XLogX(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

namespace {

double ClampUnit(double x, const char* what) {
  if (!(x >= -kTol && x <= 1.0 + kTol)) {
    throw std::domain_error(std::string(what) + ": argument " + std::to_string(x) +
                            " outside [0, 1]");
  }
  return std::clamp(x, 0.0, 1.0);
}

}  // namespace

double BinaryEntropy(double x) {
  x = ClampUnit(x, "BinaryEntropy");
  return -(XLogX(x) + XLogX(1.0 - x)) / std::log(2.0) + 0.0;
}

double DAryEntropy(double x, int dim) {
  if (dim < 2) throw std::domain_error("DAryEntropy: dimension must be >= 2");
  x = ClampUnit(x, "DAryEntropy");
  const double d = static_cast<double>(dim);
  return (x * std::log(d - 1.0) - XLogX(x) - XLogX(1.0 - x)) / std::log(d);
}

double ShannonEntropy(const ProbabilityDistribution& p) {
  double s = 0.0;
  for (double x : p.probs()) s -= XLogX(x);
  return s / std::log(2.0);
}

double ShannonEntropy(std::span<const double> probs) {
  return ShannonEntropy(
      ProbabilityDistribution(std::vector<double>(probs.begin(), probs.end())));
}

// ---------------------------------------------------------------------------
// Jacobi eigen solver

std::vector<double> JacobiEigenvalues(std::vector<double> a, std::size_t n,
                                      std::vector<double>* vectors) {
  if (a.size() != n * n) throw std::invalid_argument("JacobiEigenvalues: bad size");
  for (double x : a) {
    if (!std::isfinite(x)) throw std::invalid_argument("JacobiEigenvalues: non-finite entry");
  }
  auto at = [&a, n](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

  if (vectors != nullptr) {
    vectors->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*vectors)[i * n + i] = 1.0;
  }

  double frob2 = 0.0;
  for (double x : a) frob2 += x * x;
  const double target = kJacobiRelTol * std::sqrt(frob2);

  bool converged = n <= 1 || frob2 == 0.0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    double off2 = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off2 += 2.0 * at(p, q) * at(p, q);
    }
    if (std::sqrt(off2) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Negligible relative to both diagonal entries: drop it.
        if (sweep > 3 && std::abs(apq) < 1e-18 * std::abs(app) &&
            std::abs(apq) < 1e-18 * std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          if (akp == 0.0 && akq == 0.0) continue;
          const double nkp = akp - s * (akq + tau * akp);
          const double nkq = akq + s * (akp - tau * akq);
          at(k, p) = at(p, k) = nkp;
          at(k, q) = at(q, k) = nkq;
        }
        if (vectors != nullptr) {
          auto& v = *vectors;
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = vkp - s * (vkq + tau * vkp);
            v[k * n + q] = vkq + s * (vkp - tau * vkq);
          }
        }
      }
    }
  }
  if (!converged) {
    double off2 = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off2 += 2.0 * at(p, q) * at(p, q);
    }
    if (std::sqrt(off2) > target) {
      throw std::runtime_error("JacobiEigenvalues: no convergence after " +
                               std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return at(i, i) > at(j, j);
  });
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = at(order[k], order[k]);
  if (vectors != nullptr) {
    std::vector<double> sorted(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) sorted[r * n + k] = (*vectors)[r * n + order[k]];
    }
    *vectors = std::move(sorted);
  }
  return values;
}

namespace {

// Connected components of the nonzero pattern of m.
std::vector<std::vector<std::size_t>> Components(const Matrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      if (m(r, c) != Complex(0.0)) parent[find(r)] = find(c);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

struct Eigenpair {
  double value;
  std::vector<Complex> vector;
};

void DiagonalizeComponent(const Matrix& m, const std::vector<std::size_t>& idx,
                          bool want_vectors, std::vector<Eigenpair>& out) {
  const std::size_t k = idx.size();
  if (k == 1) {
    Eigenpair e{m(idx[0], idx[0]).real(), {}};
    if (want_vectors) {
      e.vector.assign(m.dim(), 0.0);
      e.vector[idx[0]] = 1.0;
    }
    out.push_back(std::move(e));
    return;
  }
  const std::size_t n2 = 2 * k;
  std::vector<double> a(n2 * n2);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const Complex z = m(idx[r], idx[c]);
      a[r * n2 + c] = z.real();
      a[r * n2 + (c + k)] = -z.imag();
      a[(r + k) * n2 + c] = z.imag();
      a[(r + k) * n2 + (c + k)] = z.real();
    }
  }
  std::vector<double> vecs;
  const std::vector<double> values =
      JacobiEigenvalues(std::move(a), n2, want_vectors ? &vecs : nullptr);
  // Every eigenvalue of the embedding appears twice; keep every other one.
  for (std::size_t j = 0; j < n2; j += 2) {
    Eigenpair e{values[j], {}};
    if (want_vectors) {
      e.vector.assign(m.dim(), 0.0);
      double norm2 = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        const Complex z(vecs[r * n2 + j], vecs[(r + k) * n2 + j]);
        e.vector[idx[r]] = z;
        norm2 += std::norm(z);
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (Complex& z : e.vector) z *= inv;
    }
    out.push_back(std::move(e));
  }
}

std::vector<Eigenpair> Eigenpairs(const HermitianMatrix& h, bool want_vectors) {
  const Matrix& m = h.matrix();
  std::vector<Eigenpair> pairs;
  pairs.reserve(m.dim());
  for (const auto& group : Components(m)) {
    DiagonalizeComponent(m, group, want_vectors, pairs);
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Eigenpair& x, const Eigenpair& y) { return x.value > y.value; });
  return pairs;
}

}  // namespace

Spectrum HermitianEigenvalues(const HermitianMatrix& m) {
  std::vector<double> values;
  values.reserve(m.dim());
  for (auto& p : Eigenpairs(m, false)) values.push_back(p.value);
  return Spectrum::FromSorted(std::move(values));
}

EigenDecomposition HermitianEigensystem(const HermitianMatrix& m) {
  std::vector<double> values;
  EigenDecomposition out;
  for (auto& p : Eigenpairs(m, true)) {
    values.push_back(p.value);
    out.vectors.push_back(std::move(p.vector));
  }
  out.values = Spectrum::FromSorted(std::move(values));
  return out;
}

double TraceNorm(const HermitianMatrix& m) {
  const Spectrum spectrum = HermitianEigenvalues(m);
  double s = 0.0;
  for (double v : spectrum.values()) s += std::abs(v);
  return s;
}

double TraceDistance(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("TraceDistance: dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
  return 0.5 * TraceNorm(a - b);
}

double OperatorNorm(const HermitianMatrix& m) {
  const Spectrum s = HermitianEigenvalues(m);
  if (s.size() == 0) return 0.0;
  return std::max(std::abs(s[0]), std::abs(s[s.size() - 1]));
}

double VonNeumannEntropy(const Spectrum& s) {
  double total = 0.0;
  double h = 0.0;
  for (double v : s.values()) {
    if (v < -kTol) {
      throw std::domain_error("VonNeumannEntropy: eigenvalue " + std::to_string(v) +
                              " below -tol");
    }
    total += v;
    h -= XLogX(std::max(v, 0.0));
  }
  if (std::abs(total - 1.0) > kTol) {
    throw std::domain_error("VonNeumannEntropy: trace " + std::to_string(total) +
                            " differs from 1");
  }
  return h / std::log(2.0);
}

double VonNeumannEntropy(const HermitianMatrix& m) {
  return VonNeumannEntropy(HermitianEigenvalues(m));
}

}  // namespace qkdkr
