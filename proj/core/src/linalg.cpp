// Copyright 2026 The kansa-tps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kansa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "kansa/errors.hpp"

namespace kansa {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  DenseMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix initializer");
    std::copy(row.begin(), row.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * c));
    ++i;
  }
  return m;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> DenseMatrix::multiply_transposed(std::span<const double> x) const {
  std::vector<double> y(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double xi = x[i];
    for (std::size_t j = 0; j < cols_; ++j) y[j] += (*this)(i, j) * xi;
  }
  return y;
}

double DenseMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double DenseMatrix::max_abs() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

double norm_inf(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

double norm2(std::span<const double> v) {
  double scale = norm_inf(v);
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double s = 0.0;
  for (double x : v) s += (x / scale) * (x / scale);
  return scale * std::sqrt(s);
}

double DetValue::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

LuFactorization lu_factor(const DenseMatrix& a) {
  if (!a.square()) throw InputError("LU factorization needs a square matrix");
  for (double v : a.data()) {
    if (!std::isfinite(v)) throw InputError("LU factorization input has non-finite entries");
  }
  const std::size_t n = a.rows();
  LuFactorization f;
  f.n_ = n;
  f.lu_ = a;
  f.perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm_[i] = i;

  DenseMatrix& lu = f.lu_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        pivot = i;
      }
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      std::swap(f.perm_[k], f.perm_[pivot]);
      ++f.swaps_;
    }
    const double d = lu(k, k);
    if (d == 0.0) {
      f.zero_pivot_ = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu(i, k) / d;
      lu(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return f;
}

DetValue log_abs_det(const LuFactorization& lu) {
  if (lu.has_zero_pivot()) return {0, -std::numeric_limits<double>::infinity()};
  int sign = lu.swaps() % 2 == 0 ? 1 : -1;
  double log_abs = 0.0;
  for (std::size_t k = 0; k < lu.size(); ++k) {
    const double d = lu.packed()(k, k);
    if (d < 0.0) sign = -sign;
    log_abs += std::log(std::abs(d));
  }
  return {sign, log_abs};
}

std::vector<double> solve(const LuFactorization& lu, std::span<const double> b) {
  const std::size_t n = lu.size();
  if (b.size() != n) throw InputError("right-hand side length does not match the matrix");
  if (lu.has_zero_pivot()) throw SingularSystemError("linear system is singular (zero pivot)");
  const DenseMatrix& f = lu.packed();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[lu.perm()[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f(i, j) * x[j];
    x[i] = s / f(i, i);
  }
  return x;
}

// A^T = U^T L^T P, so solve U^T z = b, then L^T w = z, then x = P^T w.
std::vector<double> solve_transposed(const LuFactorization& lu, std::span<const double> b) {
  const std::size_t n = lu.size();
  if (b.size() != n) throw InputError("right-hand side length does not match the matrix");
  if (lu.has_zero_pivot()) throw SingularSystemError("linear system is singular (zero pivot)");
  const DenseMatrix& f = lu.packed();
  std::vector<double> z(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    double s = z[i];
    for (std::size_t j = 0; j < i; ++j) s -= f(j, i) * z[j];
    z[i] = s / f(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = z[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f(j, i) * z[j];
    z[i] = s;
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[lu.perm()[i]] = z[i];
  return x;
}

namespace {

std::vector<double> start_vector(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i) + 1.0);
  const double s = norm2(v);
  for (double& x : v) x /= s;
  return v;
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

SigmaExtremes sigma_extremes(const DenseMatrix& a, const LuFactorization& lu) {
  SigmaExtremes out;
  const std::size_t n = a.rows();
  if (n == 0) return out;

  // sigma_max: v <- A^T A v, estimate |A v| for unit v.
  std::vector<double> v = start_vector(n);
  double estimate = 0.0;
  for (int it = 1; it <= kSigmaMaxIterations; ++it) {
    const std::vector<double> w = a.multiply(v);
    const double next = norm2(w);
    out.iterations_max = it;
    std::vector<double> u = a.multiply_transposed(w);
    const double un = norm2(u);
    const bool done = std::abs(next - estimate) <= kSigmaTolerance * next;
    estimate = next;
    if (done || un == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / un;
  }
  out.sigma_max = estimate;

  if (lu.has_zero_pivot() || out.sigma_max == 0.0) {
    out.sigma_min = 0.0;
    return out;
  }

  // sigma_min: y = A^-T v, z = A^-1 y = (A^T A)^-1 v; 1 / sigma_min^2 ~ |y|^2.
  v = start_vector(n);
  estimate = 0.0;
  for (int it = 1; it <= kSigmaMaxIterations; ++it) {
    const std::vector<double> y = solve_transposed(lu, v);
    const std::vector<double> z = solve(lu, y);
    out.iterations_min = it;
    const double yn = norm2(y);
    const double zn = norm2(z);
    if (!all_finite(z) || !std::isfinite(yn) || !std::isfinite(zn) || zn == 0.0) {
      estimate = 0.0;
      break;
    }
    const double next = 1.0 / yn;
    const bool done = std::abs(next - estimate) <= kSigmaTolerance * next;
    estimate = next;
    if (done) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = z[i] / zn;
  }
  out.sigma_min = estimate;
  return out;
}

SigmaExtremes sigma_extremes(const DenseMatrix& a) { return sigma_extremes(a, lu_factor(a)); }

}  // namespace kansa
