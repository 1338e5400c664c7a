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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kansa {

/// Dense row-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);
  /// Row-major initializer; all rows must have equal length.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<double> multiply_transposed(std::span<const double> x) const;
  double norm_inf() const;
  double max_abs() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double norm_inf(std::span<const double> v);
double norm2(std::span<const double> v);

/// Sign and natural log of |det|; log_abs is -inf when sign is 0.
struct DetValue {
  int sign = 0;
  double log_abs = 0.0;

  /// sign * exp(log_abs); overflows to +-inf for large matrices.
  double value() const;
};

/// PA = LU with partial pivoting. Zero pivots are recorded, not fatal.
class LuFactorization {
 public:
  std::size_t size() const { return n_; }
  /// Unit-lower L below the diagonal, U on and above, packed row-major.
  const DenseMatrix& packed() const { return lu_; }
  /// Row i of PA is row perm()[i] of A.
  std::span<const std::size_t> perm() const { return perm_; }
  std::size_t swaps() const { return swaps_; }
  bool has_zero_pivot() const { return zero_pivot_; }

 private:
  friend LuFactorization lu_factor(const DenseMatrix& a);

  std::size_t n_ = 0;
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
  std::size_t swaps_ = 0;
  bool zero_pivot_ = false;
};

/// Throws InputError for non-square or non-finite input.
LuFactorization lu_factor(const DenseMatrix& a);

DetValue log_abs_det(const LuFactorization& lu);

/// Solves A x = b. Throws SingularSystemError when a pivot is exactly zero.
std::vector<double> solve(const LuFactorization& lu, std::span<const double> b);
/// Solves A^T x = b.
std::vector<double> solve_transposed(const LuFactorization& lu, std::span<const double> b);

struct SigmaExtremes {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  int iterations_min = 0;
  int iterations_max = 0;

  /// sigma_min / sigma_max (0 for the zero matrix).
  double ratio() const { return sigma_max > 0.0 ? sigma_min / sigma_max : 0.0; }
};

inline constexpr double kSigmaTolerance = 1e-8;
inline constexpr int kSigmaMaxIterations = 10'000;

/// Extreme singular values: power iteration on A^T A for sigma_max, inverse
/// iteration through the LU factors for sigma_min. sigma_min is 0 when the
/// factorization has an exact zero pivot.
SigmaExtremes sigma_extremes(const DenseMatrix& a, const LuFactorization& lu);
SigmaExtremes sigma_extremes(const DenseMatrix& a);

/// sigma_min / sigma_max at or below this is the "numerically singular" verdict.
inline constexpr double kSingularRatio = 1e-13;

inline bool numerically_singular(const SigmaExtremes& s) { return !(s.ratio() > kSingularRatio); }

}  // namespace kansa
