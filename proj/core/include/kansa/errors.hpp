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
#include <stdexcept>
#include <string>

namespace kansa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed numeric input: non-square or non-finite matrices, negative radii.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Boundary curve fails the regularity or simplicity checks.
class CurveError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// A rejection sampler exhausted its consecutive-rejection budget.
class DegenerateDomainError : public Error {
 public:
  using Error::Error;
};

class DensityError : public Error {
 public:
  using Error::Error;
};

/// Laplacian requested at the center of a kernel with nu = 1.
class CenterSingularityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedKernelError : public Error {
 public:
  using Error::Error;
};

/// A collocation set violates distinctness, interiority or on-curve invariants.
class InvalidSetError : public Error {
 public:
  using Error::Error;
};

struct SingularDiagnostics {
  int det_sign = 0;
  double log_abs_det = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Linear system is singular (exact zero pivot) or numerically singular.
/// Carries whatever diagnostics were available when the verdict was made.
class SingularSystemError : public Error {
 public:
  using Diagnostics = SingularDiagnostics;

  explicit SingularSystemError(const std::string& what, Diagnostics diagnostics = {})
      : Error(what), diagnostics_(diagnostics) {}
  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

class RhsEvaluationError : public Error {
 public:
  using Error::Error;
};

/// Syntax or evaluation error in an expression. `offset()` is the byte
/// offset into the source text (0 for evaluation errors).
class ExpressionError : public Error {
 public:
  ExpressionError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kansa
