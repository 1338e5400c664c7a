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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kansa/geometry.hpp"
#include "kansa/kernel.hpp"
#include "kansa/linalg.hpp"

namespace kansa {

/// Interior centers P_1..P_n and boundary abscissas t_1..t_m with cached
/// Q_h = gamma(t_h). Column/row k of the collocation matrix belongs to
/// center(k): interior centers first, then boundary centers.
class CollocationSet {
 public:
  CollocationSet() = default;
  CollocationSet(const AnalyticCurve& curve, std::vector<Point2> interior, std::vector<double> abscissas);

  std::size_t n() const { return interior_.size(); }
  std::size_t m() const { return abscissas_.size(); }
  std::size_t size() const { return n() + m(); }

  std::span<const Point2> interior() const { return interior_; }
  std::span<const double> abscissas() const { return abscissas_; }
  std::span<const Point2> boundary() const { return boundary_; }
  Point2 center(std::size_t k) const { return k < n() ? interior_[k] : boundary_[k - n()]; }
  /// All centers in matrix order.
  std::vector<Point2> centers() const;

  CollocationSet with_interior(Point2 p) const;
  CollocationSet with_boundary(const AnalyticCurve& curve, double t) const;

  friend bool operator==(const CollocationSet&, const CollocationSet&) = default;

 private:
  std::vector<Point2> interior_;
  std::vector<double> abscissas_;
  std::vector<Point2> boundary_;
};

/// Throws InvalidSetError unless all pairwise distances exceed
/// 1e-12 * diameter, every P_i is strictly inside, and every Q_h lies on the
/// boundary curve to 1e-12 * diameter.
void validate(const CollocationSet& set, const Domain& domain);

/// The N x N unsymmetric collocation matrix
///
///   [ lap phi_j(P_i)  lap psi_k(P_i) ]
///   [ phi_j(Q_h)      psi_k(Q_h)     ]
///
/// with interior rows/columns first. The diagonal is exactly zero.
struct KansaMatrix {
  DenseMatrix values;
  std::size_t n = 0;
  std::size_t m = 0;

  std::size_t size() const { return n + m; }
  friend bool operator==(const KansaMatrix&, const KansaMatrix&) = default;
};

/// Entry (row, col) of the collocation matrix of `set`.
double kansa_entry(const TpsKernel& kernel, const CollocationSet& set, std::size_t row, std::size_t col);

/// Throws UnsupportedKernelError for nu = 1 and InvalidSetError for a set
/// that fails validate().
KansaMatrix assemble(const TpsKernel& kernel, const Domain& domain, const CollocationSet& set);

/// Appends Q_{m+1} = gamma(t) as the last row and column. All previous entries
/// are copied unchanged; the result equals a fresh assemble() bitwise.
std::pair<KansaMatrix, CollocationSet> extend_boundary(const KansaMatrix& k, const TpsKernel& kernel,
                                                       const Domain& domain, const CollocationSet& set,
                                                       double t);

/// Inserts P_{n+1} as row and column n, between the interior and boundary
/// blocks.
std::pair<KansaMatrix, CollocationSet> extend_interior(const KansaMatrix& k, const TpsKernel& kernel,
                                                       const Domain& domain, const CollocationSet& set,
                                                       Point2 p);

using ScalarField = std::function<double(Point2)>;

/// Source term f of the Poisson equation and Dirichlet datum g.
struct RhsSpec {
  ScalarField f;
  ScalarField g;
  std::string f_name;
  std::string g_name;
};

/// (f(P_1), ..., f(P_n), g(Q_1), ..., g(Q_m)). Throws RhsEvaluationError when
/// an evaluation throws or is non-finite.
std::vector<double> assemble_rhs(const RhsSpec& rhs, const CollocationSet& set);

}  // namespace kansa
