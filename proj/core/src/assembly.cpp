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

#include "kansa/assembly.hpp"

#include <cmath>

#include <fmt/format.h>

#include "kansa/errors.hpp"

namespace kansa {
namespace {

void require_supported(const TpsKernel& kernel) {
  if (kernel.nu() < 2) {
    throw UnsupportedKernelError(
        "collocation needs nu >= 2: the Laplacian of the nu = 1 thin-plate spline is undefined at its center");
  }
}

void require_consistent(const KansaMatrix& k, const CollocationSet& set) {
  if (k.n != set.n() || k.m != set.m() || k.values.rows() != set.size() || !k.values.square()) {
    throw InvalidSetError("collocation matrix does not match the collocation set");
  }
}

void require_distinct(Point2 p, const CollocationSet& set, const Domain& domain) {
  const double min_distance = 1e-12 * domain.diameter();
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (distance(p, set.center(k)) <= min_distance) {
      throw InvalidSetError(fmt::format("new center ({}, {}) duplicates center {}", p.x, p.y, k));
    }
  }
}

}  // namespace

CollocationSet::CollocationSet(const AnalyticCurve& curve, std::vector<Point2> interior,
                               std::vector<double> abscissas)
    : interior_(std::move(interior)), abscissas_(std::move(abscissas)) {
  boundary_.reserve(abscissas_.size());
  for (double t : abscissas_) boundary_.push_back(curve.eval(t));
}

std::vector<Point2> CollocationSet::centers() const {
  std::vector<Point2> all(interior_);
  all.insert(all.end(), boundary_.begin(), boundary_.end());
  return all;
}

CollocationSet CollocationSet::with_interior(Point2 p) const {
  CollocationSet next = *this;
  next.interior_.push_back(p);
  return next;
}

CollocationSet CollocationSet::with_boundary(const AnalyticCurve& curve, double t) const {
  CollocationSet next = *this;
  next.abscissas_.push_back(t);
  next.boundary_.push_back(curve.eval(t));
  return next;
}

void validate(const CollocationSet& set, const Domain& domain) {
  const double tol = 1e-12 * domain.diameter();
  for (std::size_t i = 0; i < set.n(); ++i) {
    const Point2 p = set.interior()[i];
    if (!domain.contains(p)) {
      throw InvalidSetError(fmt::format("interior center {} at ({}, {}) is not strictly inside the domain", i, p.x, p.y));
    }
  }
  for (std::size_t h = 0; h < set.m(); ++h) {
    const double t = set.abscissas()[h];
    if (!std::isfinite(t)) throw InvalidSetError(fmt::format("boundary abscissa {} is not finite", h));
    if (distance(domain.boundary().eval(t), set.boundary()[h]) > tol) {
      throw InvalidSetError(fmt::format("boundary center {} does not lie on the boundary curve", h));
    }
  }
  const std::vector<Point2> all = set.centers();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (distance(all[i], all[j]) <= tol) {
        throw InvalidSetError(fmt::format("centers {} and {} coincide", i, j));
      }
    }
  }
}

double kansa_entry(const TpsKernel& kernel, const CollocationSet& set, std::size_t row, std::size_t col) {
  const Point2 c = set.center(col);
  if (row < set.n()) return kernel.lap_phi_pair(c, set.interior()[row]);
  return kernel.phi_pair(c, set.boundary()[row - set.n()]);
}

KansaMatrix assemble(const TpsKernel& kernel, const Domain& domain, const CollocationSet& set) {
  require_supported(kernel);
  validate(set, domain);
  const std::size_t size = set.size();
  KansaMatrix k{DenseMatrix(size, size), set.n(), set.m()};
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) k.values(i, j) = kansa_entry(kernel, set, i, j);
  }
  return k;
}

std::pair<KansaMatrix, CollocationSet> extend_boundary(const KansaMatrix& k, const TpsKernel& kernel,
                                                       const Domain& domain, const CollocationSet& set,
                                                       double t) {
  require_supported(kernel);
  require_consistent(k, set);
  if (!std::isfinite(t)) throw InvalidSetError("boundary abscissa is not finite");
  require_distinct(domain.boundary().eval(t), set, domain);

  CollocationSet next = set.with_boundary(domain.boundary(), t);
  const std::size_t old = set.size();
  const std::size_t size = old + 1;
  KansaMatrix out{DenseMatrix(size, size), set.n(), set.m() + 1};
  for (std::size_t i = 0; i < old; ++i) {
    for (std::size_t j = 0; j < old; ++j) out.values(i, j) = k.values(i, j);
  }
  for (std::size_t j = 0; j < size; ++j) out.values(old, j) = kansa_entry(kernel, next, old, j);
  for (std::size_t i = 0; i < old; ++i) out.values(i, old) = kansa_entry(kernel, next, i, old);
  return {std::move(out), std::move(next)};
}

std::pair<KansaMatrix, CollocationSet> extend_interior(const KansaMatrix& k, const TpsKernel& kernel,
                                                       const Domain& domain, const CollocationSet& set,
                                                       Point2 p) {
  require_supported(kernel);
  require_consistent(k, set);
  if (!domain.contains(p)) {
    throw InvalidSetError(fmt::format("new interior center ({}, {}) is not strictly inside the domain", p.x, p.y));
  }
  require_distinct(p, set, domain);

  CollocationSet next = set.with_interior(p);
  const std::size_t old = set.size();
  const std::size_t size = old + 1;
  const std::size_t at = set.n();
  auto shifted = [at](std::size_t i) { return i < at ? i : i + 1; };
  KansaMatrix out{DenseMatrix(size, size), set.n() + 1, set.m()};
  for (std::size_t i = 0; i < old; ++i) {
    for (std::size_t j = 0; j < old; ++j) out.values(shifted(i), shifted(j)) = k.values(i, j);
  }
  for (std::size_t j = 0; j < size; ++j) out.values(at, j) = kansa_entry(kernel, next, at, j);
  for (std::size_t i = 0; i < size; ++i) {
    if (i != at) out.values(i, at) = kansa_entry(kernel, next, i, at);
  }
  return {std::move(out), std::move(next)};
}

std::vector<double> assemble_rhs(const RhsSpec& rhs, const CollocationSet& set) {
  std::vector<double> b;
  b.reserve(set.size());
  auto eval = [](const ScalarField& field, const std::string& name, Point2 p) {
    double v = 0.0;
    try {
      v = field(p);
    } catch (const std::exception& e) {
      throw RhsEvaluationError(fmt::format("evaluating {} at ({}, {}): {}", name, p.x, p.y, e.what()));
    }
    if (!std::isfinite(v)) {
      throw RhsEvaluationError(fmt::format("{} is not finite at ({}, {})", name, p.x, p.y));
    }
    return v;
  };
  for (const Point2& p : set.interior()) b.push_back(eval(rhs.f, rhs.f_name.empty() ? "f" : rhs.f_name, p));
  for (const Point2& q : set.boundary()) b.push_back(eval(rhs.g, rhs.g_name.empty() ? "g" : rhs.g_name, q));
  return b;
}

}  // namespace kansa
