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

#include "kansa/point.hpp"

namespace kansa {

/// Thin-plate spline phi(r) = r^(2 nu) log r.
class TpsKernel {
 public:
  /// Throws InputError for nu < 1.
  explicit TpsKernel(int nu = 2);

  int nu() const { return nu_; }

  /// phi(r); 0 at r = 0. Throws InputError for negative or non-finite r.
  double phi(double r) const;

  /// Radial Laplacian phi'' + phi'/r = 4 nu r^(2(nu-1)) (nu log r + 1).
  /// 0 at r = 0 when nu >= 2; throws CenterSingularityError at r = 0 for nu = 1.
  double lap_phi(double r) const;

  double phi_pair(Point2 a, Point2 b) const { return phi(distance(a, b)); }
  double lap_phi_pair(Point2 a, Point2 b) const { return lap_phi(distance(a, b)); }

  /// exp(-1/nu), the only positive zero of lap_phi.
  double critical_radius() const;

 private:
  int nu_;
};

}  // namespace kansa
