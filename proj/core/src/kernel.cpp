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

#include "kansa/kernel.hpp"

#include <cmath>
#include <string>

#include "kansa/errors.hpp"

namespace kansa {
namespace {

double int_pow(double r, int k) {
  double result = 1.0;
  for (int i = 0; i < k; ++i) result *= r;
  return result;
}

void check_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw InputError("kernel radius must be finite and nonnegative");
}

}  // namespace

TpsKernel::TpsKernel(int nu) : nu_(nu) {
  if (nu < 1) throw InputError("TPS exponent nu must be >= 1, got " + std::to_string(nu));
}

double TpsKernel::phi(double r) const {
  check_radius(r);
  if (r == 0.0) return 0.0;
  return int_pow(r, 2 * nu_) * std::log(r);
}

double TpsKernel::lap_phi(double r) const {
  check_radius(r);
  if (r == 0.0) {
    if (nu_ == 1) throw CenterSingularityError("Laplacian of the nu = 1 thin-plate spline diverges at its center");
    return 0.0;
  }
  const double nu = static_cast<double>(nu_);
  return 4.0 * nu * int_pow(r, 2 * (nu_ - 1)) * (nu * std::log(r) + 1.0);
}

double TpsKernel::critical_radius() const { return std::exp(-1.0 / static_cast<double>(nu_)); }

}  // namespace kansa
