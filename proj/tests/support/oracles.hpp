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

// Independent reference computations used by the tests. Nothing here calls
// into the library under test.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace kansa::oracle {

using Rows = std::vector<std::vector<double>>;

/// Determinant by cofactor expansion along the first row.
inline double cofactor_det(const Rows& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  double det = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Rows minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    det += ((j % 2 == 0) ? 1.0 : -1.0) * a[0][j] * cofactor_det(minor);
  }
  return det;
}

/// All singular values, descending, from Eigen's two-sided Jacobi SVD.
inline Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues();
}

/// Adaptive Gauss-Kronrod integral of f over [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

/// Upper alpha quantile of the chi-square law with `dof` degrees of freedom.
inline double chi_square_critical(double dof, double alpha) {
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(dof), alpha));
}

/// Pearson statistic of observed counts against bin probabilities.
inline double chi_square_statistic(const std::vector<std::size_t>& counts, const std::vector<double>& probs) {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probs[i];
    const double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

/// Histogram of samples in [0, 2pi) over `bins` equal bins.
inline std::vector<std::size_t> angle_histogram(const std::vector<double>& ts, std::size_t bins) {
  std::vector<std::size_t> counts(bins, 0);
  const double width = 2.0 * M_PI / static_cast<double>(bins);
  for (double t : ts) {
    auto b = static_cast<std::size_t>(t / width);
    if (b >= bins) b = bins - 1;
    ++counts[b];
  }
  return counts;
}

/// Bin masses of the density proportional to w on [0, 2pi).
inline std::vector<double> bin_masses(const std::function<double(double)>& w, std::size_t bins) {
  const double width = 2.0 * M_PI / static_cast<double>(bins);
  std::vector<double> mass(bins);
  double total = 0.0;
  for (std::size_t i = 0; i < bins; ++i) {
    mass[i] = integrate(w, width * static_cast<double>(i), width * static_cast<double>(i + 1));
    total += mass[i];
  }
  for (double& m : mass) m /= total;
  return mass;
}

/// TPS kernel written out directly, for entrywise oracles.
inline double tps_phi(int nu, double r) { return r == 0.0 ? 0.0 : std::pow(r, 2 * nu) * std::log(r); }
inline double tps_lap(int nu, double r) {
  return r == 0.0 ? 0.0 : 4.0 * nu * std::pow(r, 2 * (nu - 1)) * (nu * std::log(r) + 1.0);
}

}  // namespace kansa::oracle
