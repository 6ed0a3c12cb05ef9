// Copyright 2026 The roundness authors
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

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "roundness/errors.hpp"

namespace roundness {

using Point3 = Eigen::Vector3d;

/// Kernel power with the convention 0^p = 0 for every p >= 0 (including
/// p = 0).  All distance powers in this library go through here so that the
/// diagonal of a power matrix vanishes and coincident points cancel.
inline double kernel_pow(double d, double p) {
  return d > 0.0 ? std::pow(d, p) : 0.0;
}

/// Sup-norm (Chebyshev) distance between two points of R^3.
template <typename DerivedA, typename DerivedB>
double sup_distance(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  if (!a.allFinite() || !b.allFinite())
    throw InvalidInput("sup_distance: non-finite coordinate");
  return (a - b).cwiseAbs().maxCoeff();
}

/// A finite (quasi-)metric space given by its matrix of pairwise distances:
/// symmetric, zero diagonal, strictly positive off the diagonal.
struct DistanceMatrix {
  Eigen::MatrixXd d;
  std::vector<std::string> labels;  // optional; empty or one per point

  Eigen::Index n() const { return d.rows(); }

  /// Validating constructor from a raw matrix.
  static DistanceMatrix from_matrix(Eigen::MatrixXd m,
                                    std::vector<std::string> labels = {}) {
    const Eigen::Index n = m.rows();
    if (n < 1 || m.cols() != n)
      throw InvalidInput("distance matrix must be square and non-empty");
    if (!m.allFinite())
      throw InvalidInput("distance matrix has non-finite entries");
    if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != n)
      throw InvalidInput("label count does not match matrix size");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (m(i, i) != 0.0)
        throw InvalidInput("distance matrix diagonal must be zero");
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (m(i, j) != m(j, i))
          throw InvalidInput("distance matrix must be symmetric");
        if (m(i, j) < 0.0)
          throw InvalidInput("distances must be nonnegative");
        if (m(i, j) == 0.0)
          throw DegenerateInput("zero off-diagonal distance (duplicate points)");
      }
    }
    return DistanceMatrix{std::move(m), std::move(labels)};
  }
};

/// Pairwise sup-norm distance matrix of a point list.  Requires at least two
/// pairwise distinct points.
inline DistanceMatrix distance_matrix(std::span<const Point3> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 2) throw InvalidInput("need at least two points");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dist = sup_distance(points[i], points[j]);
      if (dist == 0.0)
        throw DegenerateInput("duplicate points at indices " +
                              std::to_string(i) + ", " + std::to_string(j));
      d(i, j) = d(j, i) = dist;
    }
  return DistanceMatrix{std::move(d), {}};
}

/// Result of checking the relaxed triangle inequality
///   d(i,j) <= K * (d(i,k) + d(k,j)) + tol
/// over all triples.  `worst_ratio` is the largest d(i,j)/(d(i,k)+d(k,j))
/// encountered and `worst_triple` attains it.
struct QuasiMetricReport {
  bool holds = true;
  std::array<Eigen::Index, 3> worst_triple{0, 0, 0};
  double worst_ratio = 0.0;
};

inline QuasiMetricReport validate_quasi_metric(const DistanceMatrix& D,
                                               double K, double tol) {
  if (!(K >= 1.0)) throw InvalidInput("quasi-metric constant K must be >= 1");
  if (!(tol >= 0.0)) throw InvalidInput("tolerance must be nonnegative");
  QuasiMetricReport report;
  const Eigen::Index n = D.n();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double through = D.d(i, k) + D.d(k, j);
        const double ratio = D.d(i, j) / through;
        if (ratio > report.worst_ratio) {
          report.worst_ratio = ratio;
          report.worst_triple = {i, j, k};
        }
        if (D.d(i, j) > K * through + tol) report.holds = false;
      }
    }
  return report;
}

/// Entrywise p-th power of a matrix of distances, with zero diagonal
/// (0^0 = 0 convention, see kernel_pow).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
power_matrix(const Eigen::MatrixBase<Derived>& d, double p) {
  if (p < 0.0) throw InvalidExponent("exponent must be nonnegative");
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                            Eigen::Dynamic>;
  Mat out = d.derived().array()
                .unaryExpr([p](double v) { return kernel_pow(v, p); })
                .matrix();
  return out;
}

inline Eigen::MatrixXd power_matrix(const DistanceMatrix& D, double p) {
  return power_matrix(D.d, p);
}

}  // namespace roundness
