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
#include <cmath>
#include <optional>
#include <utility>

#include "roundness/errors.hpp"
#include "roundness/metric.hpp"

namespace roundness {

/// A nonzero real vector whose entries sum to zero (within 1e-12 of its
/// max-norm).  These are the admissible coefficient vectors of the
/// negative-type quadratic form.
struct ZeroSumVector {
  Eigen::VectorXd zeta;

  static ZeroSumVector checked(Eigen::VectorXd z) {
    if (z.size() == 0 || z.isZero(0.0))
      throw InvalidInput("zero-sum vector must not be identically zero");
    const double scale = z.cwiseAbs().maxCoeff();
    if (std::abs(z.sum()) > 1e-12 * scale)
      throw InvalidInput("vector entries do not sum to zero");
    return ZeroSumVector{std::move(z)};
  }

  /// Projects an arbitrary vector onto the zero-sum hyperplane by removing
  /// its mean, then validates.
  static ZeroSumVector centered(Eigen::VectorXd z) {
    z.array() -= z.mean();
    return checked(std::move(z));
  }
};

/// Witness that p-negative type fails: a zero-sum vector on which the
/// quadratic form sum_{ij} d(i,j)^p zeta_i zeta_j is strictly positive.
struct NTCertificate {
  double p;
  ZeroSumVector zeta;
  double value;  // form value at zeta; > 0 by construction

  static NTCertificate checked(double p, ZeroSumVector z, double value) {
    if (!(value > 0.0))
      throw InvalidInput("certificate form value must be positive");
    return NTCertificate{p, std::move(z), value};
  }
};

/// Output of the supremal-exponent search.  When `capped`, negative type
/// still holds at the search cap and p_sup equals the cap.  Otherwise p_sup
/// is bracketed to the requested width and `certificate_above` witnesses
/// failure just above it.
struct SupremumResult {
  double p_sup = 0.0;
  bool capped = false;
  std::optional<NTCertificate> certificate_above;
};

/// zeta' * M * zeta for a symmetric kernel matrix M (full double sum, both
/// orders counted).
template <typename DerivedM, typename DerivedZ>
double quadratic_form(const Eigen::MatrixBase<DerivedM>& kernel,
                      const Eigen::MatrixBase<DerivedZ>& zeta) {
  if (kernel.rows() != kernel.cols() || kernel.rows() != zeta.size())
    throw InvalidInput("quadratic form dimension mismatch");
  return zeta.dot(kernel * zeta);
}

/// The negative-type form sum_{ij} d(i,j)^p zeta_i zeta_j.  The space has
/// p-negative type exactly when this is <= 0 for every zero-sum zeta.
inline double nt_form(const DistanceMatrix& D, double p,
                      const ZeroSumVector& zeta) {
  if (zeta.zeta.size() != D.n())
    throw InvalidInput("coefficient vector length does not match point count");
  return quadratic_form(power_matrix(D, p), zeta.zeta);
}

/// Orthonormal basis of the zero-sum hyperplane {z : sum z_i = 0} in R^n,
/// returned as the columns of an n x (n-1) matrix.  Built from the
/// Householder reflection that swaps e_0 with the normalized all-ones vector.
inline Eigen::MatrixXd zero_sum_basis(Eigen::Index n) {
  if (n < 2) throw InvalidInput("zero-sum hyperplane needs n >= 2");
  Eigen::VectorXd u =
      Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  u(0) -= 1.0;
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) -
                      (2.0 / u.squaredNorm()) * u * u.transpose();
  return h.rightCols(n - 1);
}

struct NTGap {
  double gap;           // max of the form over unit zero-sum vectors
  ZeroSumVector argmax;  // unit-norm maximizer
};

/// Maximum of the negative-type form over the unit sphere of the zero-sum
/// hyperplane, with its maximizer.  This is the top eigenvalue of the form
/// restricted to the hyperplane; gap <= 0 iff the space has p-negative type.
inline NTGap nt_gap(const DistanceMatrix& D, double p) {
  const Eigen::Index n = D.n();
  if (n < 2) throw InvalidInput("nt_gap needs at least two points");
  const Eigen::MatrixXd basis = zero_sum_basis(n);
  const Eigen::MatrixXd m = power_matrix(D, p);
  Eigen::MatrixXd restricted = basis.transpose() * m * basis;
  restricted = 0.5 * (restricted + restricted.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(restricted);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("eigensolver did not converge",
                         (restricted - restricted.transpose()).norm());
  const Eigen::Index top = n - 2;  // eigenvalues in ascending order
  const double gap = solver.eigenvalues()(top);
  Eigen::VectorXd z = basis * solver.eigenvectors().col(top);
  z.array() -= z.mean();  // kill rounding drift off the hyperplane
  z /= z.norm();
  return NTGap{gap, ZeroSumVector::checked(std::move(z))};
}

struct NegativeTypeCheck {
  bool holds;
  double gap;
  std::optional<NTCertificate> certificate;  // present iff !holds
};

/// Decides p-negative type up to an absolute gap tolerance.  When the form
/// can be made positive, returns a certificate carrying the unit-norm
/// maximizer and its recomputed form value.
inline NegativeTypeCheck has_p_negative_type(const DistanceMatrix& D, double p,
                                             double tol) {
  if (!(tol > 0.0)) throw InvalidInput("gap tolerance must be positive");
  NTGap g = nt_gap(D, p);
  if (g.gap <= tol) return NegativeTypeCheck{true, g.gap, std::nullopt};
  const double value = nt_form(D, p, g.argmax);
  return NegativeTypeCheck{
      false, g.gap, NTCertificate::checked(p, std::move(g.argmax), value)};
}

/// Supremal p with p-negative type, located by bisection over [0, p_cap].
///
/// The set of exponents with negative type is an interval starting at 0, so
/// a bracket [lo, hi] with gap(lo) <= tol and gap(hi) > tol narrows to the
/// endpoint.  gap_tol is relative to the largest entry of the power matrix
/// at the probed exponent.  Returns capped = true when negative type still
/// holds at p_cap.
inline SupremumResult nt_supremum(const DistanceMatrix& D, double tol_p,
                                  double gap_tol = 1e-10,
                                  double p_cap = 16.0) {
  if (!(tol_p > 0.0)) throw InvalidInput("bisection tolerance must be positive");
  if (!(p_cap >= 1.0)) throw InvalidInput("p_cap must be >= 1");
  if (!(gap_tol > 0.0)) throw InvalidInput("gap_tol must be positive");

  const double d_max = D.d.maxCoeff();
  const auto scaled_tol = [&](double p) {
    return gap_tol * std::max(kernel_pow(d_max, p), 1e-300);
  };
  const auto holds_at = [&](double p) {
    return has_p_negative_type(D, p, scaled_tol(p)).holds;
  };

  if (holds_at(p_cap)) return SupremumResult{p_cap, true, std::nullopt};

  double lo = 0.0, hi = p_cap;
  while (hi - lo > tol_p) {
    const double mid = 0.5 * (lo + hi);
    if (holds_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  const double p_sup = 0.5 * (lo + hi);

  SupremumResult result{p_sup, false, std::nullopt};
  const double p_above = p_sup + tol_p;
  NTGap g = nt_gap(D, p_above);
  if (g.gap > 0.0) {
    const double value = nt_form(D, p_above, g.argmax);
    if (value > 0.0)
      result.certificate_above =
          NTCertificate::checked(p_above, std::move(g.argmax), value);
  }
  return result;
}

}  // namespace roundness
