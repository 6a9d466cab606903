// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the twrnsim authors

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace twrn {

using Complex = std::complex<double>;
using ComplexVec = Eigen::VectorXcd;
using ComplexMat = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Entries with magnitude at or below this threshold count as numerically
/// zero when selecting dominant taps or extracting a support set.
inline constexpr double kDominanceEps = 1e-12;

/// An R-diagonal entry below this fraction of the largest one marks the
/// factorized matrix as rank-deficient.
inline constexpr double kRankRelTol = 1e-10;

/// Thrown when a least-squares system is numerically rank-deficient.
/// Carries the rank detected by the pivoted factorization.
class RankDeficiencyError : public std::runtime_error {
 public:
  RankDeficiencyError(Index detected_rank, Index cols);
  Index detected_rank() const { return rank_; }

 private:
  Index rank_;
};

/// Thrown when a support-restricted solve would have more unknowns than
/// observations.
class SupportOverflowError : public std::runtime_error {
 public:
  SupportOverflowError(Index support_size, Index rows);
};

/// Strictly increasing set of 0-based column indices together with the
/// ambient dimension they index into.
class SupportSet {
 public:
  SupportSet() = default;

  /// Empty support in an ambient space of dimension `dim`.
  explicit SupportSet(Index dim);

  /// Takes ownership of `indices`, sorts them, and validates that they are
  /// unique and all within [0, dim).
  SupportSet(std::vector<Index> indices, Index dim);

  static SupportSet all(Index dim);

  /// Indices of entries of `v` with magnitude above kDominanceEps.
  static SupportSet nonzeros(const ComplexVec& v);

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  const std::vector<Index>& indices() const { return indices_; }
  bool contains(Index i) const;

  /// Set union; both operands must share the ambient dimension.
  SupportSet unite(const SupportSet& other) const;

  bool operator==(const SupportSet&) const = default;

 private:
  std::vector<Index> indices_;
  Index dim_ = 0;
};

/// Full discrete convolution. Output length is len(a) + len(b) - 1 and
/// entry k equals sum_j a[j] * b[k - j] over valid j.
ComplexVec convolve(const ComplexVec& a, const ComplexVec& b);

/// Tall Toeplitz (partial circulant) operator of the training sequence `x`:
/// an (N + 2L - 2) x (2L - 1) matrix whose column j is x shifted down by j
/// rows, so that for any v of length 2L - 1, matrix * v == convolve(x, v).
ComplexMat build_training_matrix(const ComplexVec& x, Index taps);

/// Minimizer of ||b - A z||_2 for a tall full-column-rank A, via a
/// column-pivoted Householder factorization. Throws RankDeficiencyError
/// when the detected rank falls short of the column count.
ComplexVec least_squares(const ComplexMat& A, const ComplexVec& b);

/// Least squares restricted to the columns in `support`; returns a
/// full-dimension vector that is zero off the support.
ComplexVec least_squares_on_support(const ComplexMat& A, const ComplexVec& b,
                                    const SupportSet& support);

/// Positions of the k largest-magnitude entries of v, ties broken toward
/// the lowest index. Entries with magnitude <= kDominanceEps never qualify,
/// so the result may hold fewer than k indices.
SupportSet top_k_support(const ComplexVec& v, Index k);

}  // namespace twrn
