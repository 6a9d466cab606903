// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the twrnsim authors

#include "twrn/signal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace twrn {

RankDeficiencyError::RankDeficiencyError(Index detected_rank, Index cols)
    : std::runtime_error("matrix is rank-deficient: detected rank " +
                         std::to_string(detected_rank) + " of " +
                         std::to_string(cols) + " columns"),
      rank_(detected_rank) {}

SupportOverflowError::SupportOverflowError(Index support_size, Index rows)
    : std::runtime_error("support of size " + std::to_string(support_size) +
                         " exceeds the " + std::to_string(rows) +
                         " available observations") {}

SupportSet::SupportSet(Index dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("SupportSet: negative dimension");
}

SupportSet::SupportSet(std::vector<Index> indices, Index dim)
    : indices_(std::move(indices)), dim_(dim) {
  if (dim < 0) throw std::invalid_argument("SupportSet: negative dimension");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("SupportSet: duplicate index");
  if (!indices_.empty() && (indices_.front() < 0 || indices_.back() >= dim))
    throw std::invalid_argument("SupportSet: index out of range");
}

SupportSet SupportSet::all(Index dim) {
  std::vector<Index> idx(static_cast<std::size_t>(dim));
  std::iota(idx.begin(), idx.end(), Index{0});
  return SupportSet(std::move(idx), dim);
}

SupportSet SupportSet::nonzeros(const ComplexVec& v) {
  std::vector<Index> idx;
  for (Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > kDominanceEps) idx.push_back(i);
  return SupportSet(std::move(idx), v.size());
}

bool SupportSet::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

SupportSet SupportSet::unite(const SupportSet& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("SupportSet: union of mismatched dimensions");
  std::vector<Index> merged;
  merged.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(merged));
  return SupportSet(std::move(merged), dim_);
}

ComplexVec convolve(const ComplexVec& a, const ComplexVec& b) {
  if (a.size() == 0 || b.size() == 0)
    throw std::invalid_argument("convolve: empty input");
  ComplexVec out = ComplexVec::Zero(a.size() + b.size() - 1);
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ComplexMat build_training_matrix(const ComplexVec& x, Index taps) {
  const Index n = x.size();
  if (n < 1) throw std::invalid_argument("build_training_matrix: empty x");
  if (taps < 1) throw std::invalid_argument("build_training_matrix: taps < 1");
  const Index cols = 2 * taps - 1;
  const Index rows = n + 2 * taps - 2;
  ComplexMat m = ComplexMat::Zero(rows, cols);
  for (Index j = 0; j < cols; ++j) m.block(j, j, n, 1) = x;
  return m;
}

ComplexVec least_squares(const ComplexMat& A, const ComplexVec& b) {
  if (A.rows() != b.size())
    throw std::invalid_argument("least_squares: row/rhs size mismatch");
  if (A.rows() < A.cols())
    throw std::invalid_argument("least_squares: system is underdetermined");
  if (A.cols() == 0) return ComplexVec();
  Eigen::ColPivHouseholderQR<ComplexMat> qr(A);
  qr.setThreshold(kRankRelTol);
  if (qr.rank() < A.cols()) throw RankDeficiencyError(qr.rank(), A.cols());
  return qr.solve(b);
}

ComplexVec least_squares_on_support(const ComplexMat& A, const ComplexVec& b,
                                    const SupportSet& support) {
  if (support.dim() != A.cols())
    throw std::invalid_argument(
        "least_squares_on_support: support dimension mismatch");
  if (support.size() > A.rows())
    throw SupportOverflowError(support.size(), A.rows());
  ComplexVec full = ComplexVec::Zero(A.cols());
  if (support.empty()) return full;
  ComplexMat sub(A.rows(), support.size());
  for (Index k = 0; k < support.size(); ++k)
    sub.col(k) = A.col(support.indices()[static_cast<std::size_t>(k)]);
  const ComplexVec z = least_squares(sub, b);
  for (Index k = 0; k < support.size(); ++k)
    full[support.indices()[static_cast<std::size_t>(k)]] = z[k];
  return full;
}

SupportSet top_k_support(const ComplexVec& v, Index k) {
  if (k < 0 || k > v.size())
    throw std::invalid_argument("top_k_support: k out of range");
  std::vector<Index> order(static_cast<std::size_t>(v.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const double ma = std::abs(v[a]);
    const double mb = std::abs(v[b]);
    return ma != mb ? ma > mb : a < b;
  });
  std::vector<Index> kept;
  for (Index r = 0; r < k; ++r) {
    const Index i = order[static_cast<std::size_t>(r)];
    if (std::abs(v[i]) > kDominanceEps) kept.push_back(i);
  }
  return SupportSet(std::move(kept), v.size());
}

}  // namespace twrn
