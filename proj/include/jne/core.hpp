// Core value types and matrix norms shared by every module. Matrices are
// dense Eigen types; the norm helpers accept arbitrary Eigen expressions.
#pragma once

#include <Eigen/Dense>

#include "jne/errors.hpp"

namespace jne {

// n observations: row i of `samples` is the p-vector z^i, `confounders[i]`
// the scalar confounder it was observed under. Immutable after validation;
// safe to share read-only across threads.
struct Dataset {
  Eigen::MatrixXd samples;      // n x p
  Eigen::VectorXd confounders;  // n

  Eigen::Index n() const { return samples.rows(); }
  Eigen::Index p() const { return samples.cols(); }
};

// Rejects NaN/Inf entries, length mismatches, and p < 2.
Dataset validate_dataset(const Eigen::MatrixXd& raw_samples,
                         const Eigen::VectorXd& raw_confounders);

// Throws unless A is square with finite entries.
void ensure_square_finite(const Eigen::MatrixXd& a, const char* what);

// max_{jk} |A_jk|
template <typename Derived>
double elementwise_inf(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

// sum_{jk} |A_jk|; decomposes into per-column vector L1 terms.
template <typename Derived>
double entrywise_l1(const Eigen::MatrixBase<Derived>& a) {
  return a.cwiseAbs().sum();
}

template <typename Derived>
double vector_l1(const Eigen::MatrixBase<Derived>& v) {
  return v.cwiseAbs().sum();
}

}  // namespace jne
