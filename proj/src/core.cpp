#include "jne/core.hpp"

#include <string>

namespace jne {

Dataset validate_dataset(const Eigen::MatrixXd& raw_samples,
                         const Eigen::VectorXd& raw_confounders) {
  const Eigen::Index n = raw_samples.rows();
  const Eigen::Index p = raw_samples.cols();
  if (n < 1) {
    throw DimensionMismatch("dataset needs at least one observation, got " +
                            std::to_string(n));
  }
  if (p < 2) {
    throw TooFewVariables("dataset needs at least two variables, got " +
                          std::to_string(p));
  }
  if (raw_confounders.size() != n) {
    throw DimensionMismatch("samples have " + std::to_string(n) +
                            " rows but confounder vector has length " +
                            std::to_string(raw_confounders.size()));
  }
  if (!raw_samples.allFinite()) {
    throw NonFiniteInput("sample matrix contains NaN or Inf");
  }
  if (!raw_confounders.allFinite()) {
    throw NonFiniteInput("confounder vector contains NaN or Inf");
  }
  return Dataset{raw_samples, raw_confounders};
}

void ensure_square_finite(const Eigen::MatrixXd& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(what) + ": matrix is " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", expected square");
  }
  if (!a.allFinite()) {
    throw NonFiniteInput(std::string(what) + ": matrix has NaN or Inf entries");
  }
}

}  // namespace jne
