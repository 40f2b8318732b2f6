// Exception hierarchy shared by all modules. Each condition gets its own type
// so callers (and the CLI exit-code mapping) can discriminate without parsing
// messages.
#pragma once

#include <stdexcept>
#include <string>

namespace jne {

// Coarse category used by the CLI to pick an exit code.
enum class ErrorKind { Config, Data, Infeasible, Numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// data-model
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error(ErrorKind::Data, m) {}
};
struct NonFiniteInput : Error {
  explicit NonFiniteInput(const std::string& m) : Error(ErrorKind::Data, m) {}
};
struct TooFewVariables : Error {
  explicit TooFewVariables(const std::string& m) : Error(ErrorKind::Data, m) {}
};

// kernel-smoother
struct EmptyWindow : Error {
  explicit EmptyWindow(const std::string& m, long sample = -1)
      : Error(ErrorKind::Data, m), sample_index(sample) {}
  long sample_index;  // offending sample when known, else -1
};
struct EmptyGrid : Error {
  explicit EmptyGrid(const std::string& m) : Error(ErrorKind::Config, m) {}
};
struct NoFeasibleBandwidth : Error {
  explicit NoFeasibleBandwidth(const std::string& m) : Error(ErrorKind::Data, m) {}
};

// lp-backend
struct IterationLimit : Error {
  explicit IterationLimit(const std::string& m) : Error(ErrorKind::Numeric, m) {}
};
struct TooLargeForOracle : Error {
  explicit TooLargeForOracle(const std::string& m) : Error(ErrorKind::Config, m) {}
};

// jne-solver / baselines
struct InfeasibleColumn : Error {
  InfeasibleColumn(const std::string& m, long col, double violation,
                   long sample = -1)
      : Error(ErrorKind::Infeasible, m),
        column(col),
        min_violation(violation),
        sample_index(sample) {}
  long column;           // 0-based column of the offending LP
  double min_violation;  // smallest total constraint violation found (phase 1)
  long sample_index;     // Ke-CLIME: which local covariance failed, else -1
};
struct AllInfeasible : Error {
  explicit AllInfeasible(const std::string& m) : Error(ErrorKind::Infeasible, m) {}
};
struct DegenerateRegression : Error {
  explicit DegenerateRegression(const std::string& m) : Error(ErrorKind::Data, m) {}
};

// synthetic-bench
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& m) : Error(ErrorKind::Numeric, m) {}
};

// evaluation
struct TooFewSamples : Error {
  explicit TooFewSamples(const std::string& m) : Error(ErrorKind::Data, m) {}
};
struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& m) : Error(ErrorKind::Data, m) {}
};

// cli / io
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorKind::Data, m) {}
};
struct MissingColumn : Error {
  explicit MissingColumn(const std::string& m) : Error(ErrorKind::Data, m) {}
};
struct ConstantConfounder : Error {
  explicit ConstantConfounder(const std::string& m) : Error(ErrorKind::Data, m) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(ErrorKind::Config, m) {}
};

}  // namespace jne
