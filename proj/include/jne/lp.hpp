// Linear-program representation and solver contract.
//
// Two layers:
//   * LpProblem / solve_lp / oracle_solve — the standard form used by the
//     estimator reductions (nonnegative variables, <= rows, = rows), plus an
//     exhaustive vertex-enumeration oracle for small instances.
//   * RangedLp / solve_ranged — the bounded-variable revised simplex engine
//     behind solve_lp. Rows carry two-sided bounds so a |a.x - e| <= lambda
//     pair costs one row instead of two.
#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <limits>
#include <string>
#include <vector>

#include "jne/errors.hpp"

namespace jne::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status s);

// min cost.x  s.t.  ineq x <= ineq_rhs,  eq x = eq_rhs,  x >= 0
struct LpProblem {
  Eigen::VectorXd cost;
  Eigen::SparseMatrix<double> ineq;
  Eigen::VectorXd ineq_rhs;
  Eigen::SparseMatrix<double> eq;
  Eigen::VectorXd eq_rhs;

  Eigen::Index vars() const { return cost.size(); }
  // Throws DimensionMismatch / NonFiniteInput on inconsistent input.
  void check() const;
};

struct LpSolution {
  Status status = Status::Infeasible;
  Eigen::VectorXd x;  // set when Optimal
  double objective = std::numeric_limits<double>::quiet_NaN();
  // Row duals from the simplex (empty for oracle_solve); usable as a weak
  // duality certificate via dual_bound() on the ranged translation.
  Eigen::VectorXd ineq_duals;
  Eigen::VectorXd eq_duals;
  long iterations = 0;
};

// Revised simplex. When Optimal, the returned x satisfies
//   ineq x <= rhs + tol,  |eq x - f| <= tol,  x >= -tol
// (verified by substitution before returning) and the objective is within
// tol*(1+|c.x|) of the true optimum. Throws IterationLimit on stall.
LpSolution solve_lp(const LpProblem& problem, double tol = 1e-8);

// Exact optimum by enumeration of candidate basic solutions; restricted to
// vars <= 12 and ineq+eq rows <= 16 (throws TooLargeForOracle beyond).
// Infeasibility is confirmed by an elastic feasibility phase; unboundedness
// by enumerating the normalized recession cone.
LpSolution oracle_solve(const LpProblem& problem);

// CPLEX-LP-style text form for cross-checking with external tools.
std::string dump_lp(const LpProblem& problem);

// ---------------------------------------------------------------------------
// Ranged engine
// ---------------------------------------------------------------------------

// min cost.x  s.t.  row_lower <= coeffs x <= row_upper,
//                   var_lower <= x <= var_upper
struct RangedLp {
  Eigen::VectorXd cost;
  Eigen::SparseMatrix<double> coeffs;  // rows x vars, column-major
  Eigen::VectorXd row_lower, row_upper;
  Eigen::VectorXd var_lower, var_upper;

  Eigen::Index rows() const { return coeffs.rows(); }
  Eigen::Index vars() const { return coeffs.cols(); }
  void check() const;
};

enum class VarState : unsigned char { Basic, AtLower, AtUpper, FreeZero };

// Warm-start token: basis order plus the nonbasic bound statuses. Valid for
// re-solves of a problem with identical dimensions (bounds may change).
struct Basis {
  std::vector<int> order;        // size rows(); variable index per basis slot
  std::vector<VarState> states;  // size vars()+rows()
  bool empty() const { return order.empty(); }
};

struct SimplexOptions {
  double feas_tol = 1e-9;   // bound feasibility
  double opt_tol = 1e-9;    // reduced-cost threshold
  long max_iterations = 0;  // 0: auto from problem size
  int refactor_every = 80;  // eta-file length bound
};

struct SimplexResult {
  Status status = Status::Infeasible;
  Eigen::VectorXd x;  // structural values (Optimal)
  double objective = std::numeric_limits<double>::quiet_NaN();
  Eigen::VectorXd row_duals;      // y (Optimal)
  Eigen::VectorXd reduced_costs;  // structural reduced costs (Optimal)
  long iterations = 0;
  double infeasibility = 0.0;  // min total bound violation when Infeasible
  Basis basis;                 // final basis, reusable as warm start
};

SimplexResult solve_ranged(const RangedLp& problem,
                           const SimplexOptions& options = {},
                           const Basis* warm = nullptr);

// Standard-form -> ranged translation used by solve_lp (slack bounds
// [-inf, b] for <= rows, [f, f] for = rows, vars in [0, inf)).
RangedLp to_ranged(const LpProblem& problem);

// Lagrangian lower bound on the ranged problem for an arbitrary row-dual
// vector y: sum over rows of the bound value y prefers plus sum over
// variables of the reduced-cost term at the preferred variable bound.
// Returns -inf if y leaves a nonzero reduced cost on an unbounded variable
// direction. Any y gives a valid lower bound (weak duality).
double dual_bound(const RangedLp& problem, const Eigen::VectorXd& row_duals);

}  // namespace jne::lp
