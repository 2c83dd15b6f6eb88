#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace ireach {

/// maximize c'x subject to A_eq x = b_eq, A_le x <= b_le, x >= 0.
struct LpProblem
{
  Eigen::MatrixXd A_eq;
  Eigen::VectorXd b_eq;
  Eigen::MatrixXd A_le;
  Eigen::VectorXd b_le;
};

struct LpSolution
{
  Eigen::VectorXd x;
  double objective = 0.0;
};

/// Dense two-phase simplex on a full tableau with Bland's anti-cycling rule.
///
/// Phase one runs once in the constructor; every call to maximize() restarts
/// phase two from the stored feasible basis, so many objectives over the same
/// feasible set share the feasibility work.
class Simplex
{
public:
  explicit Simplex(const LpProblem & problem, double tol = 1e-9);

  bool feasible() const { return feasible_; }

  /// Throws NumericError when the problem is infeasible, unbounded, or stalls.
  LpSolution maximize(const Eigen::VectorXd & c) const;

  Eigen::Index variables() const { return n_; }

private:
  void pivot(Eigen::MatrixXd & tab, std::vector<Eigen::Index> & basis, Eigen::Index row, Eigen::Index col) const;
  bool run(Eigen::MatrixXd & tab, std::vector<Eigen::Index> & basis, const Eigen::VectorXd & cost,
           Eigen::Index usable_cols) const;

  Eigen::Index n_ = 0;       // original variables
  Eigen::Index cols_ = 0;    // original + slack columns
  Eigen::MatrixXd tableau_;  // rows: constraints, last column: rhs
  std::vector<Eigen::Index> basis_;
  bool feasible_ = false;
  double tol_;
};

}  // namespace ireach
