#include "ireach/simplex.hpp"

#include <cmath>
#include <limits>

#include "ireach/errors.hpp"

namespace ireach {

namespace {
constexpr int kMaxPivots = 100000;
}

Simplex::Simplex(const LpProblem & problem, double tol) : tol_(tol)
{
  n_ = std::max(problem.A_eq.cols(), problem.A_le.cols());
  const Eigen::Index m_eq = problem.A_eq.rows();
  const Eigen::Index m_le = problem.A_le.rows();
  const Eigen::Index m = m_eq + m_le;
  cols_ = n_ + m_le;
  const Eigen::Index art = cols_;  // first artificial column
  const Eigen::Index total = cols_ + m;

  Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m, total + 1);
  if (m_eq > 0) {
    tab.block(0, 0, m_eq, problem.A_eq.cols()) = problem.A_eq;
    tab.col(total).head(m_eq) = problem.b_eq;
  }
  if (m_le > 0) {
    tab.block(m_eq, 0, m_le, problem.A_le.cols()) = problem.A_le;
    tab.block(m_eq, n_, m_le, m_le).setIdentity();
    tab.col(total).segment(m_eq, m_le) = problem.b_le;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab(i, total) < 0) tab.row(i) *= -1.0;
    tab(i, art + i) = 1.0;
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = art + i;

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(total);
  cost.tail(m).setConstant(-1.0);
  if (!run(tab, basis, cost, total)) {
    throw NumericError("phase one did not terminate");
  }
  double scale = 1.0 + tab.col(total).cwiseAbs().maxCoeff();
  double infeasibility = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[static_cast<std::size_t>(i)] >= art) infeasibility += tab(i, total);
  }
  if (infeasibility > tol_ * scale * 10) {
    feasible_ = false;
    return;
  }
  // Drive zero-level artificials out of the basis; rows where that is impossible are redundant.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[static_cast<std::size_t>(i)] >= art) {
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < cols_; ++j) {
        if (std::abs(tab(i, j)) > tol_) {
          col = j;
          break;
        }
      }
      if (col < 0) continue;
      pivot(tab, basis, i, col);
    }
    keep.push_back(i);
  }
  tableau_.resize(static_cast<Eigen::Index>(keep.size()), cols_ + 1);
  basis_.clear();
  for (std::size_t r = 0; r < keep.size(); ++r) {
    auto i = keep[r];
    tableau_.row(static_cast<Eigen::Index>(r)).head(cols_) = tab.row(i).head(cols_);
    tableau_(static_cast<Eigen::Index>(r), cols_) = tab(i, total);
    basis_.push_back(basis[static_cast<std::size_t>(i)]);
  }
  feasible_ = true;
}

void Simplex::pivot(Eigen::MatrixXd & tab, std::vector<Eigen::Index> & basis, Eigen::Index row,
                    Eigen::Index col) const
{
  tab.row(row) /= tab(row, col);
  for (Eigen::Index i = 0; i < tab.rows(); ++i) {
    if (i != row && tab(i, col) != 0.0) tab.row(i) -= tab(i, col) * tab.row(row);
  }
  basis[static_cast<std::size_t>(row)] = col;
}

bool Simplex::run(Eigen::MatrixXd & tab, std::vector<Eigen::Index> & basis, const Eigen::VectorXd & cost,
                  Eigen::Index usable_cols) const
{
  const Eigen::Index rhs = tab.cols() - 1;
  for (int iter = 0; iter < kMaxPivots; ++iter) {
    // reduced cost r_j = c_j - c_B' B^{-1} A_j
    Eigen::VectorXd cb(tab.rows());
    for (Eigen::Index i = 0; i < tab.rows(); ++i) cb(i) = cost(basis[static_cast<std::size_t>(i)]);
    Eigen::RowVectorXd reduced = cost.head(usable_cols).transpose() - cb.transpose() * tab.leftCols(usable_cols);
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < usable_cols; ++j) {
      if (reduced(j) > tol_) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;
    Eigen::Index leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < tab.rows(); ++i) {
      if (tab(i, enter) > tol_) {
        double ratio = tab(i, rhs) / tab(i, enter);
        if (ratio < best - 1e-15 ||
            (ratio <= best + 1e-15 && leave >= 0 &&
             basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
    }
    if (leave < 0) {
      throw NumericError("linear program is unbounded");
    }
    pivot(tab, basis, leave, enter);
  }
  return false;
}

LpSolution Simplex::maximize(const Eigen::VectorXd & c) const
{
  if (!feasible_) {
    throw NumericError("maximize called on an infeasible linear program");
  }
  Eigen::MatrixXd tab = tableau_;
  std::vector<Eigen::Index> basis = basis_;
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols_);
  cost.head(c.size()) = c;
  if (!run(tab, basis, cost, cols_)) {
    throw NumericError("phase two did not terminate");
  }
  LpSolution sol;
  sol.x = Eigen::VectorXd::Zero(n_);
  for (Eigen::Index i = 0; i < tab.rows(); ++i) {
    auto j = basis[static_cast<std::size_t>(i)];
    if (j < n_) sol.x(j) = std::max(0.0, tab(i, cols_));
  }
  sol.objective = c.dot(sol.x);
  return sol;
}

}  // namespace ireach
