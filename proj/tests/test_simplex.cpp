#include <random>

#include "doctest.h"
#include "ireach/errors.hpp"
#include "ireach/simplex.hpp"

using namespace ireach;

namespace {

LpProblem problem(Eigen::MatrixXd A_eq, Eigen::VectorXd b_eq, Eigen::MatrixXd A_le, Eigen::VectorXd b_le)
{
  return {std::move(A_eq), std::move(b_eq), std::move(A_le), std::move(b_le)};
}

}  // namespace

TEST_CASE("textbook problem")
{
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
  Eigen::MatrixXd A(3, 2);
  A << 1, 0, 0, 2, 3, 2;
  Eigen::VectorXd b(3);
  b << 4, 12, 18;
  Simplex lp(problem(Eigen::MatrixXd(0, 2), Eigen::VectorXd(0), A, b));
  REQUIRE(lp.feasible());
  Eigen::VectorXd c(2);
  c << 3, 5;
  auto sol = lp.maximize(c);
  CHECK(sol.objective == doctest::Approx(36));
  CHECK(sol.x(0) == doctest::Approx(2));
  CHECK(sol.x(1) == doctest::Approx(6));
}

TEST_CASE("simplex over the probability simplex")
{
  Eigen::MatrixXd A_eq = Eigen::MatrixXd::Ones(1, 4);
  Eigen::VectorXd b_eq = Eigen::VectorXd::Ones(1);
  Simplex lp(problem(A_eq, b_eq, Eigen::MatrixXd(0, 4), Eigen::VectorXd(0)));
  Eigen::VectorXd c(4);
  c << 0.5, -1, 2, 1.5;
  auto sol = lp.maximize(c);
  CHECK(sol.objective == doctest::Approx(2));
  CHECK(sol.x(2) == doctest::Approx(1));
  CHECK(sol.x.sum() == doctest::Approx(1));
}

TEST_CASE("infeasible and unbounded problems")
{
  Eigen::MatrixXd A_eq(2, 2);
  A_eq << 1, 1, 1, 1;
  Eigen::VectorXd b_eq(2);
  b_eq << 1, 2;
  Simplex bad(problem(A_eq, b_eq, Eigen::MatrixXd(0, 2), Eigen::VectorXd(0)));
  CHECK_FALSE(bad.feasible());
  CHECK_THROWS_AS(bad.maximize(Eigen::VectorXd::Ones(2)), NumericError);

  Eigen::MatrixXd A_le(1, 2);
  A_le << 1, -1;
  Eigen::VectorXd b_le(1);
  b_le << 1;
  Simplex open(problem(Eigen::MatrixXd(0, 2), Eigen::VectorXd(0), A_le, b_le));
  REQUIRE(open.feasible());
  CHECK_THROWS_AS(open.maximize(Eigen::VectorXd::Ones(2)), NumericError);
}

TEST_CASE("redundant and degenerate rows")
{
  // duplicated equality rows and a degenerate vertex at the origin
  Eigen::MatrixXd A_eq(3, 3);
  A_eq << 1, 1, 1, 2, 2, 2, 1, -1, 0;
  Eigen::VectorXd b_eq(3);
  b_eq << 1, 2, 0;
  Eigen::MatrixXd A_le(2, 3);
  A_le << 1, 0, 0, 0, 1, 0;
  Eigen::VectorXd b_le(2);
  b_le << 0.5, 0.5;
  Simplex lp(problem(A_eq, b_eq, A_le, b_le));
  REQUIRE(lp.feasible());
  Eigen::VectorXd c(3);
  c << 1, 1, 0;
  auto sol = lp.maximize(c);
  CHECK(sol.objective == doctest::Approx(1));
  c << 0, 0, 1;
  CHECK(lp.maximize(c).objective == doctest::Approx(1));
}

TEST_CASE("box problems against the closed form")
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 6;
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd hi(n);
    Eigen::VectorXd c(n);
    double expected = 0.0;
    for (int i = 0; i < n; ++i) {
      hi(i) = u(rng) + 2.5;
      c(i) = u(rng);
      expected += std::max(c(i), 0.0) * hi(i);
    }
    Simplex lp(problem(Eigen::MatrixXd(0, n), Eigen::VectorXd(0), A, hi));
    CHECK(lp.maximize(c).objective == doctest::Approx(expected));
    CHECK(lp.maximize(-c).objective == doctest::Approx(std::max(0.0, (-c).cwiseMax(0.0).dot(hi))));
  }
}
