#pragma once

#include <vector>

#include "mdist/rational.hpp"

namespace mdist {

enum class Relation { kLe, kEq, kGe };
enum class Sense { kMaximize, kMinimize };

struct LpConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLe;
  Rational rhs;
};

// Linear program over nonnegative variables. All data exact rationals.
struct LpProblem {
  int num_vars = 0;
  Sense sense = Sense::kMaximize;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
};

struct LpOutcome {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Rational value;                    // meaningful when optimal
  std::vector<Rational> assignment;  // a vertex of the feasible polyhedron

  bool optimal() const { return status == Status::kOptimal; }
};

// Exact two-phase dictionary simplex. Deterministic: Dantzig entering rule
// with index tie-breaks, falling back to Bland's rule after a fixed pivot
// budget so termination is guaranteed on degenerate instances.
LpOutcome solve(const LpProblem& problem);

struct ZeroSumSolution {
  Rational value;                      // min over row strats of max column payoff
  std::vector<Rational> row_strategy;  // optimal, unit-sum
  std::vector<Rational> col_strategy;  // optimal, unit-sum
};

// Value and optimal mixed strategies of the zero-sum game in which the row
// player minimizes max_j (r'M)_j over the probability simplex.
ZeroSumSolution solve_zero_sum(const std::vector<std::vector<Rational>>& payoff);

}  // namespace mdist
