#include "mdist/lp.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "mdist/errors.hpp"

namespace mdist {

namespace {

// Dictionary simplex on: maximize c'x subject to Ax <= b, x >= 0.
// Tableau layout follows the classic (m+2) x (n+2) dictionary with slack
// variables implicit; column n is the phase-1 artificial, column n+1 the rhs.
class Simplex {
 public:
  enum class Result { kOptimal, kInfeasible, kUnbounded };

  Simplex(const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b,
          const std::vector<mpq_class>& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        nonbasic_(n_ + 1),
        basic_(m_),
        D_(m_ + 2, std::vector<mpq_class>(n_ + 2)) {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) D_[i][j] = A[i][j];
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      D_[i][n_] = -1;
      D_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      D_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    D_[m_ + 1][n_] = 1;
    bland_after_ = 200 + 10 * (m_ + n_);
  }

  Result run(std::vector<mpq_class>& x) {
    if (m_ > 0) {
      int r = 0;
      for (int i = 1; i < m_; ++i)
        if (D_[i][n_ + 1] < D_[r][n_ + 1]) r = i;
      if (sgn(D_[r][n_ + 1]) < 0) {
        pivot(r, n_);
        if (!phase(2) || sgn(D_[m_ + 1][n_ + 1]) < 0) return Result::kInfeasible;
        for (int i = 0; i < m_; ++i) {
          if (basic_[i] != -1) continue;
          // Drive the artificial out of the basis; an all-zero row is
          // redundant and can keep it (harmlessly) basic at zero.
          int s = -1;
          for (int j = 0; j <= n_; ++j) {
            if (sgn(D_[i][j]) == 0) continue;
            if (s == -1 || D_[i][j] < D_[i][s] || (D_[i][j] == D_[i][s] && nonbasic_[j] < nonbasic_[s]))
              s = j;
          }
          if (s != -1) pivot(i, s);
        }
      }
    }
    if (!phase(1)) return Result::kUnbounded;
    x.assign(n_, mpq_class(0));
    for (int i = 0; i < m_; ++i)
      if (basic_[i] >= 0 && basic_[i] < n_) x[basic_[i]] = D_[i][n_ + 1];
    return Result::kOptimal;
  }

 private:
  void pivot(int r, int s) {
    std::vector<mpq_class>& row_r = D_[r];
    const mpq_class inv = mpq_class(1) / row_r[s];
    mpq_class factor, tmp;
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || sgn(D_[i][s]) == 0) continue;
      std::vector<mpq_class>& row = D_[i];
      factor = row[s] * inv;
      for (int j = 0; j < n_ + 2; ++j) {
        if (sgn(row_r[j]) == 0) continue;
        tmp = row_r[j] * factor;
        row[j] -= tmp;
      }
      row[s] = row_r[s] * factor;  // restores the pre-elimination entry
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s && sgn(row_r[j]) != 0) row_r[j] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r && sgn(D_[i][s]) != 0) D_[i][s] *= -inv;
    row_r[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // phase 2 optimizes the artificial objective (row m+1), phase 1 the real
  // one (row m) with the artificial barred from re-entering.
  bool phase(int ph) {
    const int obj = m_ + ph - 1;
    for (;;) {
      if (++pivots_ > bland_after_) bland_ = true;
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -ph) continue;
        if (bland_) {
          if (sgn(D_[obj][j]) < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
        } else {
          if (s == -1 || D_[obj][j] < D_[obj][s] ||
              (D_[obj][j] == D_[obj][s] && nonbasic_[j] < nonbasic_[s]))
            s = j;
        }
      }
      if (s == -1 || sgn(D_[obj][s]) >= 0) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (sgn(D_[i][s]) <= 0) continue;
        if (r == -1) {
          r = i;
          continue;
        }
        // compare D[i][rhs]/D[i][s] against the incumbent by cross products
        const int cmp = cmp_ratio(i, r, s);
        if (cmp < 0 || (cmp == 0 && basic_[i] < basic_[r])) r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int cmp_ratio(int i, int r, int s) const {
    mpq_class lhs = D_[i][n_ + 1] * D_[r][s];
    mpq_class rhs = D_[r][n_ + 1] * D_[i][s];
    return cmp(lhs, rhs);
  }

  int m_, n_;
  std::vector<int> nonbasic_, basic_;
  std::vector<std::vector<mpq_class>> D_;
  bool bland_ = false;
  long pivots_ = 0;
  long bland_after_ = 0;
};

}  // namespace

LpOutcome solve(const LpProblem& problem) {
  if (problem.num_vars < 0) throw DomainError("lp: negative variable count");
  if (static_cast<int>(problem.objective.size()) != problem.num_vars)
    throw DomainError("lp: objective length mismatch");
  for (const auto& con : problem.constraints)
    if (static_cast<int>(con.coefficients.size()) != problem.num_vars)
      throw DomainError("lp: constraint length mismatch");

  const bool maximize = problem.sense == Sense::kMaximize;
  std::vector<std::vector<mpq_class>> A;
  std::vector<mpq_class> b;
  for (const auto& con : problem.constraints) {
    std::vector<mpq_class> row(problem.num_vars);
    for (int j = 0; j < problem.num_vars; ++j) row[j] = con.coefficients[j].raw();
    if (con.relation == Relation::kLe || con.relation == Relation::kEq) {
      A.push_back(row);
      b.push_back(con.rhs.raw());
    }
    if (con.relation == Relation::kGe || con.relation == Relation::kEq) {
      for (auto& v : row) v = -v;
      A.push_back(std::move(row));
      b.push_back(mpq_class(-con.rhs.raw()));
    }
  }
  std::vector<mpq_class> c(problem.num_vars);
  for (int j = 0; j < problem.num_vars; ++j)
    c[j] = maximize ? problem.objective[j].raw() : mpq_class(-problem.objective[j].raw());

  Simplex simplex(A, b, c);
  std::vector<mpq_class> x;
  switch (simplex.run(x)) {
    case Simplex::Result::kInfeasible:
      return {LpOutcome::Status::kInfeasible, Rational(0), {}};
    case Simplex::Result::kUnbounded:
      return {LpOutcome::Status::kUnbounded, Rational(0), {}};
    case Simplex::Result::kOptimal:
      break;
  }
  LpOutcome out;
  out.status = LpOutcome::Status::kOptimal;
  out.assignment.reserve(problem.num_vars);
  mpq_class value(0);
  for (int j = 0; j < problem.num_vars; ++j) {
    value += problem.objective[j].raw() * x[j];
    out.assignment.push_back(Rational(std::move(x[j])));
  }
  out.value = Rational(std::move(value));
  return out;
}

ZeroSumSolution solve_zero_sum(const std::vector<std::vector<Rational>>& payoff) {
  const int k = static_cast<int>(payoff.size());
  if (k == 0) throw DomainError("zero-sum: empty payoff matrix");
  for (const auto& row : payoff)
    if (static_cast<int>(row.size()) != k) throw DomainError("zero-sum: matrix not square");

  // Row player: minimize v s.t. sum_i r_i M[i][j] <= v, r in simplex.
  // v is split as vp - vm to keep all variables nonnegative.
  LpProblem row_lp;
  row_lp.num_vars = k + 2;
  row_lp.sense = Sense::kMaximize;
  row_lp.objective.assign(k + 2, Rational(0));
  row_lp.objective[k] = Rational(-1);    // vp
  row_lp.objective[k + 1] = Rational(1); // vm
  for (int j = 0; j < k; ++j) {
    LpConstraint con;
    con.coefficients.assign(k + 2, Rational(0));
    for (int i = 0; i < k; ++i) con.coefficients[i] = payoff[i][j];
    con.coefficients[k] = Rational(-1);
    con.coefficients[k + 1] = Rational(1);
    con.relation = Relation::kLe;
    con.rhs = Rational(0);
    row_lp.constraints.push_back(std::move(con));
  }
  LpConstraint simplex_row;
  simplex_row.coefficients.assign(k + 2, Rational(0));
  for (int i = 0; i < k; ++i) simplex_row.coefficients[i] = Rational(1);
  simplex_row.relation = Relation::kEq;
  simplex_row.rhs = Rational(1);
  row_lp.constraints.push_back(simplex_row);

  LpOutcome row_out = solve(row_lp);
  if (!row_out.optimal()) throw Error("zero-sum: row LP not optimal");

  // Column player: maximize u s.t. sum_j M[i][j] c_j >= u, c in simplex.
  LpProblem col_lp;
  col_lp.num_vars = k + 2;
  col_lp.sense = Sense::kMaximize;
  col_lp.objective.assign(k + 2, Rational(0));
  col_lp.objective[k] = Rational(1);      // up
  col_lp.objective[k + 1] = Rational(-1); // um
  for (int i = 0; i < k; ++i) {
    LpConstraint con;
    con.coefficients.assign(k + 2, Rational(0));
    for (int j = 0; j < k; ++j) con.coefficients[j] = -payoff[i][j];
    con.coefficients[k] = Rational(1);
    con.coefficients[k + 1] = Rational(-1);
    con.relation = Relation::kLe;
    con.rhs = Rational(0);
    col_lp.constraints.push_back(std::move(con));
  }
  col_lp.constraints.push_back(simplex_row);

  LpOutcome col_out = solve(col_lp);
  if (!col_out.optimal()) throw Error("zero-sum: column LP not optimal");

  ZeroSumSolution out;
  out.value = -row_out.value;
  if (out.value != col_out.value) throw Error("zero-sum: duality gap (solver bug)");
  out.row_strategy.assign(row_out.assignment.begin(), row_out.assignment.begin() + k);
  out.col_strategy.assign(col_out.assignment.begin(), col_out.assignment.begin() + k);
  return out;
}

}  // namespace mdist
