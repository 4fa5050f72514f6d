#include "mdist/scoring_game.hpp"

#include <string>

#include "mdist/errors.hpp"

namespace mdist {

GameSolution recurrences(int k, const Rational& alpha) {
  if (k < 1) throw DomainError("recurrences: k must be >= 1");
  if (alpha < Rational(0) || alpha > Rational(1)) throw DomainError("recurrences: alpha outside [0,1]");

  GameSolution sol;
  sol.k = k;
  sol.alpha = alpha;
  const Rational one(1), two(2);
  sol.w.push_back((alpha + one) / (Rational(3) * alpha + one));
  sol.t.push_back((one - alpha) / (Rational(3) * alpha + one));
  for (int j = 2; j <= k; ++j) {
    const Rational& wp = sol.w.back();
    const Rational& tp = sol.t.back();
    Rational w = one - two * alpha / ((one - alpha) * tp + two * wp + two * alpha);
    Rational t = w + (one - w) * tp;
    sol.w.push_back(std::move(w));
    sol.t.push_back(std::move(t));
  }
  return sol;
}

GameSolution optimal_vector(int k, const Rational& alpha) {
  GameSolution sol = recurrences(k, alpha);
  // r_i = w_{k+1-i} * prod_{j=k+2-i..k} (1-w_j); the last entry is the full
  // telescoping product.
  sol.r.assign(k + 1, Rational(0));
  Rational tail(1);
  for (int i = 1; i <= k; ++i) {
    sol.r[i - 1] = sol.w[k - i] * tail;
    tail *= Rational(1) - sol.w[k - i];
  }
  sol.r[k] = tail;
  return sol;
}

std::vector<Rational> optimal_vector_padded(int k, const Rational& alpha, int m) {
  if (m < 1) throw DomainError("optimal_vector_padded: m must be >= 1");
  if (k < 0 || k > m - 1) throw DomainError("optimal_vector_padded: k outside [0, m-1]");
  std::vector<Rational> s(m, Rational(0));
  if (k == 0) {
    s[0] = Rational(1);
    return s;
  }
  GameSolution sol = optimal_vector(k, alpha);
  for (int i = 0; i <= k; ++i) s[i] = sol.r[i];
  return s;
}

PayoffMatrix payoff_matrix(int k, const Rational& alpha) {
  if (k < 1) throw DomainError("payoff_matrix: k must be >= 1");
  if (alpha <= Rational(0) || alpha > Rational(1))
    throw DomainError("payoff_matrix: alpha outside (0,1]");
  const Rational inv_alpha = alpha.inverse();
  PayoffMatrix M;
  M.entries.assign(k + 1, std::vector<Rational>(k + 1));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      if (i == j)
        M.entries[i][j] = Rational(-1);
      else if (j > i)
        M.entries[i][j] = Rational(1);
      else
        M.entries[i][j] = inv_alpha.pow(i - j);
    }
  return M;
}

Rational verify_equilibrium(int k, const Rational& alpha) {
  const PayoffMatrix M = payoff_matrix(k, alpha);
  const GameSolution sol = optimal_vector(k, alpha);
  const Rational& tk = sol.t.back();

  for (int j = 0; j <= k; ++j) {
    Rational col;
    for (int i = 0; i <= k; ++i) col += sol.r[i] * M.entries[i][j];
    if (col != tk)
      throw IdentityViolatedError("equilibrium: (r^k)'M column " + std::to_string(j + 1) +
                                  " is " + col.str() + ", expected " + tk.str());
  }
  for (int i = 0; i <= k; ++i) {
    Rational row;
    for (int j = 0; j <= k; ++j) row += M.entries[i][j] * sol.r[k - j];
    if (row != tk)
      throw IdentityViolatedError("equilibrium: M(r^k)^R row " + std::to_string(i + 1) +
                                  " is " + row.str() + ", expected " + tk.str());
  }
  return tk;
}

}  // namespace mdist
