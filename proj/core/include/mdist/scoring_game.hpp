#pragma once

#include <vector>

#include "mdist/rational.hpp"

namespace mdist {

// Solution data for the k-th scoring game: the recurrence values w_1..w_k and
// t_1..t_k, and (when filled) the optimal mixing vector r of length k+1.
struct GameSolution {
  int k = 0;
  Rational alpha;
  std::vector<Rational> w;  // w[j-1] = w_j
  std::vector<Rational> t;  // t[j-1] = t_j
  std::vector<Rational> r;  // empty until optimal_vector
};

// w_1 = (alpha+1)/(3 alpha+1), t_1 = (1-alpha)/(3 alpha+1);
// w_j = 1 - 2 alpha / ((1-alpha) t_{j-1} + 2 w_{j-1} + 2 alpha),
// t_j = w_j + (1-w_j) t_{j-1}.
GameSolution recurrences(int k, const Rational& alpha);

// Adds r = (w_k, w_{k-1}(1-w_k), ..., w_1 prod_{j>=2}(1-w_j), prod(1-w_j)).
GameSolution optimal_vector(int k, const Rational& alpha);

// r^k zero-padded to length m; k = 0 gives the degenerate (1, 0, ..., 0).
std::vector<Rational> optimal_vector_padded(int k, const Rational& alpha, int m);

struct PayoffMatrix {
  std::vector<std::vector<Rational>> entries;  // (k+1) x (k+1)
};

// M[i][j] = -1 on the diagonal, 1 above it, (1/alpha)^(i-j) below it.
PayoffMatrix payoff_matrix(int k, const Rational& alpha);

// Checks (r^k)' M = t_k 1' and M (r^k)^R = t_k 1 exactly; returns t_k.
Rational verify_equilibrium(int k, const Rational& alpha);

}  // namespace mdist
