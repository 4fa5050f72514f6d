#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mdist/election.hpp"
#include "mdist/rational.hpp"

namespace mdist {

// Unit-sum nonnegative positional scores.
struct ScoringVector {
  std::vector<Rational> scores;

  void validate() const;  // throws DomainError
};

// Vertex-weighted bipartite graph for a target alternative: agents on one
// side (weights p), alternatives on the other (weights q), with an edge (i,c)
// whenever agent i weakly prefers the target to c (including c = target).
struct DominationGraph {
  int target = 0;
  std::vector<Rational> agent_weights;           // p, unit-sum
  std::vector<Rational> alt_weights;             // q, unit-sum
  std::vector<std::vector<int>> edges_by_agent;  // sorted alternative lists
};

DominationGraph domination_graph(const Profile& profile, int target,
                                 const std::vector<Rational>& p, const std::vector<Rational>& q);

struct MatchingResult {
  bool feasible = false;
  // edge weights saturating both sides; present only when feasible
  std::map<std::pair<int, int>, Rational> witness;
};

// Decides fractional-perfect-matching feasibility by exact max-flow on
// source -> agents (cap p) -> edges -> alternatives (cap q) -> sink;
// feasible iff the max-flow value is exactly 1.
MatchingResult has_fractional_perfect_matching(const DominationGraph& graph);

// Positional Scoring Matching: p uniform, q from the scoring vector, winner
// is the lowest-indexed alternative whose domination graph is feasible.
int psm_winner(const Profile& profile, const ScoringVector& s);

// Per-agent rule: agent i contributes the optimal vector for her intensity
// rank, zero-padded; guarantees distortion <= 2 + max(alpha, t_lmax).
int general_winner(const Profile& profile);

// Runs general_winner on the sub-profile of agents with intensity rank <= ell.
int robust_winner(const Profile& profile, int ell);

}  // namespace mdist
