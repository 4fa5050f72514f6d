#include <doctest.h>

#include "mdist/errors.hpp"
#include "mdist/lp.hpp"
#include "mdist/matching.hpp"
#include "mdist/scoring_game.hpp"
#include "support/generators.hpp"

using namespace mdist;
using mdist::testsupport::Rng;

namespace {

Profile opposed_pair(const Rational& alpha) {
  Profile p;
  p.num_alternatives = 2;
  p.alternative_names = {"a", "b"};
  p.alpha = alpha;
  p.preferences = {{{0, 1}, {Intensity::kMild}}, {{1, 0}, {Intensity::kMild}}};
  return p;
}

Profile unanimous(int n, int m, const Rational& alpha) {
  Profile p;
  p.num_alternatives = m;
  for (int j = 1; j <= m; ++j) p.alternative_names.push_back("a" + std::to_string(j));
  p.alpha = alpha;
  IntensivePreference pref;
  for (int j = 0; j < m; ++j) pref.ranking.push_back(j);
  pref.intensities.assign(m - 1, Intensity::kMild);
  p.preferences.assign(n, pref);
  return p;
}

// independent feasibility oracle: the matching constraints as an LP
bool lp_feasible(const DominationGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(g.edges_by_agent.size()); ++i)
    for (int c : g.edges_by_agent[i]) edges.push_back({i, c});
  LpProblem lp;
  lp.num_vars = static_cast<int>(edges.size());
  lp.sense = Sense::kMaximize;
  lp.objective.assign(lp.num_vars, Rational(0));
  auto row = [&](int) {
    LpConstraint con;
    con.coefficients.assign(lp.num_vars, Rational(0));
    con.relation = Relation::kEq;
    return con;
  };
  for (int i = 0; i < static_cast<int>(g.agent_weights.size()); ++i) {
    LpConstraint con = row(i);
    for (int e = 0; e < lp.num_vars; ++e)
      if (edges[e].first == i) con.coefficients[e] = Rational(1);
    con.rhs = g.agent_weights[i];
    lp.constraints.push_back(std::move(con));
  }
  for (int c = 0; c < static_cast<int>(g.alt_weights.size()); ++c) {
    LpConstraint con = row(c);
    for (int e = 0; e < lp.num_vars; ++e)
      if (edges[e].second == c) con.coefficients[e] = Rational(1);
    con.rhs = g.alt_weights[c];
    lp.constraints.push_back(std::move(con));
  }
  return solve(lp).optimal();
}

}  // namespace

TEST_CASE("fractional matching on tiny graphs") {
  Profile single = unanimous(1, 1, Rational(1, 2));
  const auto g = domination_graph(single, 0, {Rational(1)}, {Rational(1)});
  const auto res = has_fractional_perfect_matching(g);
  REQUIRE(res.feasible);
  CHECK(res.witness.at({0, 0}) == Rational(1));
}

TEST_CASE("fractional matching on the opposed pair") {
  Profile p = opposed_pair(Rational(1, 2));
  const std::vector<Rational> half = {Rational(1, 2), Rational(1, 2)};
  const auto g = domination_graph(p, 0, half, half);
  // edges: agent 1 dominates both with a, agent 2 only a itself
  CHECK(g.edges_by_agent[0] == std::vector<int>{0, 1});
  CHECK(g.edges_by_agent[1] == std::vector<int>{0});
  const auto res = has_fractional_perfect_matching(g);
  REQUIRE(res.feasible);
  CHECK(res.witness.at({0, 1}) == Rational(1, 2));
  CHECK(res.witness.at({1, 0}) == Rational(1, 2));
  CHECK(res.witness.at({0, 0}) == Rational(0));

  const auto infeasible =
      has_fractional_perfect_matching(domination_graph(p, 0, half, {Rational(0), Rational(1)}));
  CHECK(!infeasible.feasible);  // agent 2's half of supply cannot route
}

TEST_CASE("matching feasibility agrees with the lp oracle") {
  Rng rng(61);
  for (int iter = 0; iter < 120; ++iter) {
    const int n = 1 + rng.below(5), m = 1 + rng.below(5);
    const Profile p =
        mdist::testsupport::random_profile(rng, n, m, Rational(1, 2), ElicitationMode::kMandatory);
    const auto ps = mdist::testsupport::random_unit_sum(rng, n);
    const auto qs = mdist::testsupport::random_unit_sum(rng, m);
    const auto g = domination_graph(p, rng.below(m), ps, qs);
    const auto res = has_fractional_perfect_matching(g);
    CHECK(res.feasible == lp_feasible(g));
    if (res.feasible) {
      // witness saturates both sides exactly and lives on the edges
      std::vector<Rational> agent_sum(n), alt_sum(m);
      for (const auto& [edge, w] : res.witness) {
        CHECK(w.sign() >= 0);
        const auto& adj = g.edges_by_agent[edge.first];
        CHECK(std::find(adj.begin(), adj.end(), edge.second) != adj.end());
        agent_sum[edge.first] += w;
        alt_sum[edge.second] += w;
      }
      for (int i = 0; i < n; ++i) CHECK(agent_sum[i] == ps[i]);
      for (int c = 0; c < m; ++c) CHECK(alt_sum[c] == qs[c]);
    }
  }
}

TEST_CASE("ranking-matching existence on random scores") {
  Rng rng(71);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + rng.below(5), m = 1 + rng.below(5);
    const Profile p =
        mdist::testsupport::random_profile(rng, n, m, Rational(1, 2), ElicitationMode::kMandatory);
    std::vector<Rational> uniform(n, Rational(1, n));
    const auto qs = mdist::testsupport::random_unit_sum(rng, m);
    bool any = false;
    for (int a = 0; a < m && !any; ++a)
      any = has_fractional_perfect_matching(domination_graph(p, a, uniform, qs)).feasible;
    CHECK(any);
  }
}

TEST_CASE("psm winner") {
  ScoringVector plurality{{Rational(1), Rational(0), Rational(0)}};
  Profile u = unanimous(3, 3, Rational(1, 2));
  CHECK(psm_winner(u, plurality) == 0);

  Profile p = opposed_pair(Rational(1, 2));
  CHECK(psm_winner(p, ScoringVector{{Rational(1), Rational(0)}}) == 0);  // tie broken to a

  ScoringVector bad{{Rational(1), Rational(1)}};
  CHECK_THROWS_AS(psm_winner(p, bad), DomainError);
}

TEST_CASE("psm with the plurality vector reproduces plurality weights") {
  Rng rng(83);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + rng.below(4), m = 2 + rng.below(4);
    const Profile p =
        mdist::testsupport::random_profile(rng, n, m, Rational(1, 2), ElicitationMode::kMandatory);
    std::vector<Rational> s(m, Rational(0));
    s[0] = Rational(1);
    // q(a) built from s equals Plu(a)/n
    for (int a = 0; a < m; ++a) {
      Rational q;
      for (const auto& pref : p.preferences) q += s[pref.rank_of(a) - 1];
      q /= Rational(n);
      CHECK(q == Rational(plurality_score(p, a)) / Rational(n));
    }
  }
}

TEST_CASE("general winner") {
  Profile single = unanimous(1, 4, Rational(1, 2));
  single.preferences[0].intensities[1] = Intensity::kIntense;
  CHECK(general_winner(single) == 0);  // a single agent's top always wins

  // all agents moderate-up-to-k matches psm with the padded optimal vector
  Rng rng(97);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 1 + rng.below(4), m = 2 + rng.below(4);
    const int k = 1 + rng.below(m - 1);
    const Profile p = mdist::testsupport::moderate_profile(rng, n, m, k, Rational(1, 2));
    const ScoringVector s{optimal_vector_padded(k, p.alpha, m)};
    CHECK(general_winner(p) == psm_winner(p, s));
  }
}

TEST_CASE("robust winner") {
  Rng rng(101);
  const Profile p = mdist::testsupport::moderate_profile(rng, 4, 4, 1, Rational(1, 2));
  CHECK(robust_winner(p, 3) == general_winner(p));  // nobody excluded
  CHECK_THROWS_AS(robust_winner(p, 0), EmptyCoreError);

  // one high-rank agent is excluded from the core
  Profile mixed = p;
  mixed.preferences[3].intensities.assign(3, Intensity::kMild);  // rank m-1 = 3
  Profile core = mixed;
  core.preferences.pop_back();
  CHECK(robust_winner(mixed, 1) == general_winner(core));
}
