#include "mdist/matching.hpp"

#include <algorithm>
#include <deque>

#include "mdist/errors.hpp"
#include "mdist/scoring_game.hpp"

namespace mdist {

void ScoringVector::validate() const {
  Rational sum;
  for (const auto& s : scores) {
    if (s.sign() < 0) throw DomainError("scoring vector: negative entry");
    sum += s;
  }
  if (sum != Rational(1)) throw DomainError("scoring vector: entries must sum to 1");
}

DominationGraph domination_graph(const Profile& profile, int target,
                                 const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const int n = profile.num_agents(), m = profile.num_alternatives;
  if (target < 0 || target >= m) throw DomainError("domination graph: bad target");
  if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != m)
    throw DomainError("domination graph: weight dimension mismatch");
  Rational ps, qs;
  for (const auto& v : p) {
    if (v.sign() < 0) throw DomainError("domination graph: negative agent weight");
    ps += v;
  }
  for (const auto& v : q) {
    if (v.sign() < 0) throw DomainError("domination graph: negative alternative weight");
    qs += v;
  }
  if (ps != Rational(1) || qs != Rational(1))
    throw DomainError("domination graph: weights must sum to 1");

  DominationGraph g;
  g.target = target;
  g.agent_weights = p;
  g.alt_weights = q;
  g.edges_by_agent.resize(n);
  for (int i = 0; i < n; ++i) {
    const int target_rank = profile.preferences[i].rank_of(target);
    for (int c = 0; c < m; ++c)
      if (target_rank <= profile.preferences[i].rank_of(c)) g.edges_by_agent[i].push_back(c);
  }
  return g;
}

namespace {

// Exact Edmonds-Karp; termination depends only on |V||E|, not on capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes) : head_(num_nodes, -1) {}

  int add_edge(int from, int to, Rational cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, head_[from], std::move(cap)});
    head_[from] = id;
    edges_.push_back({from, head_[to], Rational(0)});
    head_[to] = id + 1;
    return id;
  }

  Rational run(int source, int sink) {
    Rational total;
    std::vector<int> parent_edge(head_.size());
    for (;;) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::deque<int> queue{source};
      parent_edge[source] = -2;
      while (!queue.empty() && parent_edge[sink] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int e = head_[u]; e != -1; e = edges_[e].next) {
          int v = edges_[e].to;
          if (parent_edge[v] == -1 && edges_[e].cap.sign() > 0) {
            parent_edge[v] = e;
            queue.push_back(v);
          }
        }
      }
      if (parent_edge[sink] == -1) return total;
      // bottleneck along the path
      Rational aug;
      bool first = true;
      for (int v = sink; v != source;) {
        const auto& e = edges_[parent_edge[v]];
        aug = first ? e.cap : min(aug, e.cap);
        first = false;
        v = edges_[parent_edge[v] ^ 1].to;
      }
      for (int v = sink; v != source;) {
        int e = parent_edge[v];
        edges_[e].cap -= aug;
        edges_[e ^ 1].cap += aug;
        v = edges_[e ^ 1].to;
      }
      total += aug;
    }
  }

  // flow pushed through forward edge `id` = capacity accumulated on its twin
  Rational flow_on(int id) const { return edges_[id ^ 1].cap; }

 private:
  struct Edge {
    int to;
    int next;
    Rational cap;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

}  // namespace

MatchingResult has_fractional_perfect_matching(const DominationGraph& graph) {
  const int n = static_cast<int>(graph.agent_weights.size());
  const int m = static_cast<int>(graph.alt_weights.size());
  const int source = 0, sink = n + m + 1;
  MaxFlow flow(n + m + 2);
  for (int i = 0; i < n; ++i) flow.add_edge(source, 1 + i, graph.agent_weights[i]);
  for (int c = 0; c < m; ++c) flow.add_edge(1 + n + c, sink, graph.alt_weights[c]);
  std::vector<std::pair<std::pair<int, int>, int>> edge_ids;
  for (int i = 0; i < n; ++i)
    for (int c : graph.edges_by_agent[i])
      edge_ids.push_back({{i, c}, flow.add_edge(1 + i, 1 + n + c, Rational(1))});

  MatchingResult result;
  result.feasible = flow.run(source, sink) == Rational(1);
  if (result.feasible)
    for (const auto& [edge, id] : edge_ids) result.witness[edge] = flow.flow_on(id);
  return result;
}

namespace {

int first_feasible_alternative(const Profile& profile, const std::vector<Rational>& p,
                               const std::vector<Rational>& q) {
  for (int a = 0; a < profile.num_alternatives; ++a)
    if (has_fractional_perfect_matching(domination_graph(profile, a, p, q)).feasible) return a;
  throw NoFeasibleAlternativeError(
      "no alternative admits a fractional perfect matching; this contradicts the "
      "ranking-matching guarantee");
}

}  // namespace

int psm_winner(const Profile& profile, const ScoringVector& s) {
  s.validate();
  const int n = profile.num_agents(), m = profile.num_alternatives;
  if (n == 0) throw DomainError("psm: empty profile");
  if (static_cast<int>(s.scores.size()) != m) throw DomainError("psm: scoring vector length mismatch");
  std::vector<Rational> p(n, Rational(1, n));
  std::vector<Rational> q(m);
  for (int c = 0; c < m; ++c) {
    for (const auto& pref : profile.preferences) q[c] += s.scores[pref.rank_of(c) - 1];
    q[c] /= Rational(n);
  }
  return first_feasible_alternative(profile, p, q);
}

int general_winner(const Profile& profile) {
  if (profile.mode != ElicitationMode::kMandatory)
    throw DomainError("general winner: requires mandatory elicitation");
  const int n = profile.num_agents(), m = profile.num_alternatives;
  if (n == 0) throw DomainError("general winner: empty profile");
  if (m == 1) return 0;
  std::vector<Rational> p(n, Rational(1, n));
  std::vector<Rational> q(m);
  for (const auto& pref : profile.preferences) {
    const auto r = optimal_vector_padded(intensity_rank(pref), profile.alpha, m);
    for (int c = 0; c < m; ++c) q[c] += r[pref.rank_of(c) - 1];
  }
  for (auto& v : q) v /= Rational(n);
  return first_feasible_alternative(profile, p, q);
}

int robust_winner(const Profile& profile, int ell) {
  if (profile.num_alternatives == 1) return 0;
  Profile core = profile;
  core.preferences.clear();
  for (const auto& pref : profile.preferences)
    if (intensity_rank(pref) <= ell) core.preferences.push_back(pref);
  if (core.preferences.empty())
    throw EmptyCoreError("robust winner: no agent has intensity rank <= " + std::to_string(ell));
  return general_winner(core);
}

}  // namespace mdist
