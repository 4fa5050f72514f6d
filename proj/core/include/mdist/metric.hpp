#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdist/election.hpp"
#include "mdist/rational.hpp"

namespace mdist {

// Agent-to-alternative distance table. Only these n*m distances enter any
// computation; metric structure is imposed through the 4-point condition
// d(i,a) <= d(i,b) + d(i',b) + d(i',a).
class MetricMatrix {
 public:
  MetricMatrix() = default;
  MetricMatrix(int num_agents, int num_alternatives);

  int num_agents() const { return n_; }
  int num_alternatives() const { return m_; }

  const Rational& at(int agent, int alt) const;
  void set(int agent, int alt, Rational value);  // rejects negatives

 private:
  int n_ = 0, m_ = 0;
  std::vector<Rational> values_;
};

Rational social_cost(const MetricMatrix& metric, int alt);

struct TriangleViolation {
  int agent_i, agent_j;  // i != j
  int alt_a, alt_b;      // a != b
  Rational slack;        // d(i,a) - (d(i,b) + d(j,b) + d(j,a)) > 0
};

// All violated 4-point inequalities; empty iff the table extends to a metric
// on this constraint family. Vacuous for a single agent.
std::vector<TriangleViolation> check_triangle(const MetricMatrix& metric);

enum class ConsistencyMode { kMandatoryStrict, kMandatoryClosed, kVoluntary };

struct ConsistencyViolation {
  int agent;
  int position;  // 1-based flag position j, the pair (pi(j), pi(j+1))
  std::string constraint;
};

// Checks the profile's ballots against the metric under the given semantics.
//   MandatoryStrict: Mild means d(j+1) >= d(j) > alpha*d(j+1); Intense means
//                    d(j) <= alpha*d(j+1).
//   MandatoryClosed: the strict '>' relaxed to '>='; the closure every
//                    worst-case witness lies on.
//   Voluntary:       ordering d(j) <= d(j+1) everywhere, plus the Intense
//                    alpha-gap where flagged.
std::vector<ConsistencyViolation> check_consistency(const Profile& profile,
                                                    const MetricMatrix& metric,
                                                    ConsistencyMode mode);

// CSV with n rows of m entries ("p/q" or decimal); an optional leading header
// row of alternative names is skipped.
MetricMatrix parse_metric_csv(std::string_view text);
std::string format_metric_csv(const MetricMatrix& metric,
                              const std::vector<std::string>& alternative_names = {});

}  // namespace mdist
