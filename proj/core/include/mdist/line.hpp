#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mdist/distortion.hpp"
#include "mdist/election.hpp"
#include "mdist/metric.hpp"

namespace mdist {

// Tallies of the four two-alternative ballot types.
struct LineCounts {
  long n1 = 0;  // a1 > a2, mild
  long n2 = 0;  // a2 > a1, mild
  long n3 = 0;  // a1 >> a2
  long n4 = 0;  // a2 >> a1
  long total() const { return n1 + n2 + n3 + n4; }
};

// Requires m == 2.
LineCounts classify_counts(const Profile& profile);

// Canonical block profile: n1 agents a1>a2, then n2, n3, n4 blocks.
Profile profile_from_counts(const LineCounts& counts, const Rational& alpha, ElicitationMode mode);

struct DBranches {
  ExtendedValue first;
  std::optional<ExtendedValue> second;  // absent at alpha = 1
};

// The two worst-case-embedding cost ratios behind D_alpha, unclipped.
// A zero denominator with a positive numerator reads as infinity.
DBranches eval_D_branches(const LineCounts& counts, const Rational& alpha);

// D_alpha(counts): max of the branches, clipped below at the distortion
// floor 1.
ExtendedValue eval_D(const LineCounts& counts, const Rational& alpha);

// Two-alternative rule: picks the alternative whose D value is smaller
// (a1 on ties) and reports that value, which equals its exact distortion
// on the line.
std::pair<int, ExtendedValue> tal_winner(const Profile& profile);

struct WorstCaseMetrics {
  MetricMatrix d1;
  std::optional<MetricMatrix> d2;  // absent at alpha = 1
};

// The two line embeddings maximizing the target's cost ratio. Rows follow
// the canonical block order of profile_from_counts; columns are (a1, a2).
WorstCaseMetrics worst_case_metrics(const LineCounts& counts, const Rational& alpha, int target);

struct SweepRow {
  Rational alpha;
  Rational max_min_distortion;
  LineCounts witness;
  Rational conjectured_bound;  // max((3-alpha)/(1+alpha), 2 alpha + 1)
};

// For each alpha, maximizes min(D(c), D(c swapped)) over all count vectors
// summing to `total`, reporting an attaining vector.
std::vector<SweepRow> conjecture_sweep(int total, const std::vector<Rational>& alphas);

}  // namespace mdist
