#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdist/distortion.hpp"
#include "mdist/election.hpp"
#include "mdist/metric.hpp"

namespace mdist {

enum class InstanceKind {
  kGeneralReversed,    // two reversed mild rankings; bound 1 + 2(1-a^h)/(1+a^h)
  kGeneralIntense,     // single intense flag at position k; bound 1 + 2a
  kLineTwoAltMild,     // two opposed mild agents on a line; bound (3-a)/(1+a)
  kLineTwoAltIntense,  // two opposed intense agents on a line; bound 2a + 1
  kLineGeneral,        // line instance; bound (1+3a^-h)/(3+a^-h)
  kPolar,              // exact-distortion instance with dual certificate
  kPoiiMandatory,      // PoII bound 3(a^e+1)/(1+2a^h-a^e)
  kPoiiVoluntary,      // PoII bound 3/(2a^h+1), voluntary elicitation
};

std::string kind_name(InstanceKind kind);
std::optional<InstanceKind> kind_from_name(const std::string& name);

struct LowerBoundInstance {
  InstanceKind kind;
  Profile profile;
  std::optional<MetricMatrix> witness_metric;
  Rational expected_ratio;  // the construction's closed-form bound
  Rational witness_ratio;   // sc ratio realized by the witness metric
  std::optional<DualCertificate> certificate;
  int m = 0;
  std::optional<int> k;
  Rational alpha;
  int ratio_numerator_alt = 0;    // sc(numerator)/sc(denominator) = witness_ratio
  int ratio_denominator_alt = 0;
  std::optional<int> oblivious_opt;  // PoII kinds: opt chosen from rankings alone
};

// Builds the named construction with its witness metric, closed-form bound,
// and (where the analysis provides one) dual certificate. `k` is the intense
// position for kGeneralIntense and ignored otherwise. PoII kinds run the
// oblivious-optimum enumeration, capped by `budget`.
LowerBoundInstance generate(InstanceKind kind, int m, std::optional<int> k, const Rational& alpha,
                            std::uint64_t budget = kDefaultEnumerationBudget);

struct VerificationReport {
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Machine-checks the bundle: witness triangle/consistency, the witness cost
// ratio, and per-kind LP facts (exactness for polar, the PoII bound, lower
// bounds elsewhere).
VerificationReport verify(const LowerBoundInstance& instance,
                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace mdist
