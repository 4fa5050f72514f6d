#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mdist/election.hpp"
#include "mdist/rational.hpp"

namespace mdist {

// A distortion value: finite rational or +infinity (greater than all finite).
class ExtendedValue {
 public:
  static ExtendedValue finite(Rational v) { return ExtendedValue(true, std::move(v)); }
  static ExtendedValue infinity() { return ExtendedValue(false, Rational(0)); }

  bool is_finite() const { return finite_; }
  const Rational& value() const;  // errors when infinite

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) { return !(a == b); }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return a < b || a == b; }
  friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return b < a; }
  friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return b <= a; }

  std::string str() const { return finite_ ? value_.str() : "inf"; }

 private:
  ExtendedValue(bool finite, Rational v) : finite_(finite), value_(std::move(v)) {}
  bool finite_;
  Rational value_;
};

// Worst-case ratio sc(alt)/min_b sc(b) over all metrics consistent with the
// profile (closed-form constraint set), computed as a max of per-forced-
// optimum LPs. Infinite when some LP is unbounded; DegenerateProfileError
// when every LP is infeasible.
ExtendedValue distortion(const Profile& profile, int alt);

// argmin of distortion over alternatives (lowest index on ties).
std::pair<int, ExtendedValue> intensity_aware_opt(const Profile& profile);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 16;

// PoII(a, rankings, alpha) for every alternative: the max over all intensity
// assignments of dist(a)/dist(intensity-aware optimum). Exhaustive over
// 2^(n(m-1)) assignments; throws BudgetExceededError beyond `budget`.
// Assignments no metric can realize contribute nothing; an alternative that
// some realizable assignment pushes arbitrarily far scores infinity.
std::vector<ExtendedValue> oblivious_poii_table(const Profile& profile,
                                                std::uint64_t budget = kDefaultEnumerationBudget);

struct ObliviousOpt {
  int alt;
  Rational worst_poii;
};

// Alternative minimizing the table above (lowest index on ties).
ObliviousOpt intensity_oblivious_opt(const Profile& profile,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

// dist(oblivious opt) / dist(aware opt) on the profile's own ballots.
Rational poii(const Profile& profile, std::uint64_t budget = kDefaultEnumerationBudget);

enum class CertificateSetting { kMandatoryPolar, kVoluntaryPolar };

// A named feasible point of the dual of the polar worst-case LP. Variable
// keys: "psi[i][i'][j][j']" (triangle rows), "phi[i][p]" (preference rows, or
// intensity rows in the voluntary setting), "beta[i][p]" (mandatory intensity
// rows), "t[j]" (normalization/optimality rows). Agents, positions and
// alternatives are 1-based.
struct DualCertificate {
  CertificateSetting setting = CertificateSetting::kMandatoryPolar;
  int m = 0;  // even
  Rational alpha;
  std::map<std::string, Rational> variables;
};

// The closed-form certificate for the polar instance.
DualCertificate polar_certificate(CertificateSetting setting, int m, const Rational& alpha);

// Checks every dual constraint and sign restriction exactly; returns the dual
// objective sum_j t[j], an upper bound on the distortion of a1 on the polar
// instance. Throws InfeasibleCertificateError with the first violation.
Rational verify_dual_certificate(const DualCertificate& certificate);

// Canonical polar profile: agent 1 ranks a1..am with an intense prefix of
// length floor(m/2), agent 2 ranks am/2+1..am,a1..am/2 all mild. Defined for
// even and odd m (odd per the last-alternative reduction).
Profile polar_profile(int m, const Rational& alpha, ElicitationMode mode);

}  // namespace mdist
