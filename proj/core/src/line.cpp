#include "mdist/line.hpp"

#include <array>

#include "mdist/errors.hpp"

namespace mdist {

LineCounts classify_counts(const Profile& profile) {
  if (profile.num_alternatives != 2) throw DomainError("line: profile must have two alternatives");
  LineCounts counts;
  for (const auto& pref : profile.preferences) {
    const bool first_is_a1 = pref.ranking[0] == 0;
    const bool intense = pref.intensities[0] == Intensity::kIntense;
    if (intense)
      (first_is_a1 ? counts.n3 : counts.n4) += 1;
    else
      (first_is_a1 ? counts.n1 : counts.n2) += 1;
  }
  return counts;
}

Profile profile_from_counts(const LineCounts& counts, const Rational& alpha, ElicitationMode mode) {
  if (counts.n1 < 0 || counts.n2 < 0 || counts.n3 < 0 || counts.n4 < 0 || counts.total() < 1)
    throw DomainError("line: counts must be nonnegative with at least one agent");
  Profile profile;
  profile.num_alternatives = 2;
  profile.alternative_names = {"a1", "a2"};
  profile.alpha = alpha;
  profile.mode = mode;
  auto add = [&](long count, int top, Intensity flag) {
    for (long i = 0; i < count; ++i)
      profile.preferences.push_back({{top, 1 - top}, {flag}});
  };
  add(counts.n1, 0, Intensity::kMild);
  add(counts.n2, 1, Intensity::kMild);
  add(counts.n3, 0, Intensity::kIntense);
  add(counts.n4, 1, Intensity::kIntense);
  profile.validate();
  return profile;
}

namespace {

struct BranchCoefficients {
  // numerator and denominator coefficients against (n1, n2, n3, n4)
  std::array<Rational, 4> num;
  std::array<Rational, 4> den;
};

// Branch 1: mild-against agents between the alternatives; branch 2: beyond
// the far alternative. Valid for alpha in (0,1); branch 1 alone at alpha = 1.
BranchCoefficients branch1_coefficients(const Rational& alpha) {
  const Rational inv = alpha.inverse();
  const Rational two(2);
  return {{inv + 1, two * inv, two, two + two * inv},
          {inv + 1, two, two * inv, Rational(0)}};
}

BranchCoefficients branch2_coefficients(const Rational& alpha) {
  const Rational inv = alpha.inverse();
  const Rational two(2);
  const Rational stretch = (inv + 1) / (inv - 1);  // requires alpha < 1
  return {{inv + 1, two * inv * stretch, two, two + two * inv},
          {inv + 1, two * stretch, two * inv, Rational(0)}};
}

ExtendedValue evaluate_branch(const BranchCoefficients& coef, const LineCounts& c) {
  const std::array<long, 4> n = {c.n1, c.n2, c.n3, c.n4};
  Rational num, den;
  for (int i = 0; i < 4; ++i) {
    num += coef.num[i] * Rational(n[i]);
    den += coef.den[i] * Rational(n[i]);
  }
  if (den.is_zero()) return ExtendedValue::infinity();  // numerator > 0 whenever n >= 1
  return ExtendedValue::finite(num / den);
}

void check_line_alpha(const Rational& alpha) {
  if (alpha <= Rational(0) || alpha > Rational(1)) throw DomainError("line: alpha outside (0,1]");
}

}  // namespace

DBranches eval_D_branches(const LineCounts& counts, const Rational& alpha) {
  check_line_alpha(alpha);
  if (counts.total() < 1) throw DomainError("line: empty electorate");
  DBranches out{evaluate_branch(branch1_coefficients(alpha), counts), std::nullopt};
  if (alpha < Rational(1))
    out.second = evaluate_branch(branch2_coefficients(alpha), counts);
  return out;
}

ExtendedValue eval_D(const LineCounts& counts, const Rational& alpha) {
  DBranches branches = eval_D_branches(counts, alpha);
  ExtendedValue best = branches.first;
  if (branches.second && *branches.second > best) best = *branches.second;
  if (best.is_finite() && best.value() < Rational(1)) return ExtendedValue::finite(Rational(1));
  return best;
}

std::pair<int, ExtendedValue> tal_winner(const Profile& profile) {
  const LineCounts counts = classify_counts(profile);
  const Rational& alpha = profile.alpha;
  const ExtendedValue d1 = eval_D(counts, alpha);
  const ExtendedValue d2 = eval_D({counts.n2, counts.n1, counts.n4, counts.n3}, alpha);
  if (d1 <= d2) return {0, d1};
  return {1, d2};
}

WorstCaseMetrics worst_case_metrics(const LineCounts& counts, const Rational& alpha, int target) {
  check_line_alpha(alpha);
  if (target != 0 && target != 1) throw DomainError("line: target must be 0 or 1");
  if (counts.total() < 1) throw DomainError("line: empty electorate");
  const Rational inv = alpha.inverse();
  const Rational two(2);

  // distances (to target, to other) per ballot block
  const std::pair<Rational, Rational> intense_for{two, two * inv};
  const std::pair<Rational, Rational> mild_for{inv + 1, inv + 1};
  const std::pair<Rational, Rational> mild_against_near{two * inv, two};
  const std::pair<Rational, Rational> intense_against{two + two * inv, Rational(0)};

  const long n = counts.total();
  auto build = [&](const std::pair<Rational, Rational>& mild_against) {
    MetricMatrix metric(static_cast<int>(n), 2);
    int row = 0;
    auto fill = [&](long block, const std::pair<Rational, Rational>& d) {
      for (long i = 0; i < block; ++i, ++row) {
        metric.set(row, target, d.first);
        metric.set(row, 1 - target, d.second);
      }
    };
    // canonical block order: n1, n2, n3, n4
    fill(counts.n1, target == 0 ? mild_for : mild_against);
    fill(counts.n2, target == 0 ? mild_against : mild_for);
    fill(counts.n3, target == 0 ? intense_for : intense_against);
    fill(counts.n4, target == 0 ? intense_against : intense_for);
    return metric;
  };

  WorstCaseMetrics out{build(mild_against_near), std::nullopt};
  if (alpha < Rational(1)) {
    const Rational stretch = (inv + 1) / (inv - 1);
    out.d2 = build({two * inv * stretch, two * stretch});
  }
  return out;
}

namespace {

// Exact fraction of 64-bit dot products; denominators are nonnegative and a
// zero denominator encodes infinity.
struct Frac {
  long long num = 0;
  long long den = 1;
  bool infinite() const { return den == 0; }
};

int compare(const Frac& a, const Frac& b) {
  if (a.infinite() && b.infinite()) return 0;
  if (a.infinite()) return 1;
  if (b.infinite()) return -1;
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

struct IntCoefficients {
  std::array<long long, 4> num;
  std::array<long long, 4> den;
};

Frac evaluate(const IntCoefficients& coef, long n1, long n2, long n3, long n4) {
  const std::array<long, 4> n = {n1, n2, n3, n4};
  Frac f{0, 0};
  for (int i = 0; i < 4; ++i) {
    f.num += coef.num[i] * n[i];
    f.den += coef.den[i] * n[i];
  }
  return f;
}

Frac clip_at_one(Frac f) {
  if (!f.infinite() && f.num < f.den) return {1, 1};
  return f;
}

}  // namespace

std::vector<SweepRow> conjecture_sweep(int total, const std::vector<Rational>& alphas) {
  if (total < 1) throw DomainError("sweep: total must be >= 1");
  if (total > 100000) throw DomainError("sweep: total too large");

  std::vector<SweepRow> rows;
  for (const Rational& alpha : alphas) {
    if (alpha <= Rational(0) || alpha >= Rational(1)) throw DomainError("sweep: alpha outside (0,1)");
    if (!(alpha.raw().get_num() < 20000 && alpha.raw().get_den() < 20000))
      throw DomainError("sweep: alpha numerator/denominator too large for the sweep kernel");
    const long long p = alpha.raw().get_num().get_si();
    const long long q = alpha.raw().get_den().get_si();
    // Branch coefficients scaled by the common denominator p*(q-p):
    //   1/a+1 -> (p+q)(q-p), 2/a -> 2q(q-p), 2 -> 2p(q-p), 2+2/a -> 2(p+q)(q-p)
    //   branch-2 mild-against: (2/a)(1+1/a)/(1/a-1) -> 2q(p+q), and
    //   2(1+1/a)/(1/a-1) -> 2p(p+q).
    const long long qp = q - p;
    const IntCoefficients b1{{(p + q) * qp, 2 * q * qp, 2 * p * qp, 2 * (p + q) * qp},
                             {(p + q) * qp, 2 * p * qp, 2 * q * qp, 0}};
    const IntCoefficients b2{{(p + q) * qp, 2 * q * (p + q), 2 * p * qp, 2 * (p + q) * qp},
                             {(p + q) * qp, 2 * p * (p + q), 2 * q * qp, 0}};

    auto D = [&](long n1, long n2, long n3, long n4) {
      const Frac f1 = evaluate(b1, n1, n2, n3, n4);
      const Frac f2 = evaluate(b2, n1, n2, n3, n4);
      return clip_at_one(compare(f1, f2) >= 0 ? f1 : f2);
    };

    Frac best{0, 1};
    LineCounts witness;
    for (long n1 = 0; n1 <= total; ++n1)
      for (long n2 = 0; n1 + n2 <= total; ++n2)
        for (long n3 = 0; n1 + n2 + n3 <= total; ++n3) {
          const long n4 = total - n1 - n2 - n3;
          const Frac da = D(n1, n2, n3, n4);
          const Frac db = D(n2, n1, n4, n3);
          // both branches cannot be infinite for a nonempty electorate
          const Frac lo = compare(da, db) <= 0 ? da : db;
          if (compare(lo, best) > 0) {
            best = lo;
            witness = {n1, n2, n3, n4};
          }
        }

    SweepRow row;
    row.alpha = alpha;
    row.max_min_distortion = Rational(best.num) / Rational(best.den);
    row.witness = witness;
    row.conjectured_bound =
        max((Rational(3) - alpha) / (Rational(1) + alpha), Rational(2) * alpha + Rational(1));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mdist
