#include "mdist/instances.hpp"

#include <algorithm>
#include <sstream>

#include "mdist/errors.hpp"

namespace mdist {

std::string kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kGeneralReversed: return "general-reversed";
    case InstanceKind::kGeneralIntense: return "general-intense";
    case InstanceKind::kLineTwoAltMild: return "line-two-alt-mild";
    case InstanceKind::kLineTwoAltIntense: return "line-two-alt-intense";
    case InstanceKind::kLineGeneral: return "line-general";
    case InstanceKind::kPolar: return "polar";
    case InstanceKind::kPoiiMandatory: return "poii-mandatory";
    case InstanceKind::kPoiiVoluntary: return "poii-voluntary";
  }
  throw DomainError("unknown instance kind");
}

std::optional<InstanceKind> kind_from_name(const std::string& name) {
  for (InstanceKind kind :
       {InstanceKind::kGeneralReversed, InstanceKind::kGeneralIntense, InstanceKind::kLineTwoAltMild,
        InstanceKind::kLineTwoAltIntense, InstanceKind::kLineGeneral, InstanceKind::kPolar,
        InstanceKind::kPoiiMandatory, InstanceKind::kPoiiVoluntary})
    if (kind_name(kind) == name) return kind;
  return std::nullopt;
}

namespace {

void require_alpha_open(const Rational& alpha, const char* what) {
  if (alpha <= Rational(0) || alpha >= Rational(1))
    throw DomainError(std::string(what) + ": alpha must lie in (0,1)");
}

std::vector<std::string> numbered_names(int m) {
  std::vector<std::string> names;
  for (int j = 1; j <= m; ++j) names.push_back("a" + std::to_string(j));
  return names;
}

LowerBoundInstance make_general_reversed(int m, const Rational& alpha) {
  if (m < 2) throw DomainError("general-reversed: m must be >= 2");
  require_alpha_open(alpha, "general-reversed");
  const int h = m / 2;
  const Rational inv = alpha.inverse();

  LowerBoundInstance inst;
  inst.kind = InstanceKind::kGeneralReversed;
  inst.m = m;
  inst.alpha = alpha;

  Profile& profile = inst.profile;
  profile.num_alternatives = m;
  profile.alternative_names = numbered_names(m);
  profile.alpha = alpha;
  profile.mode = ElicitationMode::kMandatory;
  IntensivePreference forward, reversed;
  for (int j = 0; j < m; ++j) forward.ranking.push_back(j);
  for (int j = m - 1; j >= 0; --j) reversed.ranking.push_back(j);
  forward.intensities.assign(m - 1, Intensity::kMild);
  reversed.intensities.assign(m - 1, Intensity::kMild);
  profile.preferences = {forward, reversed};

  MetricMatrix metric(2, m);
  const Rational base = Rational(2) / (inv.pow(h) - Rational(1));
  for (int j = 0; j < m; ++j) {
    metric.set(0, j, Rational(1));
    const int rank2 = m - j;  // 1-based rank of a_{j+1} in the reversed ballot
    metric.set(1, j, inv.pow(std::min(rank2 - 1, h)) * base);
  }
  inst.witness_metric = std::move(metric);

  const Rational ah = alpha.pow(h);
  inst.expected_ratio =
      Rational(1) + Rational(2) * (Rational(1) - ah) / (Rational(1) + ah);
  inst.witness_ratio = inst.expected_ratio;
  inst.ratio_numerator_alt = 0;      // a1, in the first half of agent 1's ballot
  inst.ratio_denominator_alt = m - 1;
  return inst;
}

LowerBoundInstance make_general_intense(int m, int k, const Rational& alpha) {
  if (m < 2) throw DomainError("general-intense: m must be >= 2");
  if (k < 1 || k > m / 2) throw DomainError("general-intense: k must lie in [1, floor(m/2)]");
  require_alpha_open(alpha, "general-intense");
  const Rational inv = alpha.inverse();

  LowerBoundInstance inst;
  inst.kind = InstanceKind::kGeneralIntense;
  inst.m = m;
  inst.k = k;
  inst.alpha = alpha;

  Profile& profile = inst.profile;
  profile.num_alternatives = m;
  profile.alternative_names = numbered_names(m);
  profile.alpha = alpha;
  profile.mode = ElicitationMode::kMandatory;
  IntensivePreference forward, reversed;
  for (int j = 0; j < m; ++j) forward.ranking.push_back(j);
  for (int j = m - 1; j >= 0; --j) reversed.ranking.push_back(j);
  forward.intensities.assign(m - 1, Intensity::kMild);
  reversed.intensities.assign(m - 1, Intensity::kMild);
  forward.intensities[k - 1] = Intensity::kIntense;
  reversed.intensities[k - 1] = Intensity::kIntense;
  profile.preferences = {forward, reversed};

  MetricMatrix metric(2, m);
  for (int j = 0; j < m; ++j) {
    const int rank1 = j + 1, rank2 = m - j;
    metric.set(0, j, rank1 <= k ? Rational(0) : Rational(1) + inv);
    metric.set(1, j, rank2 <= k ? Rational(1) : inv);
  }
  inst.witness_metric = std::move(metric);

  inst.expected_ratio = Rational(1) + Rational(2) * alpha;
  inst.witness_ratio = inst.expected_ratio;
  inst.ratio_numerator_alt = m - 1;  // ranked after the intense flag by agent 1
  inst.ratio_denominator_alt = 0;
  return inst;
}

Profile two_alternative_profile(const Rational& alpha, Intensity flag) {
  Profile profile;
  profile.num_alternatives = 2;
  profile.alternative_names = {"a1", "a2"};
  profile.alpha = alpha;
  profile.mode = ElicitationMode::kMandatory;
  profile.preferences = {{{0, 1}, {flag}}, {{1, 0}, {flag}}};
  return profile;
}

LowerBoundInstance make_line_two_alt_mild(int m, const Rational& alpha) {
  if (m != 2) throw DomainError("line-two-alt-mild: m must be 2");
  require_alpha_open(alpha, "line-two-alt-mild");
  const Rational inv = alpha.inverse();

  LowerBoundInstance inst;
  inst.kind = InstanceKind::kLineTwoAltMild;
  inst.m = 2;
  inst.alpha = alpha;
  inst.profile = two_alternative_profile(alpha, Intensity::kMild);

  // agent 1 midway between the alternatives, agent 2 beyond a2
  const Rational far = (Rational(2) * alpha + 2) / (Rational(1) - alpha);
  MetricMatrix metric(2, 2);
  metric.set(0, 0, inv + 1);
  metric.set(0, 1, inv + 1);
  metric.set(1, 0, Rational(2) * inv + 2 + far);
  metric.set(1, 1, far);
  inst.witness_metric = std::move(metric);

  inst.expected_ratio = (Rational(3) - alpha) / (Rational(1) + alpha);
  inst.witness_ratio = inst.expected_ratio;
  inst.ratio_numerator_alt = 0;
  inst.ratio_denominator_alt = 1;
  return inst;
}

LowerBoundInstance make_line_two_alt_intense(int m, const Rational& alpha) {
  if (m != 2) throw DomainError("line-two-alt-intense: m must be 2");
  if (alpha <= Rational(0) || alpha > Rational(1))
    throw DomainError("line-two-alt-intense: alpha must lie in (0,1]");
  const Rational inv = alpha.inverse();

  LowerBoundInstance inst;
  inst.kind = InstanceKind::kLineTwoAltIntense;
  inst.m = 2;
  inst.alpha = alpha;
  inst.profile = two_alternative_profile(alpha, Intensity::kIntense);

  MetricMatrix metric(2, 2);
  metric.set(0, 0, Rational(1));
  metric.set(0, 1, inv);
  metric.set(1, 0, Rational(1) + inv);
  metric.set(1, 1, Rational(0));
  inst.witness_metric = std::move(metric);

  inst.expected_ratio = Rational(2) * alpha + 1;
  inst.witness_ratio = inst.expected_ratio;
  inst.ratio_numerator_alt = 0;
  inst.ratio_denominator_alt = 1;
  return inst;
}

LowerBoundInstance make_line_general(int m, const Rational& alpha) {
  if (m < 2) throw DomainError("line-general: m must be >= 2");
  require_alpha_open(alpha, "line-general");
  const int h = m / 2;
  const bool odd = m % 2 != 0;
  const Rational inv = alpha.inverse();

  LowerBoundInstance inst;
  inst.kind = InstanceKind::kLineGeneral;
  inst.m = m;
  inst.alpha = alpha;

  Profile& profile = inst.profile;
  profile.num_alternatives = m;
  profile.alpha = alpha;
  profile.mode = ElicitationMode::kMandatory;
  for (int j = 1; j <= h; ++j) profile.alternative_names.push_back("a" + std::to_string(j));
  for (int j = 1; j <= h; ++j) profile.alternative_names.push_back("b" + std::to_string(j));
  if (odd) profile.alternative_names.push_back("c");

  IntensivePreference first, second;
  for (int j = 0; j < h; ++j) first.ranking.push_back(j);          // a block
  for (int j = 0; j < h; ++j) first.ranking.push_back(h + j);      // b block
  for (int j = 0; j < h; ++j) second.ranking.push_back(h + j);
  for (int j = 0; j < h; ++j) second.ranking.push_back(j);
  if (odd) {
    first.ranking.push_back(m - 1);
    second.ranking.push_back(m - 1);
  }
  first.intensities.assign(m - 1, Intensity::kMild);
  second.intensities.assign(m - 1, Intensity::kMild);
  if (odd) {
    first.intensities[m - 2] = Intensity::kIntense;
    second.intensities[m - 2] = Intensity::kIntense;
  }
  profile.preferences = {first, second};

  // line coordinates: a's at 0, agents to their right, b's geometric
  const Rational pos1 = inv.pow(h) + 1;
  const Rational pos2 = Rational(2) * inv.pow(h);
  MetricMatrix metric(2, m);
  Rational max_coord = pos2;
  for (int j = 0; j < h; ++j) {
    metric.set(0, j, pos1);
    metric.set(1, j, pos2);
  }
  for (int j = 0; j < h; ++j) {
    const Rational to_second = Rational(2) * inv.pow(j);  // d(i2, b_{j+1})
    metric.set(0, h + j, pos2 - pos1 + to_second);
    metric.set(1, h + j, to_second);
    max_coord = pos2 + to_second;
  }
  if (odd) {
    // park c far right; scaled by 1/alpha so the closing intense flag holds
    const Rational far = max_coord * (Rational(1) + Rational(10) * inv);
    metric.set(0, m - 1, far - pos1);
    metric.set(1, m - 1, far - pos2);
  }
  inst.witness_metric = std::move(metric);

  const Rational invh = inv.pow(h);
  inst.expected_ratio = (Rational(1) + Rational(3) * invh) / (Rational(3) + invh);
  inst.witness_ratio = inst.expected_ratio;
  inst.ratio_numerator_alt = 0;
  inst.ratio_denominator_alt = h;  // b1
  return inst;
}

LowerBoundInstance make_polar(int m, const Rational& alpha) {
  if (m < 2) throw DomainError("polar: m must be >= 2");
  require_alpha_open(alpha, "polar");
  const int h = m / 2;
  const int even_part = m - m % 2;
  const Rational inv = alpha.inverse();
  const Rational denom = inv.pow(even_part) + 1;

  LowerBoundInstance inst;
  inst.kind = InstanceKind::kPolar;
  inst.m = m;
  inst.alpha = alpha;
  inst.profile = polar_profile(m, alpha, ElicitationMode::kMandatory);

  MetricMatrix metric(2, m);
  const auto& pi1 = inst.profile.preferences[0].ranking;
  const auto& pi2 = inst.profile.preferences[1].ranking;
  for (int p = 1; p <= even_part; ++p) {
    const Rational head = inv.pow(h + p - 1);
    const Rational tail = inv.pow(p - 1);
    if (p <= h + 1) {
      metric.set(0, pi1[p - 1], (head - tail) / denom);
      metric.set(1, pi2[p - 1], (head + tail) / denom);
    } else {
      metric.set(0, pi1[p - 1], (inv.pow(even_part) - inv.pow(h)) / denom);
      metric.set(1, pi2[p - 1], (inv.pow(even_part) + inv.pow(h)) / denom);
    }
  }
  if (even_part != m) {
    // last alternative mirrors each agent's second-to-last distance
    metric.set(0, m - 1, metric.at(0, pi1[m - 2]));
    metric.set(1, m - 1, metric.at(1, pi2[m - 2]));
  }
  inst.witness_metric = std::move(metric);

  const Rational ah = alpha.pow(h), ae = alpha.pow(even_part);
  inst.expected_ratio = (Rational(1) + Rational(2) * ah - ae) / (ae + Rational(1));
  inst.witness_ratio = inst.expected_ratio;
  inst.ratio_numerator_alt = 0;
  inst.ratio_denominator_alt = h;  // a_{h+1}
  if (m % 2 == 0)
    inst.certificate = polar_certificate(CertificateSetting::kMandatoryPolar, m, alpha);
  return inst;
}

LowerBoundInstance make_poii(InstanceKind kind, int m, const Rational& alpha, std::uint64_t budget) {
  if (m < 2) throw DomainError("poii instance: m must be >= 2");
  require_alpha_open(alpha, "poii instance");
  const bool voluntary = kind == InstanceKind::kPoiiVoluntary;
  const ElicitationMode mode = voluntary ? ElicitationMode::kVoluntary : ElicitationMode::kMandatory;
  const int h = m / 2;
  const int even_part = m - m % 2;

  LowerBoundInstance inst;
  inst.kind = kind;
  inst.m = m;
  inst.alpha = alpha;
  inst.profile = polar_profile(m, alpha, mode);

  // The oblivious optimum depends only on the rankings. Among its minimizers
  // this follows the construction's w.l.o.g. step and selects one in the
  // second half of agent 1's ballot, which puts the intense prefix on agent 1.
  const auto table = oblivious_poii_table(inst.profile, budget);
  ExtendedValue best = table[0];
  for (const auto& v : table)
    if (v < best) best = v;
  int opt_ob = -1;
  for (int a = h; a < m; ++a)  // rank_1(a) = a+1 > h
    if (table[a] == best) {
      opt_ob = a;
      break;
    }
  if (opt_ob == -1)
    throw Error("poii instance: no second-half oblivious optimum; symmetry argument failed");
  inst.oblivious_opt = opt_ob;

  MetricMatrix metric(2, m);
  for (int j = 0; j < m; ++j) {
    metric.set(0, j, j + 1 <= h ? Rational(0) : Rational(2));
    metric.set(1, j, Rational(1));
  }
  inst.witness_metric = std::move(metric);
  inst.witness_ratio = Rational(3);
  inst.ratio_numerator_alt = opt_ob;
  inst.ratio_denominator_alt = 0;

  const Rational ah = alpha.pow(h), ae = alpha.pow(even_part);
  if (voluntary) {
    inst.expected_ratio = Rational(3) / (Rational(2) * ah + 1);
    if (m % 2 == 0)
      inst.certificate = polar_certificate(CertificateSetting::kVoluntaryPolar, m, alpha);
  } else {
    inst.expected_ratio = Rational(3) * (ae + 1) / (Rational(1) + Rational(2) * ah - ae);
  }
  return inst;
}

}  // namespace

LowerBoundInstance generate(InstanceKind kind, int m, std::optional<int> k, const Rational& alpha,
                            std::uint64_t budget) {
  switch (kind) {
    case InstanceKind::kGeneralReversed: return make_general_reversed(m, alpha);
    case InstanceKind::kGeneralIntense:
      if (!k) throw DomainError("general-intense: k is required");
      return make_general_intense(m, *k, alpha);
    case InstanceKind::kLineTwoAltMild: return make_line_two_alt_mild(m, alpha);
    case InstanceKind::kLineTwoAltIntense: return make_line_two_alt_intense(m, alpha);
    case InstanceKind::kLineGeneral: return make_line_general(m, alpha);
    case InstanceKind::kPolar: return make_polar(m, alpha);
    case InstanceKind::kPoiiMandatory:
    case InstanceKind::kPoiiVoluntary: return make_poii(kind, m, alpha, budget);
  }
  throw DomainError("unknown instance kind");
}

VerificationReport verify(const LowerBoundInstance& instance, std::uint64_t budget) {
  VerificationReport report;
  auto record = [&](const std::string& name, bool passed, std::string detail = {}) {
    report.checks.push_back({name, passed, std::move(detail)});
  };

  if (instance.witness_metric) {
    const MetricMatrix& witness = *instance.witness_metric;
    const auto triangle = check_triangle(witness);
    record("witness-triangle", triangle.empty(),
           triangle.empty() ? "" : std::to_string(triangle.size()) + " violated 4-point inequalities");

    const ConsistencyMode mode = instance.profile.mode == ElicitationMode::kMandatory
                                     ? ConsistencyMode::kMandatoryClosed
                                     : ConsistencyMode::kVoluntary;
    const auto consistency = check_consistency(instance.profile, witness, mode);
    record("witness-consistency", consistency.empty(),
           consistency.empty() ? "" : std::to_string(consistency.size()) + " violated ballot constraints");

    const Rational denominator = social_cost(witness, instance.ratio_denominator_alt);
    if (denominator.is_zero()) {
      record("witness-ratio", false, "denominator social cost is zero");
    } else {
      const Rational ratio = social_cost(witness, instance.ratio_numerator_alt) / denominator;
      record("witness-ratio", ratio == instance.witness_ratio,
             "sc ratio " + ratio.str() + ", expected " + instance.witness_ratio.str());
    }
  }

  switch (instance.kind) {
    case InstanceKind::kPolar: {
      const ExtendedValue lp = distortion(instance.profile, 0);
      record("lp-distortion-exact",
             lp.is_finite() && lp.value() == instance.expected_ratio,
             "lp " + lp.str() + ", expected " + instance.expected_ratio.str());
      if (instance.certificate) {
        const Rational dual = verify_dual_certificate(*instance.certificate);
        record("certificate-objective", dual == instance.expected_ratio,
               "dual " + dual.str() + ", expected " + instance.expected_ratio.str());
      }
      break;
    }
    case InstanceKind::kPoiiMandatory:
    case InstanceKind::kPoiiVoluntary: {
      const int opt_ob = instance.oblivious_opt.value();
      const ExtendedValue dist_ob = distortion(instance.profile, opt_ob);
      record("lp-distortion-oblivious", dist_ob.is_finite() && dist_ob.value() == Rational(3),
             "lp " + dist_ob.str() + ", expected 3");
      const auto aware = intensity_aware_opt(instance.profile);
      if (!dist_ob.is_finite() || !aware.second.is_finite() || aware.second.value().is_zero()) {
        record("poii-bound", false, "non-finite distortion in the ratio");
      } else {
        const Rational ratio = dist_ob.value() / aware.second.value();
        record("poii-bound", ratio >= instance.expected_ratio,
               "poii " + ratio.str() + ", bound " + instance.expected_ratio.str());
      }
      if (instance.certificate) {
        const Rational dual = verify_dual_certificate(*instance.certificate);
        const ExtendedValue dist_a1 = distortion(instance.profile, 0);
        record("certificate-upper-bound",
               dist_a1.is_finite() && dist_a1.value() <= dual,
               "lp " + dist_a1.str() + " vs dual " + dual.str());
      }
      break;
    }
    default: {
      const ExtendedValue lp = distortion(instance.profile, instance.ratio_numerator_alt);
      record("lp-distortion-at-least", lp >= ExtendedValue::finite(instance.expected_ratio),
             "lp " + lp.str() + ", bound " + instance.expected_ratio.str());
      break;
    }
  }
  (void)budget;
  return report;
}

}  // namespace mdist
