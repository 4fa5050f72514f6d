#include "mdist/distortion.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "mdist/errors.hpp"
#include "mdist/lp.hpp"

namespace mdist {

const Rational& ExtendedValue::value() const {
  if (!finite_) throw DomainError("extended value: infinite");
  return value_;
}

namespace {

// Adversary LP for a fixed forced optimum b: maximize sc(alt) subject to
// sc(b) = 1, sc(c) >= 1 for c != b, the 4-point triangle family, per-agent
// ordering, and the mode's intensity constraints (closed forms).
LpProblem adversary_lp(const Profile& profile, int alt, int forced) {
  const int n = profile.num_agents(), m = profile.num_alternatives;
  auto var = [m](int i, int c) { return i * m + c; };

  LpProblem lp;
  lp.num_vars = n * m;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(lp.num_vars, Rational(0));
  for (int i = 0; i < n; ++i) lp.objective[var(i, alt)] = Rational(1);

  auto zero_row = [&] {
    LpConstraint con;
    con.coefficients.assign(lp.num_vars, Rational(0));
    con.relation = Relation::kLe;
    con.rhs = Rational(0);
    return con;
  };

  {
    LpConstraint norm = zero_row();
    for (int i = 0; i < n; ++i) norm.coefficients[var(i, forced)] = Rational(1);
    norm.relation = Relation::kEq;
    norm.rhs = Rational(1);
    lp.constraints.push_back(std::move(norm));
  }
  for (int c = 0; c < m; ++c) {
    if (c == forced) continue;
    LpConstraint opt = zero_row();
    for (int i = 0; i < n; ++i) opt.coefficients[var(i, c)] = Rational(1);
    opt.relation = Relation::kGe;
    opt.rhs = Rational(1);
    lp.constraints.push_back(std::move(opt));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (a == b) continue;
          LpConstraint tri = zero_row();
          tri.coefficients[var(i, a)] += Rational(1);
          tri.coefficients[var(i, b)] -= Rational(1);
          tri.coefficients[var(j, b)] -= Rational(1);
          tri.coefficients[var(j, a)] -= Rational(1);
          lp.constraints.push_back(std::move(tri));
        }
    }
  const Rational& alpha = profile.alpha;
  for (int i = 0; i < n; ++i) {
    const auto& pref = profile.preferences[i];
    for (int p = 0; p + 1 < m; ++p) {
      const int closer = var(i, pref.ranking[p]);
      const int farther = var(i, pref.ranking[p + 1]);
      {
        LpConstraint order = zero_row();
        order.coefficients[closer] += Rational(1);
        order.coefficients[farther] -= Rational(1);
        lp.constraints.push_back(std::move(order));
      }
      const bool intense = pref.intensities[p] == Intensity::kIntense;
      if (intense) {
        LpConstraint gap = zero_row();
        gap.coefficients[closer] += Rational(1);
        gap.coefficients[farther] -= alpha;
        lp.constraints.push_back(std::move(gap));
      } else if (profile.mode == ElicitationMode::kMandatory) {
        LpConstraint gap = zero_row();
        gap.coefficients[farther] += alpha;
        gap.coefficients[closer] -= Rational(1);
        lp.constraints.push_back(std::move(gap));
      }
    }
  }
  return lp;
}

}  // namespace

ExtendedValue distortion(const Profile& profile, int alt) {
  profile.validate();
  const int m = profile.num_alternatives;
  if (alt < 0 || alt >= m) throw DomainError("distortion: bad alternative index");
  if (profile.num_agents() == 0) throw DomainError("distortion: empty profile");

  std::optional<Rational> best;
  for (int forced = 0; forced < m; ++forced) {
    LpOutcome out = solve(adversary_lp(profile, alt, forced));
    if (out.status == LpOutcome::Status::kUnbounded) return ExtendedValue::infinity();
    if (out.status == LpOutcome::Status::kInfeasible) continue;
    if (!best || out.value > *best) best = out.value;
  }
  if (!best)
    throw DegenerateProfileError("distortion: no alternative can be optimal for any consistent metric");
  return ExtendedValue::finite(*best);
}

std::pair<int, ExtendedValue> intensity_aware_opt(const Profile& profile) {
  const int m = profile.num_alternatives;
  if (m < 1) throw DomainError("aware opt: empty alternative set");
  std::optional<std::pair<int, ExtendedValue>> best;
  for (int a = 0; a < m; ++a) {
    ExtendedValue d = distortion(profile, a);
    if (!best || d < best->second) best = {a, d};
  }
  return *best;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

std::vector<ExtendedValue> oblivious_poii_table(const Profile& profile, std::uint64_t budget) {
  profile.validate();
  const int n = profile.num_agents(), m = profile.num_alternatives;
  if (n == 0) throw DomainError("poii table: empty profile");
  if (m == 1) return {ExtendedValue::finite(Rational(1))};

  const std::uint64_t per_agent = std::uint64_t{1} << (m - 1);
  const std::uint64_t total = checked_power(per_agent, n, budget);
  if (total > budget) {
    std::ostringstream msg;
    msg << "poii enumeration needs 2^" << n * (m - 1) << " assignments, budget is " << budget;
    throw BudgetExceededError(msg.str());
  }

  std::vector<ExtendedValue> table(m, ExtendedValue::finite(Rational(0)));
  Profile variant = profile;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t agent_code = rest % per_agent;
      rest /= per_agent;
      for (int f = 0; f < m - 1; ++f)
        variant.preferences[i].intensities[f] =
            (agent_code >> f) & 1 ? Intensity::kIntense : Intensity::kMild;
    }
    std::vector<ExtendedValue> dists;
    dists.reserve(m);
    try {
      for (int c = 0; c < m; ++c) dists.push_back(distortion(variant, c));
    } catch (const DegenerateProfileError&) {
      continue;  // no metric realizes this assignment
    }
    const ExtendedValue& lo = *std::min_element(dists.begin(), dists.end());
    if (!lo.is_finite())
      throw InfinitePoiiError("poii: every alternative has infinite distortion for an assignment");
    for (int a = 0; a < m; ++a) {
      if (!dists[a].is_finite()) {
        table[a] = ExtendedValue::infinity();
      } else {
        ExtendedValue ratio = ExtendedValue::finite(dists[a].value() / lo.value());
        if (ratio > table[a]) table[a] = std::move(ratio);
      }
    }
  }
  return table;
}

ObliviousOpt intensity_oblivious_opt(const Profile& profile, std::uint64_t budget) {
  if (profile.mode != ElicitationMode::kMandatory)
    throw DomainError("oblivious opt: requires mandatory elicitation");
  const auto table = oblivious_poii_table(profile, budget);
  int best = 0;
  for (int a = 1; a < static_cast<int>(table.size()); ++a)
    if (table[a] < table[best]) best = a;
  if (!table[best].is_finite())
    throw InfinitePoiiError("oblivious opt: every alternative has infinite worst-case poii");
  return {best, table[best].value()};
}

Rational poii(const Profile& profile, std::uint64_t budget) {
  if (profile.mode != ElicitationMode::kMandatory)
    throw DomainError("poii: requires mandatory elicitation");
  const auto table = oblivious_poii_table(profile, budget);
  ExtendedValue best = table[0];
  for (const auto& v : table)
    if (v < best) best = v;
  // The oblivious optimum is chosen from rankings alone, so a tie is resolved
  // by the adversary: take the worst distortion among tied minimizers.
  std::optional<ExtendedValue> dist_ob;
  for (int a = 0; a < static_cast<int>(table.size()); ++a) {
    if (table[a] != best) continue;
    ExtendedValue d = distortion(profile, a);
    if (!dist_ob || d > *dist_ob) dist_ob = d;
  }
  const auto aware = intensity_aware_opt(profile);
  if (!dist_ob->is_finite())
    throw InfinitePoiiError("poii: oblivious optimum has infinite distortion");
  if (!aware.second.is_finite())
    throw InfinitePoiiError("poii: aware optimum has infinite distortion");
  return dist_ob->value() / aware.second.value();
}

Profile polar_profile(int m, const Rational& alpha, ElicitationMode mode) {
  if (m < 2) throw DomainError("polar profile: m must be >= 2");
  if (alpha < Rational(0) || alpha > Rational(1)) throw DomainError("polar profile: alpha outside [0,1]");
  const int h = m / 2;
  const int even_part = m % 2 == 0 ? m : m - 1;

  Profile profile;
  profile.num_alternatives = m;
  profile.alpha = alpha;
  profile.mode = mode;
  for (int j = 1; j <= m; ++j) profile.alternative_names.push_back("a" + std::to_string(j));

  IntensivePreference first;
  for (int j = 0; j < m; ++j) first.ranking.push_back(j);
  for (int p = 0; p < m - 1; ++p)
    first.intensities.push_back(p < h ? Intensity::kIntense : Intensity::kMild);

  IntensivePreference second;
  for (int j = 0; j < even_part; ++j) second.ranking.push_back((j + h) % even_part);
  if (even_part != m) second.ranking.push_back(m - 1);
  second.intensities.assign(m - 1, Intensity::kMild);

  profile.preferences = {std::move(first), std::move(second)};
  profile.validate();
  return profile;
}

namespace {

struct DualRow {
  std::vector<std::pair<int, Rational>> coefficients;  // (variable, coefficient)
};

std::string key_psi(int i, int i2, int j, int j2) {
  std::ostringstream s;
  s << "psi[" << i << "][" << i2 << "][" << j << "][" << j2 << "]";
  return s.str();
}

std::string key_pos(const char* family, int i, int p) {
  std::ostringstream s;
  s << family << "[" << i << "][" << p << "]";
  return s.str();
}

std::string key_t(int j) {
  return "t[" + std::to_string(j) + "]";
}

}  // namespace

DualCertificate polar_certificate(CertificateSetting setting, int m, const Rational& alpha) {
  if (m < 2 || m % 2 != 0) throw DomainError("polar certificate: m must be even and >= 2");
  if (alpha <= Rational(0) || alpha >= Rational(1))
    throw DomainError("polar certificate: alpha outside (0,1)");
  const int h = m / 2;
  const Rational inv_alpha = alpha.inverse();

  DualCertificate cert;
  cert.setting = setting;
  cert.m = m;
  cert.alpha = alpha;
  if (setting == CertificateSetting::kMandatoryPolar) {
    const Rational y = Rational(2) / (inv_alpha.pow(m) + Rational(1));
    for (int p = 1; p <= h; ++p) {
      cert.variables[key_pos("beta", 1, p)] = y * inv_alpha.pow(m - p);
      cert.variables[key_pos("beta", 2, p)] = y * inv_alpha.pow(h - p);
    }
    cert.variables[key_psi(2, 1, 1, h + 1)] = Rational(1) - y;
    cert.variables[key_t(h + 1)] = y * (inv_alpha.pow(h) - Rational(1)) + Rational(1);
  } else {
    const Rational x = Rational(2) * alpha.pow(h);
    for (int p = 1; p <= h; ++p) cert.variables[key_pos("phi", 1, p)] = x * inv_alpha.pow(h - p);
    cert.variables[key_psi(2, 1, 1, h + 1)] = Rational(1);
    cert.variables[key_t(h + 1)] = Rational(1) + x;
  }
  return cert;
}

Rational verify_dual_certificate(const DualCertificate& certificate) {
  const int m = certificate.m;
  const Rational& alpha = certificate.alpha;
  if (m < 2 || m % 2 != 0)
    throw DomainError("certificate: m must be even and >= 2");
  if (alpha <= Rational(0) || alpha >= Rational(1))
    throw DomainError("certificate: alpha outside (0,1)");
  const int h = m / 2;
  const bool mandatory = certificate.setting == CertificateSetting::kMandatoryPolar;
  const Profile profile = polar_profile(
      m, alpha, mandatory ? ElicitationMode::kMandatory : ElicitationMode::kVoluntary);
  const Rational inv_alpha = alpha.inverse();
  auto var = [m](int i, int c) { return i * m + c; };  // 0-based agent/alternative

  // Primal rows in the normalization the dual certificate is written
  // against. Intense rows carry 1/alpha on the closer distance.
  std::map<std::string, DualRow> rows;
  for (int i = 0; i < 2; ++i)
    for (int i2 = 0; i2 < 2; ++i2) {
      if (i == i2) continue;
      for (int j = 0; j < m; ++j)
        for (int j2 = 0; j2 < m; ++j2) {
          if (j == j2) continue;
          DualRow row;
          row.coefficients = {{var(i, j), Rational(1)},
                              {var(i, j2), Rational(-1)},
                              {var(i2, j2), Rational(-1)},
                              {var(i2, j), Rational(-1)}};
          rows[key_psi(i + 1, i2 + 1, j + 1, j2 + 1)] = std::move(row);
        }
    }
  for (int i = 0; i < 2; ++i) {
    const auto& pref = profile.preferences[i];
    for (int p = 0; p + 1 < m; ++p) {
      const int closer = var(i, pref.ranking[p]);
      const int farther = var(i, pref.ranking[p + 1]);
      const bool intense = pref.intensities[p] == Intensity::kIntense;
      if (mandatory) {
        DualRow order;
        order.coefficients = {{closer, Rational(1)}, {farther, Rational(-1)}};
        rows[key_pos("phi", i + 1, p + 1)] = std::move(order);
        DualRow gap;
        if (intense)
          gap.coefficients = {{closer, inv_alpha}, {farther, Rational(-1)}};
        else
          gap.coefficients = {{closer, -inv_alpha}, {farther, Rational(1)}};
        rows[key_pos("beta", i + 1, p + 1)] = std::move(gap);
      } else {
        DualRow gap;
        if (intense)
          gap.coefficients = {{closer, inv_alpha}, {farther, Rational(-1)}};
        else
          gap.coefficients = {{closer, Rational(1)}, {farther, Rational(-1)}};
        rows[key_pos("phi", i + 1, p + 1)] = std::move(gap);
      }
    }
  }

  // Sign restrictions, and no unknown variable names.
  for (const auto& [name, value] : certificate.variables) {
    if (name.rfind("t[", 0) == 0) {
      int j = 0;
      try {
        j = std::stoi(name.substr(2, name.size() - 3));
      } catch (...) {
        throw InfeasibleCertificateError("certificate: malformed variable '" + name + "'");
      }
      if (j < 1 || j > m || name != key_t(j))
        throw InfeasibleCertificateError("certificate: unknown variable '" + name + "'");
      if (j != h + 1 && value.sign() > 0)
        throw InfeasibleCertificateError("certificate: " + name + " must be <= 0");
      continue;
    }
    auto it = rows.find(name);
    if (it == rows.end())
      throw InfeasibleCertificateError("certificate: unknown variable '" + name + "'");
    if (value.sign() < 0)
      throw InfeasibleCertificateError("certificate: " + name + " must be >= 0");
  }

  auto lookup = [&](const std::string& name) {
    auto it = certificate.variables.find(name);
    return it == certificate.variables.end() ? Rational(0) : it->second;
  };

  // Dual constraint for each primal variable x_{i,a_j}:
  //   t[j] + sum over rows of y_row * coefficient >= [a_j == a_1].
  std::vector<Rational> lhs(2 * m, Rational(0));
  for (const auto& [name, row] : rows) {
    const Rational y = lookup(name);
    if (y.is_zero()) continue;
    for (const auto& [v, coef] : row.coefficients) lhs[v] += y * coef;
  }
  for (int j = 0; j < m; ++j) {
    const Rational tj = lookup(key_t(j + 1));
    lhs[var(0, j)] += tj;
    lhs[var(1, j)] += tj;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j) {
      const Rational required = j == 0 ? Rational(1) : Rational(0);
      if (lhs[var(i, j)] < required) {
        std::ostringstream msg;
        msg << "certificate: dual constraint for d(" << i + 1 << ",a" << j + 1 << ") is "
            << lhs[var(i, j)] << ", needs >= " << required;
        throw InfeasibleCertificateError(msg.str());
      }
    }

  Rational objective;
  for (int j = 1; j <= m; ++j) objective += lookup(key_t(j));
  return objective;
}

}  // namespace mdist
