#include "mdist/metric.hpp"

#include <sstream>

#include "mdist/errors.hpp"

namespace mdist {

MetricMatrix::MetricMatrix(int num_agents, int num_alternatives)
    : n_(num_agents), m_(num_alternatives), values_(static_cast<size_t>(num_agents) * num_alternatives) {
  if (num_agents < 0 || num_alternatives < 0) throw DomainError("metric: negative dimensions");
}

const Rational& MetricMatrix::at(int agent, int alt) const {
  if (agent < 0 || agent >= n_ || alt < 0 || alt >= m_) throw DomainError("metric: index out of range");
  return values_[static_cast<size_t>(agent) * m_ + alt];
}

void MetricMatrix::set(int agent, int alt, Rational value) {
  if (agent < 0 || agent >= n_ || alt < 0 || alt >= m_) throw DomainError("metric: index out of range");
  if (value.sign() < 0) throw DomainError("metric: negative distance");
  values_[static_cast<size_t>(agent) * m_ + alt] = std::move(value);
}

Rational social_cost(const MetricMatrix& metric, int alt) {
  Rational sum;
  for (int i = 0; i < metric.num_agents(); ++i) sum += metric.at(i, alt);
  return sum;
}

std::vector<TriangleViolation> check_triangle(const MetricMatrix& metric) {
  std::vector<TriangleViolation> out;
  const int n = metric.num_agents(), m = metric.num_alternatives();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (a == b) continue;
          Rational slack = metric.at(i, a) - (metric.at(i, b) + metric.at(j, b) + metric.at(j, a));
          if (slack.sign() > 0) out.push_back({i, j, a, b, std::move(slack)});
        }
    }
  return out;
}

std::vector<ConsistencyViolation> check_consistency(const Profile& profile,
                                                    const MetricMatrix& metric,
                                                    ConsistencyMode mode) {
  if (metric.num_agents() != profile.num_agents() ||
      metric.num_alternatives() != profile.num_alternatives)
    throw DomainError("check_consistency: dimension mismatch");

  std::vector<ConsistencyViolation> out;
  const Rational& alpha = profile.alpha;
  for (int i = 0; i < profile.num_agents(); ++i) {
    const auto& pref = profile.preferences[i];
    for (int j = 0; j + 1 < profile.num_alternatives; ++j) {
      const Rational& closer = metric.at(i, pref.ranking[j]);
      const Rational& farther = metric.at(i, pref.ranking[j + 1]);
      const bool intense = pref.intensities[j] == Intensity::kIntense;
      if (intense) {
        // both mandatory modes and voluntary: d(j) <= alpha * d(j+1)
        if (!(closer <= alpha * farther))
          out.push_back({i, j + 1, "intense: d(pi(j)) <= alpha*d(pi(j+1))"});
        continue;
      }
      if (!(closer <= farther)) {
        out.push_back({i, j + 1, "ordering: d(pi(j)) <= d(pi(j+1))"});
        continue;
      }
      if (mode == ConsistencyMode::kMandatoryStrict && !(closer > alpha * farther))
        out.push_back({i, j + 1, "mild: d(pi(j)) > alpha*d(pi(j+1))"});
      if (mode == ConsistencyMode::kMandatoryClosed && !(closer >= alpha * farther))
        out.push_back({i, j + 1, "mild: d(pi(j)) >= alpha*d(pi(j+1))"});
    }
  }
  return out;
}

MetricMatrix parse_metric_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls{std::string(line)};
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    std::vector<Rational> row;
    bool parses = true;
    for (const auto& c : cells) {
      try {
        row.push_back(Rational::parse(c));
      } catch (const ParseError&) {
        parses = false;
        break;
      }
    }
    if (!parses) {
      if (first_content_line) {  // header row of names
        first_content_line = false;
        continue;
      }
      throw ParseError("metric csv line " + std::to_string(line_no) + ": bad entry");
    }
    first_content_line = false;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("metric csv: no data rows");
  const size_t m = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != m) throw ParseError("metric csv: ragged rows");
  MetricMatrix metric(static_cast<int>(rows.size()), static_cast<int>(m));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < m; ++j) metric.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  return metric;
}

std::string format_metric_csv(const MetricMatrix& metric,
                              const std::vector<std::string>& alternative_names) {
  std::ostringstream out;
  if (!alternative_names.empty()) {
    for (size_t j = 0; j < alternative_names.size(); ++j)
      out << (j ? "," : "") << alternative_names[j];
    out << '\n';
  }
  for (int i = 0; i < metric.num_agents(); ++i) {
    for (int j = 0; j < metric.num_alternatives(); ++j)
      out << (j ? "," : "") << metric.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace mdist
