#include "mdist/election.hpp"

#include <algorithm>
#include <sstream>

#include "mdist/errors.hpp"

namespace mdist {

int IntensivePreference::rank_of(int alt) const {
  for (size_t j = 0; j < ranking.size(); ++j)
    if (ranking[j] == alt) return static_cast<int>(j) + 1;
  throw DomainError("preference: alternative not ranked");
}

int Profile::alternative_index(std::string_view name) const {
  for (size_t j = 0; j < alternative_names.size(); ++j)
    if (alternative_names[j] == name) return static_cast<int>(j);
  throw DomainError("profile: unknown alternative '" + std::string(name) + "'");
}

void Profile::validate() const {
  if (num_alternatives < 1) throw DomainError("profile: needs at least one alternative");
  if (static_cast<int>(alternative_names.size()) != num_alternatives)
    throw DomainError("profile: name count mismatch");
  if (alpha < Rational(0) || alpha > Rational(1))
    throw DomainError("profile: alpha outside [0,1]");
  for (const auto& pref : preferences) {
    if (pref.num_alternatives() != num_alternatives)
      throw DomainError("profile: ranking length mismatch");
    if (static_cast<int>(pref.intensities.size()) != num_alternatives - 1)
      throw DomainError("profile: intensity flag count mismatch");
    std::vector<bool> seen(num_alternatives, false);
    for (int alt : pref.ranking) {
      if (alt < 0 || alt >= num_alternatives) throw DomainError("profile: bad alternative index");
      if (seen[alt]) throw DomainError("profile: duplicate alternative in ranking");
      seen[alt] = true;
    }
  }
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Profile parse_profile(std::string_view text) {
  Profile profile;
  bool saw_alternatives = false, saw_alpha = false, saw_mode = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto colon = line.find(':');
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (blank) continue;
    if (colon == std::string_view::npos)
      throw ParseError("profile line " + std::to_string(line_no) + ": expected 'key: value'");
    std::string key{line.substr(0, colon)};
    key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char c) { return std::isspace(c); }),
              key.end());
    std::string_view rest = line.substr(colon + 1);

    if (key == "alternatives") {
      if (saw_alternatives) throw ParseError("profile: duplicate alternatives line");
      for (auto& name : tokenize(rest)) profile.alternative_names.push_back(name);
      if (profile.alternative_names.empty())
        throw ParseError("profile line " + std::to_string(line_no) + ": no alternatives listed");
      profile.num_alternatives = static_cast<int>(profile.alternative_names.size());
      saw_alternatives = true;
    } else if (key == "alpha") {
      profile.alpha = Rational::parse(rest);
      if (profile.alpha < Rational(0) || profile.alpha > Rational(1))
        throw ParseError("profile line " + std::to_string(line_no) + ": alpha outside [0,1]");
      saw_alpha = true;
    } else if (key == "mode") {
      auto toks = tokenize(rest);
      if (toks.size() != 1 || (toks[0] != "mandatory" && toks[0] != "voluntary"))
        throw ParseError("profile line " + std::to_string(line_no) + ": mode must be mandatory or voluntary");
      profile.mode = toks[0] == "mandatory" ? ElicitationMode::kMandatory : ElicitationMode::kVoluntary;
      saw_mode = true;
    } else if (key == "agent") {
      auto toks = tokenize(rest);
      if (toks.empty() || toks.size() % 2 == 0)
        throw ParseError("profile line " + std::to_string(line_no) + ": malformed agent ballot");
      IntensivePreference pref;
      std::vector<std::string> names;
      for (size_t t = 0; t < toks.size(); ++t) {
        if (t % 2 == 0) {
          if (toks[t] == ">" || toks[t] == ">>")
            throw ParseError("profile line " + std::to_string(line_no) + ": malformed separator");
          if (std::find(names.begin(), names.end(), toks[t]) != names.end())
            throw ParseError("profile line " + std::to_string(line_no) + ": duplicate alternative '" +
                             toks[t] + "'");
          names.push_back(toks[t]);
        } else if (toks[t] == ">") {
          pref.intensities.push_back(Intensity::kMild);
        } else if (toks[t] == ">>") {
          pref.intensities.push_back(Intensity::kIntense);
        } else {
          throw ParseError("profile line " + std::to_string(line_no) + ": malformed separator '" +
                           toks[t] + "'");
        }
      }
      if (!saw_alternatives)
        throw ParseError("profile line " + std::to_string(line_no) + ": agent before alternatives");
      for (const auto& name : names) {
        auto it = std::find(profile.alternative_names.begin(), profile.alternative_names.end(), name);
        if (it == profile.alternative_names.end())
          throw ParseError("profile line " + std::to_string(line_no) + ": unknown alternative '" + name + "'");
        pref.ranking.push_back(static_cast<int>(it - profile.alternative_names.begin()));
      }
      if (static_cast<int>(pref.ranking.size()) != profile.num_alternatives)
        throw ParseError("profile line " + std::to_string(line_no) + ": ballot does not rank every alternative");
      profile.preferences.push_back(std::move(pref));
    } else {
      throw ParseError("profile line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }

  if (!saw_alternatives) throw ParseError("profile: missing alternatives line");
  if (!saw_alpha) throw ParseError("profile: missing alpha line");
  if (!saw_mode) throw ParseError("profile: missing mode line");
  profile.validate();
  return profile;
}

std::string format_profile(const Profile& profile) {
  std::ostringstream out;
  out << "alternatives:";
  for (const auto& name : profile.alternative_names) out << ' ' << name;
  out << '\n';
  out << "alpha: " << profile.alpha << '\n';
  out << "mode: " << (profile.mode == ElicitationMode::kMandatory ? "mandatory" : "voluntary") << '\n';
  for (const auto& pref : profile.preferences) {
    out << "agent:";
    for (size_t j = 0; j < pref.ranking.size(); ++j) {
      if (j > 0) out << (pref.intensities[j - 1] == Intensity::kIntense ? " >>" : " >");
      out << ' ' << profile.alternative_names[pref.ranking[j]];
    }
    out << '\n';
  }
  return out.str();
}

int intensity_rank(const IntensivePreference& pref) {
  const int m = pref.num_alternatives();
  if (m < 2) throw DomainError("intensity_rank: needs at least two alternatives");
  for (int f = 0; f < m - 1; ++f)
    if (pref.intensities[f] == Intensity::kIntense) return f;  // moderate-up-to-f
  return m - 1;
}

int plurality_score(const Profile& profile, int alt) {
  if (alt < 0 || alt >= profile.num_alternatives) throw DomainError("plurality: bad alternative index");
  int count = 0;
  for (const auto& pref : profile.preferences)
    if (pref.ranking.front() == alt) ++count;
  return count;
}

}  // namespace mdist
