#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdist/rational.hpp"

namespace mdist {

enum class Intensity { kMild, kIntense };

// One agent's ballot: a strict ranking (position 0 = most preferred) plus a
// Mild/Intense flag for each adjacent pair.
struct IntensivePreference {
  std::vector<int> ranking;              // permutation of 0..m-1
  std::vector<Intensity> intensities;    // size m-1

  int num_alternatives() const { return static_cast<int>(ranking.size()); }
  // 1-based rank of `alt` in this ranking.
  int rank_of(int alt) const;
};

enum class ElicitationMode { kMandatory, kVoluntary };

struct Profile {
  int num_alternatives = 0;
  std::vector<std::string> alternative_names;
  std::vector<IntensivePreference> preferences;
  Rational alpha;
  ElicitationMode mode = ElicitationMode::kMandatory;

  int num_agents() const { return static_cast<int>(preferences.size()); }
  int alternative_index(std::string_view name) const;  // errors if unknown

  // Checks the structural invariants (permutations, flag lengths,
  // alpha in [0,1]); throws DomainError on violation.
  void validate() const;
};

// Line-oriented profile format; '#' starts a comment. See README.
Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& profile);

// The k for which the preference is moderate-up-to-k: flags 1..k are Mild and
// flag k+1 is Intense. A leading Intense flag gives 0; no Intense flag gives
// m-1. Errors when m < 2.
int intensity_rank(const IntensivePreference& pref);

// Number of agents ranking `alt` first.
int plurality_score(const Profile& profile, int alt);

}  // namespace mdist
