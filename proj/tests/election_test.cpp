#include <doctest.h>

#include "mdist/election.hpp"
#include "mdist/errors.hpp"
#include "support/generators.hpp"

using namespace mdist;

TEST_CASE("parse profile basic") {
  const Profile p = parse_profile(
      "alternatives: a b\nalpha: 1/2\nmode: mandatory\nagent: a >> b\nagent: b > a");
  CHECK(p.num_alternatives == 2);
  CHECK(p.num_agents() == 2);
  CHECK(p.alpha == Rational(1, 2));
  CHECK(p.mode == ElicitationMode::kMandatory);
  CHECK(p.preferences[0].ranking == std::vector<int>{0, 1});
  CHECK(p.preferences[0].intensities[0] == Intensity::kIntense);
  CHECK(p.preferences[1].ranking == std::vector<int>{1, 0});
  CHECK(p.preferences[1].intensities[0] == Intensity::kMild);
}

TEST_CASE("parse profile with three alternatives and comments") {
  const Profile p = parse_profile(
      "# lunch vote\nalternatives: p s b\nalpha: 0.5\nmode: voluntary\nagent: p >> b > s\n");
  CHECK(p.mode == ElicitationMode::kVoluntary);
  CHECK(p.alpha == Rational(1, 2));
  CHECK(p.preferences[0].ranking == std::vector<int>{0, 2, 1});
  CHECK(p.preferences[0].intensities ==
        std::vector<Intensity>{Intensity::kIntense, Intensity::kMild});
}

TEST_CASE("parse profile errors") {
  CHECK_THROWS_WITH_AS(
      parse_profile("alternatives: a b\nalpha: 1/2\nmode: mandatory\nagent: a > a"),
      doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_profile("alternatives: a b\nalpha: 1/2\nmode: mandatory\nagent: a > c"),
      doctest::Contains("unknown alternative"), ParseError);
  CHECK_THROWS_AS(parse_profile("alternatives: a b\nalpha: 3/2\nmode: mandatory\nagent: a > b"),
                  ParseError);
  CHECK_THROWS_WITH_AS(
      parse_profile("alternatives: a b\nalpha: 1/2\nmode: mandatory\nagent: a >>> b"),
      doctest::Contains("separator"), ParseError);
  CHECK_THROWS_AS(parse_profile("alternatives: a b\nmode: mandatory\nagent: a > b"), ParseError);
  CHECK_THROWS_AS(parse_profile("alternatives: a b\nalpha: 1/2\nmode: mandatory\nagent: a"),
                  ParseError);
}

TEST_CASE("profile format/parse round-trip") {
  mdist::testsupport::Rng rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + rng.below(4), m = 1 + rng.below(5);
    const auto mode = rng.below(2) ? ElicitationMode::kVoluntary : ElicitationMode::kMandatory;
    const Profile p = mdist::testsupport::random_profile(rng, n, m, Rational(1, 3), mode);
    const Profile q = parse_profile(format_profile(p));
    CHECK(q.num_alternatives == p.num_alternatives);
    CHECK(q.alpha == p.alpha);
    CHECK(q.mode == p.mode);
    REQUIRE(q.num_agents() == p.num_agents());
    for (int i = 0; i < p.num_agents(); ++i) {
      CHECK(q.preferences[i].ranking == p.preferences[i].ranking);
      CHECK(q.preferences[i].intensities == p.preferences[i].intensities);
    }
  }
}

TEST_CASE("intensity rank") {
  IntensivePreference pref{{0, 1, 2}, {Intensity::kMild, Intensity::kIntense}};
  CHECK(intensity_rank(pref) == 1);
  pref.intensities = {Intensity::kMild, Intensity::kMild};
  CHECK(intensity_rank(pref) == 2);
  IntensivePreference leading{{0, 1}, {Intensity::kIntense}};
  CHECK(intensity_rank(leading) == 0);
  IntensivePreference single{{0}, {}};
  CHECK_THROWS_AS(intensity_rank(single), DomainError);
}

TEST_CASE("intensity rank characterizes the flag prefix") {
  mdist::testsupport::Rng rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const int m = 2 + rng.below(5);
    const auto pref = mdist::testsupport::random_preference(rng, m);
    const int k = intensity_rank(pref);
    for (int f = 0; f < k; ++f) CHECK(pref.intensities[f] == Intensity::kMild);
    if (k < m - 1) CHECK(pref.intensities[k] == Intensity::kIntense);
  }
}

TEST_CASE("plurality score") {
  Profile p;
  p.num_alternatives = 2;
  p.alternative_names = {"a", "b"};
  p.alpha = Rational(1, 2);
  p.preferences = {{{0, 1}, {Intensity::kMild}},
                   {{0, 1}, {Intensity::kMild}},
                   {{0, 1}, {Intensity::kMild}}};
  CHECK(plurality_score(p, 0) == 3);
  CHECK(plurality_score(p, 1) == 0);
  p.preferences[2] = {{1, 0}, {Intensity::kMild}};
  CHECK(plurality_score(p, 0) == 2);
  CHECK(plurality_score(p, 1) == 1);
  CHECK_THROWS_AS(plurality_score(p, 2), DomainError);
}
