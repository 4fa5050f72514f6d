#include <doctest.h>

#include "mdist/errors.hpp"
#include "mdist/instances.hpp"
#include "mdist/line.hpp"
#include "mdist/metric.hpp"

using namespace mdist;

TEST_CASE("kind names round-trip") {
  for (InstanceKind kind :
       {InstanceKind::kGeneralReversed, InstanceKind::kGeneralIntense, InstanceKind::kLineTwoAltMild,
        InstanceKind::kLineTwoAltIntense, InstanceKind::kLineGeneral, InstanceKind::kPolar,
        InstanceKind::kPoiiMandatory, InstanceKind::kPoiiVoluntary})
    CHECK(kind_from_name(kind_name(kind)) == kind);
  CHECK(!kind_from_name("nonsense").has_value());
}

TEST_CASE("general reversed instance") {
  const auto inst = generate(InstanceKind::kGeneralReversed, 4, std::nullopt, Rational(1, 2));
  CHECK(inst.expected_ratio == Rational(11, 5));
  REQUIRE(inst.witness_metric.has_value());
  const MetricMatrix& w = *inst.witness_metric;
  CHECK(w.at(0, 0) == Rational(1));
  // agent 2 distances by rank: 2/3, 4/3, 8/3, 8/3
  CHECK(w.at(1, 3) == Rational(2, 3));
  CHECK(w.at(1, 2) == Rational(4, 3));
  CHECK(w.at(1, 1) == Rational(8, 3));
  CHECK(w.at(1, 0) == Rational(8, 3));
  CHECK(verify(inst).all_passed());
}

TEST_CASE("general reversed ratio limits") {
  // toward alpha = 0 the bound approaches 3, toward 1 it approaches 1
  const auto near_zero = generate(InstanceKind::kGeneralReversed, 6, std::nullopt, Rational(1, 100));
  CHECK(near_zero.expected_ratio > Rational(29, 10));
  const auto near_one = generate(InstanceKind::kGeneralReversed, 6, std::nullopt, Rational(99, 100));
  CHECK(near_one.expected_ratio < Rational(11, 10));
}

TEST_CASE("general intense instance") {
  const auto inst = generate(InstanceKind::kGeneralIntense, 4, 1, Rational(1, 2));
  CHECK(inst.expected_ratio == Rational(2));
  REQUIRE(inst.witness_metric.has_value());
  CHECK(social_cost(*inst.witness_metric, inst.ratio_numerator_alt) == Rational(4));
  CHECK(social_cost(*inst.witness_metric, inst.ratio_denominator_alt) == Rational(2));
  CHECK(verify(inst).all_passed());
  CHECK_THROWS_AS(generate(InstanceKind::kGeneralIntense, 4, 3, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(generate(InstanceKind::kGeneralIntense, 4, std::nullopt, Rational(1, 2)),
                  DomainError);
}

TEST_CASE("line two-alternative instances") {
  const auto mild = generate(InstanceKind::kLineTwoAltMild, 2, std::nullopt, Rational(1, 2));
  CHECK(mild.expected_ratio == Rational(5, 3));
  CHECK(verify(mild).all_passed());

  const auto intense = generate(InstanceKind::kLineTwoAltIntense, 2, std::nullopt, Rational(1, 2));
  CHECK(intense.expected_ratio == Rational(2));
  CHECK(verify(intense).all_passed());

  CHECK_THROWS_AS(generate(InstanceKind::kLineTwoAltMild, 3, std::nullopt, Rational(1, 2)),
                  DomainError);
  CHECK_THROWS_AS(generate(InstanceKind::kLineTwoAltMild, 2, std::nullopt, Rational(1)),
                  DomainError);
}

TEST_CASE("line general instance") {
  const auto inst = generate(InstanceKind::kLineGeneral, 4, std::nullopt, Rational(1, 2));
  CHECK(inst.expected_ratio == Rational(13, 7));
  CHECK(verify(inst).all_passed());

  const auto odd = generate(InstanceKind::kLineGeneral, 5, std::nullopt, Rational(1, 2));
  CHECK(odd.expected_ratio == Rational(13, 7));  // floor(m/2) = 2
  CHECK(verify(odd).all_passed());
  CHECK(odd.profile.preferences[0].intensities.back() == Intensity::kIntense);
}

TEST_CASE("polar instance") {
  const auto inst = generate(InstanceKind::kPolar, 2, std::nullopt, Rational(1, 2));
  CHECK(inst.expected_ratio == Rational(7, 5));
  REQUIRE(inst.witness_metric.has_value());
  CHECK(inst.witness_metric->at(0, 0) == Rational(1, 5));
  CHECK(inst.witness_metric->at(0, 1) == Rational(2, 5));
  CHECK(inst.witness_metric->at(1, 0) == Rational(6, 5));
  CHECK(inst.witness_metric->at(1, 1) == Rational(3, 5));
  REQUIRE(inst.certificate.has_value());
  const auto report = verify(inst);
  CHECK(report.all_passed());

  const auto odd = generate(InstanceKind::kPolar, 5, std::nullopt, Rational(1, 2));
  CHECK(odd.expected_ratio == Rational(23, 17));  // the m = 4 value
  CHECK(!odd.certificate.has_value());
  CHECK(verify(odd).all_passed());
}

TEST_CASE("poii mandatory instance") {
  const auto inst = generate(InstanceKind::kPoiiMandatory, 2, std::nullopt, Rational(1, 2));
  CHECK(inst.expected_ratio == Rational(15, 7));
  CHECK(inst.witness_ratio == Rational(3));
  REQUIRE(inst.oblivious_opt.has_value());
  CHECK(*inst.oblivious_opt == 1);  // second-half representative of the tie
  CHECK(verify(inst).all_passed());
}

TEST_CASE("poii voluntary instance") {
  const auto inst = generate(InstanceKind::kPoiiVoluntary, 2, std::nullopt, Rational(1, 2));
  CHECK(inst.expected_ratio == Rational(3, 2));
  CHECK(inst.profile.mode == ElicitationMode::kVoluntary);
  REQUIRE(inst.certificate.has_value());
  CHECK(verify_dual_certificate(*inst.certificate) == Rational(2));
  CHECK(verify(inst).all_passed());
}

TEST_CASE("every generated witness is consistent") {
  const std::vector<Rational> alphas = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (const auto& alpha : alphas) {
    for (int m : {2, 3, 4, 5}) {
      std::vector<LowerBoundInstance> bundle;
      bundle.push_back(generate(InstanceKind::kGeneralReversed, m, std::nullopt, alpha));
      bundle.push_back(generate(InstanceKind::kGeneralIntense, m, 1, alpha));
      bundle.push_back(generate(InstanceKind::kLineGeneral, m, std::nullopt, alpha));
      bundle.push_back(generate(InstanceKind::kPolar, m, std::nullopt, alpha));
      if (m == 2) {
        bundle.push_back(generate(InstanceKind::kLineTwoAltMild, m, std::nullopt, alpha));
        bundle.push_back(generate(InstanceKind::kLineTwoAltIntense, m, std::nullopt, alpha));
      }
      for (const auto& inst : bundle) {
        REQUIRE(inst.witness_metric.has_value());
        CHECK(check_triangle(*inst.witness_metric).empty());
        const auto mode = inst.profile.mode == ElicitationMode::kMandatory
                              ? ConsistencyMode::kMandatoryClosed
                              : ConsistencyMode::kVoluntary;
        CHECK(check_consistency(inst.profile, *inst.witness_metric, mode).empty());
      }
    }
  }
}
