#include <doctest.h>

#include "cogfam/gpa.hpp"
#include "cogfam/variations.hpp"
#include "../support/generators.hpp"

using namespace cogfam;

namespace {
const FrequencyVector kClassI({0, 0, ratio(1, 6), 0, ratio(5, 6)});
const FrequencyVector kClassII({0, 0, 0, ratio(1, 3), ratio(2, 3)});
const FrequencyVector kD1 = frequencies_from_counts(GradeCounts(6, 9, 11, 3, 1));
const FrequencyVector kD2 = frequencies_from_counts(GradeCounts(5, 10, 13, 6, 1));
}  // namespace

TEST_CASE("variation_cog") {
  CHECK(variation_cog(kClassI, Model::GRFAM).cog == CogPoint{ratio(46, 15), ratio(13, 36)});
  CHECK(variation_cog(FrequencyVector::uniform(), Model::GRFAM).cog == CogPoint{ratio(19, 10), ratio(1, 10)});

  // Ideal vector under TFAM; x cross-checked through 0.7·GPA + 1/2 with GPA 4.
  const auto tfam_ideal = variation_cog(FrequencyVector::point_mass(Grade::A), Model::TFAM);
  CHECK(tfam_ideal.cog == CogPoint{ratio(33, 10), ratio(1, 5)});
  CHECK(tfam_ideal.cog.x == ratio(7, 10) * 4 + ratio(1, 2));

  CHECK(variation_cog(FrequencyVector::point_mass(Grade::F), Model::TpFAM).cog == CogPoint{ratio(1, 2), ratio(3, 7)});
  CHECK(variation_cog(kD1, Model::GRFAM).model == Model::GRFAM);
  CHECK(variation_cog(kD1, Model::GRFAM).cog.x == ratio(229, 150));
  CHECK(variation_cog(kD2, Model::TFAM).cog.x == ratio(83, 50));
}

TEST_CASE("non-variation models are rejected") {
  CHECK_THROWS_AS(variation_cog(kClassI, Model::GPA), ModelError);
  CHECK_THROWS_AS(variation_cog(kClassI, Model::RFAM), ModelError);
  CHECK_THROWS_AS(landmark_points(Model::RFAM), ModelError);
  CHECK_THROWS_AS(variation_compare(variation_cog(kD1, Model::GRFAM), variation_cog(kD2, Model::TFAM)), ModelError);
}

TEST_CASE("variation_classify") {
  CHECK(to_decimal(variation_cog(kD1, Model::GRFAM).cog.x) == "1.53");
  CHECK(variation_classify(variation_cog(kD1, Model::GRFAM)) == PerformanceClass::LessThanSatisfactory);
  CHECK(to_decimal(variation_cog(kD2, Model::GRFAM).cog.x) == "1.66");
  CHECK(variation_classify(variation_cog(kD2, Model::GRFAM)) == PerformanceClass::MoreThanSatisfactory);
  CHECK(variation_classify(CogPoint{ratio(33, 20), 0}) == PerformanceClass::ExactlyAtThreshold);
}

TEST_CASE("variation_compare") {
  CHECK(variation_compare(variation_cog(kClassI, Model::GRFAM), variation_cog(kClassII, Model::GRFAM)) ==
        ComparisonVerdict{Outcome::FirstBetter, VerdictBranch::TieHighRegion, Model::GRFAM});
  CHECK(variation_compare(variation_cog(kD1, Model::GRFAM), variation_cog(kD2, Model::GRFAM)) ==
        ComparisonVerdict{Outcome::SecondBetter, VerdictBranch::PrimaryXDiffers, Model::GRFAM});
  const auto p = variation_cog(kD2, Model::TpFAM);
  CHECK(variation_compare(p, p).outcome == Outcome::Equivalent);

  // x exactly at the 19/10 pivot: GPA 2 cohorts, higher y wins.
  const auto all_c = variation_cog(FrequencyVector::point_mass(Grade::C), Model::GRFAM);
  const auto uniform = variation_cog(FrequencyVector::uniform(), Model::GRFAM);
  REQUIRE(all_c.cog.x == kVariationPivot);
  CHECK(variation_compare(uniform, all_c) ==
        ComparisonVerdict{Outcome::SecondBetter, VerdictBranch::TieHighRegion, Model::GRFAM});
}

TEST_CASE("landmark_points") {
  const auto grfam = landmark_points(Model::GRFAM);
  CHECK(grfam.worst == CogPoint{ratio(1, 2), ratio(1, 2)});
  CHECK(grfam.minimum_y == CogPoint{ratio(19, 10), ratio(1, 10)});
  CHECK(grfam.ideal == CogPoint{ratio(33, 10), ratio(1, 2)});

  // Independent evaluation at the extremal vectors: x = 0.7·Σi·y_i - 0.2, y = a·Σy_i².
  const auto tfam = landmark_points(Model::TFAM);
  CHECK(tfam.worst == CogPoint{ratio(7, 10) - ratio(1, 5), ratio(1, 5)});
  CHECK(tfam.minimum_y == CogPoint{ratio(19, 10), ratio(1, 25)});
  CHECK(tfam.ideal == CogPoint{ratio(33, 10), ratio(1, 5)});

  const auto tpfam = landmark_points(Model::TpFAM);
  CHECK(tpfam.worst == CogPoint{ratio(1, 2), ratio(3, 7)});
  CHECK(tpfam.minimum_y == CogPoint{ratio(19, 10), ratio(3, 35)});
  CHECK(tpfam.ideal == CogPoint{ratio(33, 10), ratio(3, 7)});
}

TEST_CASE("variation properties over random cohorts") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const GradeCounts c1 = testing::random_counts(rng, 800);
    const GradeCounts c2 = trial % 2 ? testing::random_counts(rng, 800) : testing::equal_gpa_partner(rng, c1);
    const auto f1 = frequencies_from_counts(c1), f2 = frequencies_from_counts(c2);
    const Rational linked = ratio(7, 10) * gpa_from_frequencies(f1).value + ratio(1, 2);

    std::optional<ComparisonVerdict> reference;
    for (Model m : kVariationModels) {
      const auto p = variation_cog(f1, m), q = variation_cog(f2, m);
      const Rational a = *variation_coefficient(m);
      REQUIRE(p.cog.x == linked);
      REQUIRE(p.cog.x >= ratio(1, 2));
      REQUIRE(p.cog.x <= ratio(33, 10));
      REQUIRE(p.cog.y >= a / 5);
      REQUIRE((p.cog.y == a / 5) == (f1 == FrequencyVector::uniform()));

      const auto v = variation_compare(p, q);
      const auto back = variation_compare(q, p);
      REQUIRE(back.outcome == reversed(v.outcome));
      REQUIRE((v.outcome == Outcome::Equivalent) == (p.cog == q.cog));
      if (!reference) {
        reference = v;
      } else {
        REQUIRE(v.outcome == reference->outcome);
        REQUIRE(v.branch == reference->branch);
      }
    }
  }
}
