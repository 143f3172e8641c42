#include <doctest.h>

#include "cogfam/comparison.hpp"
#include "../support/generators.hpp"

#include <algorithm>

using namespace cogfam;

namespace {
const GradeCounts kClassI(0, 0, 10, 0, 50);
const GradeCounts kClassII(0, 0, 0, 20, 40);
const GradeCounts kD1(6, 9, 11, 3, 1);
const GradeCounts kD2(5, 10, 13, 6, 1);

Outcome outcome(const AgreementMatrix& m, Model model) { return m.verdicts.at(model).outcome; }
}  // namespace

TEST_CASE("assess") {
  SUBCASE("department D2") {
    const auto r = assess("D2", kD2);
    CHECK(r.gpa.value == ratio(58, 35));
    CHECK(r.rfam_point.x == ratio(151, 70));
    for (Model m : kVariationModels) CHECK(r.variation_points.at(m).x == ratio(83, 50));
    CHECK(to_decimal(r.rfam_point.x) == "2.16");
  }
  SUBCASE("ideal cohort") {
    const auto r = assess("ideal", GradeCounts(0, 0, 0, 0, 12));
    CHECK(r.gpa.value == 4);
    CHECK(r.rfam_point == CogPoint{ratio(9, 2), ratio(1, 2)});
    CHECK(r.variation_points.at(Model::GRFAM) == CogPoint{ratio(33, 10), ratio(1, 2)});
  }
  SUBCASE("Class II is more than satisfactory everywhere") {
    const auto r = assess("Class II", kClassII);
    CHECK(r.gpa.value == ratio(11, 3));
    for (Model m : kAllModels) CHECK(r.classifications.at(m) == PerformanceClass::MoreThanSatisfactory);
  }
  CHECK_THROWS_AS(assess("D1", kD1).cog(Model::GPA), ModelError);
}

TEST_CASE("compare_pair") {
  SUBCASE("equal GPA, fuzzy models prefer Class I") {
    const auto m = compare_pair(assess("Class I", kClassI), assess("Class II", kClassII));
    CHECK(m.verdicts.at(Model::GPA) == ComparisonVerdict{Outcome::Equivalent, VerdictBranch::FullTie, Model::GPA});
    for (Model model : kFuzzyModels) {
      CHECK(m.verdicts.at(model) == ComparisonVerdict{Outcome::FirstBetter, VerdictBranch::TieHighRegion, model});
    }
    CHECK_FALSE(m.gpa_vs_fuzzy);
    CHECK(m.fuzzy_internal);
  }
  SUBCASE("departments") {
    const auto m = compare_pair(assess("D1", kD1), assess("D2", kD2));
    for (Model model : kAllModels) CHECK(outcome(m, model) == Outcome::SecondBetter);
    CHECK(m.gpa_vs_fuzzy);
    CHECK(m.fuzzy_internal);
  }
  SUBCASE("self comparison") {
    const auto r = assess("D1", kD1);
    const auto m = compare_pair(r, r);
    for (Model model : kAllModels) CHECK(outcome(m, model) == Outcome::Equivalent);
    CHECK(m.gpa_vs_fuzzy);
  }
  SUBCASE("witnesses are reported") {
    const auto m = compare_pair(assess("Class I", kClassI), assess("Class II", kClassII));
    REQUIRE(m.witnesses.size() == 4);
    for (const auto& w : m.witnesses) CHECK((!w.applicable || w.holds));
    CHECK_FALSE(m.witnesses[1].applicable);
    CHECK(m.witnesses[2].applicable);
  }
}

TEST_CASE("rank") {
  const std::vector<AssessmentReport> depts{assess("D1", kD1), assess("D2", kD2)};
  const auto by_grfam = rank(depts, Model::GRFAM);
  REQUIRE(by_grfam.size() == 2);
  CHECK(by_grfam[0].group_id == "D2");
  CHECK(by_grfam[0].rank == 1);
  CHECK(by_grfam[1].group_id == "D1");
  CHECK(by_grfam[1].rank == 2);

  const std::vector<AssessmentReport> classes{assess("Class II", kClassII), assess("Class I", kClassI)};
  const auto by_gpa = rank(classes, Model::GPA);
  CHECK(by_gpa[0].rank == 1);
  CHECK(by_gpa[1].rank == 1);
  CHECK(by_gpa[0].group_id == "Class I");  // display order only

  const auto by_rfam = rank(classes, Model::RFAM);
  CHECK(by_rfam[0].group_id == "Class I");
  CHECK(by_rfam[1].rank == 2);

  const std::vector<AssessmentReport> one{assess("solo", kD1)};
  CHECK(rank(one, Model::TpFAM).front().rank == 1);
  CHECK_THROWS_AS(rank(std::span<const AssessmentReport>{}, Model::GPA), InputError);
}

TEST_CASE("rank matches pairwise verdicts and uses competition numbering") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<AssessmentReport> reports;
    const GradeCounts base = testing::random_counts(rng, 40);
    for (int k = 0; k < 12; ++k) {
      const GradeCounts c = k % 3 == 0 ? testing::random_counts(rng, 40) : testing::equal_gpa_partner(rng, base);
      reports.push_back(assess("g" + std::to_string(k), c));
    }
    for (Model model : kAllModels) {
      const auto ranking = rank(reports, model);
      REQUIRE(ranking.size() == reports.size());
      for (std::size_t i = 1; i < ranking.size(); ++i) {
        const auto v = compare_reports(reports[ranking[i - 1].report_index], reports[ranking[i].report_index], model);
        REQUIRE(v.outcome != Outcome::SecondBetter);
        if (v.outcome == Outcome::Equivalent) {
          REQUIRE(ranking[i].rank == ranking[i - 1].rank);
          REQUIRE(ranking[i - 1].group_id < ranking[i].group_id);
        } else {
          REQUIRE(ranking[i].rank == i + 1);
        }
      }
    }
  }
}

TEST_CASE("pairwise criterion is transitive") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 3000; ++trial) {
    const GradeCounts a = testing::random_counts(rng, 30);
    const GradeCounts b = testing::equal_gpa_partner(rng, a);
    const GradeCounts c = trial % 2 ? testing::equal_gpa_partner(rng, a) : testing::random_counts(rng, 30);
    const auto ra = assess("a", a), rb = assess("b", b), rc = assess("c", c);
    for (Model m : kAllModels) {
      const Outcome ab = compare_reports(ra, rb, m).outcome;
      const Outcome bc = compare_reports(rb, rc, m).outcome;
      const Outcome ac = compare_reports(ra, rc, m).outcome;
      // a >= b and b >= c imply a >= c, strictly if either step is strict.
      if (ab != Outcome::SecondBetter && bc != Outcome::SecondBetter) {
        REQUIRE(ac != Outcome::SecondBetter);
        if (ab == Outcome::FirstBetter || bc == Outcome::FirstBetter) REQUIRE(ac == Outcome::FirstBetter);
      }
    }
  }
}

TEST_CASE("assess_all is deterministic and ordered by group id") {
  std::mt19937_64 rng(3);
  std::map<std::string, GradeCounts> groups;
  for (int k = 0; k < 40; ++k) groups.emplace("group" + std::to_string(k), testing::random_counts(rng, 100));
  const auto first = assess_all(groups);
  const auto second = assess_all(groups);
  REQUIRE(first.size() == groups.size());
  auto it = groups.begin();
  for (std::size_t i = 0; i < first.size(); ++i, ++it) {
    CHECK(first[i].group_id == it->first);
    CHECK(first[i].gpa == second[i].gpa);
    CHECK(first[i].variation_points == second[i].variation_points);
  }
}
