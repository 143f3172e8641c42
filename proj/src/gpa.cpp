#include "cogfam/gpa.hpp"

namespace cogfam {

GpaScore gpa_from_counts(const GradeCounts& counts) {
  BigInt points = 0;
  for (Grade g : kGrades) points += BigInt(counts.count(g)) * (grade_index(g) - 1);
  return {Rational(points, BigInt(counts.total()))};
}

GpaScore gpa_from_frequencies(const FrequencyVector& freq) {
  return {freq[Grade::D] + 2 * freq[Grade::C] + 3 * freq[Grade::B] + 4 * freq[Grade::A]};
}

PerformanceClass gpa_classify(const GpaScore& score) { return classify_against(score.value, kGpaThreshold); }

ComparisonVerdict gpa_compare(const GpaScore& first, const GpaScore& second) {
  if (first.value == second.value) return {Outcome::Equivalent, VerdictBranch::FullTie, Model::GPA};
  return {first.value > second.value ? Outcome::FirstBetter : Outcome::SecondBetter, VerdictBranch::PrimaryXDiffers,
          Model::GPA};
}

}  // namespace cogfam
