#pragma once

#include "cogfam/core_types.hpp"

namespace cogfam {

/// Grade Point Average, exact. Always within [0, 4].
struct GpaScore {
  Rational value;

  friend bool operator==(const GpaScore&, const GpaScore&) = default;
};

/// Satisfactory threshold: half of the ideal score 4.
inline const Rational kGpaThreshold{2};

/// (0·n_F + 1·n_D + 2·n_C + 3·n_B + 4·n_A) / n.
GpaScore gpa_from_counts(const GradeCounts& counts);

/// y2 + 2y3 + 3y4 + 4y5.
GpaScore gpa_from_frequencies(const FrequencyVector& freq);

PerformanceClass gpa_classify(const GpaScore& score);

/// Plain comparison of the two values. There is no secondary criterion, so an
/// equal GPA is always Equivalent with branch FullTie.
ComparisonVerdict gpa_compare(const GpaScore& first, const GpaScore& second);

}  // namespace cogfam
