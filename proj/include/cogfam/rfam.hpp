#pragma once

#include "cogfam/core_types.hpp"

namespace cogfam {

/// Tie pivot of the rectangular model's criterion.
inline const Rational kRfamPivot{5, 2};
/// Satisfactory threshold: half of the ideal abscissa 9/2.
inline const Rational kRfamThreshold{9, 4};

/// Centroid of five unit rectangles on [i-1, i] with heights y_i:
///   x = (y1 + 3y2 + 5y3 + 7y4 + 9y5) / 2,  y = (Σ y_i²) / 2.
CogPoint rfam_cog(const FrequencyVector& freq);

PerformanceClass rfam_classify(const CogPoint& point);

ComparisonVerdict rfam_compare(const CogPoint& first, const CogPoint& second);

}  // namespace cogfam
