#include "cogfam/rfam.hpp"

namespace cogfam {

CogPoint rfam_cog(const FrequencyVector& freq) {
  Rational x = 0;
  for (int i = 1; i <= 5; ++i) x += (2 * i - 1) * freq.y(i);
  return {x / 2, freq.sum_of_squares() / 2};
}

PerformanceClass rfam_classify(const CogPoint& point) { return classify_against(point.x, kRfamThreshold); }

ComparisonVerdict rfam_compare(const CogPoint& first, const CogPoint& second) {
  return compare_by_cog(first, second, kRfamPivot, Model::RFAM);
}

}  // namespace cogfam
