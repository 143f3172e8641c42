#pragma once

#include "cogfam/core_types.hpp"

namespace cogfam {

// The overlapping-shape family (GRFAM, TFAM, TpFAM). Adjacent shape bases
// share 0.3 units, which places the base centers at 0.7i - 0.2.

/// Tie pivot of the family's criterion; abscissa of the minimum-y landmark.
inline const Rational kVariationPivot{19, 10};
/// Satisfactory threshold: half of the ideal abscissa 33/10.
inline const Rational kVariationThreshold{33, 20};

/// A variation COG tagged with the model that produced it.
struct VariationPoint {
  Model model;
  CogPoint cog;

  friend bool operator==(const VariationPoint&, const VariationPoint&) = default;
};

struct LandmarkPoints {
  CogPoint worst;      // y1 = 1
  CogPoint minimum_y;  // uniform frequencies
  CogPoint ideal;      // y5 = 1
};

/// X = (7/10)·Σ i·y_i - 1/5,  Y = a·Σ y_i². Throws ModelError for GPA/RFAM.
VariationPoint variation_cog(const FrequencyVector& freq, Model model);

PerformanceClass variation_classify(const CogPoint& point);
PerformanceClass variation_classify(const VariationPoint& point);

/// Throws ModelError when the points come from different models.
ComparisonVerdict variation_compare(const VariationPoint& first, const VariationPoint& second);

/// Throws ModelError for GPA/RFAM.
LandmarkPoints landmark_points(Model model);

}  // namespace cogfam
