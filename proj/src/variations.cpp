#include "cogfam/variations.hpp"

#include <string>

namespace cogfam {

namespace {

Rational require_coefficient(Model model) {
  auto a = variation_coefficient(model);
  if (!a) {
    throw ModelError(std::string(model_name(model)) + " is not a GRFAM/TFAM/TpFAM variation model");
  }
  return *a;
}

}  // namespace

VariationPoint variation_cog(const FrequencyVector& freq, Model model) {
  const Rational a = require_coefficient(model);
  return {model, {Rational(7, 10) * freq.weighted_index_sum() - Rational(1, 5), a * freq.sum_of_squares()}};
}

PerformanceClass variation_classify(const CogPoint& point) { return classify_against(point.x, kVariationThreshold); }

PerformanceClass variation_classify(const VariationPoint& point) { return variation_classify(point.cog); }

ComparisonVerdict variation_compare(const VariationPoint& first, const VariationPoint& second) {
  if (first.model != second.model) {
    throw ModelError("cannot compare a " + std::string(model_name(first.model)) + " point with a " +
                     std::string(model_name(second.model)) + " point");
  }
  require_coefficient(first.model);
  return compare_by_cog(first.cog, second.cog, kVariationPivot, first.model);
}

LandmarkPoints landmark_points(Model model) {
  require_coefficient(model);
  return {variation_cog(FrequencyVector::point_mass(Grade::F), model).cog,
          variation_cog(FrequencyVector::uniform(), model).cog,
          variation_cog(FrequencyVector::point_mass(Grade::A), model).cog};
}

}  // namespace cogfam
