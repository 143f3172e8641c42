#pragma once

#include "cogfam/core_types.hpp"
#include "cogfam/gpa.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace cogfam {

/// Everything the engine knows about one cohort.
struct AssessmentReport {
  std::string group_id;
  GradeCounts counts;
  FrequencyVector frequencies;
  GpaScore gpa;
  CogPoint rfam_point;
  std::map<Model, CogPoint> variation_points;  // GRFAM, TFAM, TpFAM
  std::map<Model, PerformanceClass> classifications;  // all five models

  /// GPA value for GPA, otherwise the model's COG abscissa.
  const Rational& primary_score(Model m) const;
  /// RFAM or variation point; throws ModelError for GPA.
  const CogPoint& cog(Model m) const;
};

/// A runtime check of one agreement result on a concrete pair.
struct TheoremWitness {
  std::string name;
  bool applicable;
  bool holds;
  std::string detail;
};

/// Verdicts of all five models for an ordered pair of cohorts.
struct AgreementMatrix {
  std::string first_id;
  std::string second_id;
  std::map<Model, ComparisonVerdict> verdicts;
  /// Every fuzzy model agrees with the GPA outcome.
  bool gpa_vs_fuzzy;
  /// The four fuzzy models agree with each other.
  bool fuzzy_internal;
  std::vector<TheoremWitness> witnesses;
};

/// Throws InvariantViolation if a linkage identity fails.
AssessmentReport assess(std::string group_id, const GradeCounts& counts);

/// Assesses groups in parallel; output order follows input order.
std::vector<AssessmentReport> assess_all(const std::map<std::string, GradeCounts>& groups);

/// Verdict of one model for the ordered pair.
ComparisonVerdict compare_reports(const AssessmentReport& first, const AssessmentReport& second, Model model);

/// Throws InvariantViolation when a witness that applies does not hold.
AgreementMatrix compare_pair(const AssessmentReport& first, const AssessmentReport& second);

struct RankEntry {
  std::size_t rank;  // 1-based; tied groups share a rank (1, 1, 3, ...)
  std::size_t report_index;
  std::string group_id;
};

/// Best first. Ties share a rank and are listed by group id. Throws
/// InputError on an empty list.
std::vector<RankEntry> rank(std::span<const AssessmentReport> reports, Model model);

}  // namespace cogfam
