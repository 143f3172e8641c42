#include "cogfam/comparison.hpp"

#include "cogfam/rfam.hpp"
#include "cogfam/variations.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

namespace cogfam {

const Rational& AssessmentReport::primary_score(Model m) const {
  if (m == Model::GPA) return gpa.value;
  return cog(m).x;
}

const CogPoint& AssessmentReport::cog(Model m) const {
  if (m == Model::GPA) throw ModelError("GPA has no center of gravity");
  if (m == Model::RFAM) return rfam_point;
  return variation_points.at(m);
}

AssessmentReport assess(std::string group_id, const GradeCounts& counts) {
  FrequencyVector freq = frequencies_from_counts(counts);
  GpaScore gpa = gpa_from_counts(counts);
  CogPoint rfam = rfam_cog(freq);

  if (gpa_from_frequencies(freq) != gpa) throw InvariantViolation(group_id + ": GPA from counts and frequencies differ");
  if (rfam.x != gpa.value + Rational(1, 2)) throw InvariantViolation(group_id + ": x_c != GPA + 1/2");

  AssessmentReport report{std::move(group_id), counts, freq, gpa, rfam, {}, {}};
  report.classifications[Model::GPA] = gpa_classify(gpa);
  report.classifications[Model::RFAM] = rfam_classify(rfam);

  const Rational linked_x = Rational(7, 10) * gpa.value + Rational(1, 2);
  for (Model m : kVariationModels) {
    VariationPoint p = variation_cog(freq, m);
    if (p.cog.x != linked_x) {
      throw InvariantViolation(report.group_id + ": " + std::string(model_name(m)) + " X_c != 0.7 GPA + 1/2");
    }
    report.classifications[m] = variation_classify(p);
    report.variation_points.emplace(m, std::move(p.cog));
  }
  return report;
}

std::vector<AssessmentReport> assess_all(const std::map<std::string, GradeCounts>& groups) {
  std::vector<std::pair<std::string, GradeCounts>> items(groups.begin(), groups.end());
  std::vector<std::optional<AssessmentReport>> slots(items.size());

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), items.size()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) slots[i] = assess(items[i].first, items[i].second);
    }));
  }
  for (auto& job : jobs) job.get();

  std::vector<AssessmentReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

ComparisonVerdict compare_reports(const AssessmentReport& first, const AssessmentReport& second, Model model) {
  switch (model) {
    case Model::GPA: return gpa_compare(first.gpa, second.gpa);
    case Model::RFAM: return rfam_compare(first.rfam_point, second.rfam_point);
    default:
      return variation_compare({model, first.variation_points.at(model)}, {model, second.variation_points.at(model)});
  }
}

AgreementMatrix compare_pair(const AssessmentReport& first, const AssessmentReport& second) {
  AgreementMatrix matrix{first.group_id, second.group_id, {}, true, true, {}};
  for (Model m : kAllModels) matrix.verdicts.emplace(m, compare_reports(first, second, m));

  const Outcome gpa_outcome = matrix.verdicts.at(Model::GPA).outcome;
  const Outcome rfam_outcome = matrix.verdicts.at(Model::RFAM).outcome;
  for (Model m : kFuzzyModels) {
    const Outcome o = matrix.verdicts.at(m).outcome;
    matrix.gpa_vs_fuzzy = matrix.gpa_vs_fuzzy && o == gpa_outcome;
    matrix.fuzzy_internal = matrix.fuzzy_internal && o == rfam_outcome;
  }

  const auto& grfam = matrix.verdicts.at(Model::GRFAM);
  const bool variations_identical = std::all_of(kVariationModels.begin(), kVariationModels.end(), [&](Model m) {
    const auto& v = matrix.verdicts.at(m);
    return v.outcome == grfam.outcome && v.branch == grfam.branch;
  });
  matrix.witnesses.push_back({"variations-equivalent", true, variations_identical,
                              "GRFAM, TFAM and TpFAM give the same outcome and branch"});

  const bool gpa_equal = first.gpa.value == second.gpa.value;
  matrix.witnesses.push_back({"distinct-gpa-agreement", !gpa_equal, matrix.gpa_vs_fuzzy,
                              gpa_equal ? "GPA values equal; not applicable"
                                        : "all fuzzy models follow the GPA ordering"});

  // With equal GPA both abscissas sit on the same side of their pivots.
  const bool rfam_high = first.rfam_point.x >= kRfamPivot;
  const bool var_high = first.variation_points.at(Model::GRFAM).x >= kVariationPivot;
  matrix.witnesses.push_back({"equal-gpa-pivot-consistency", gpa_equal, rfam_high == var_high && matrix.fuzzy_internal,
                              gpa_equal ? std::string("tie decided in the ") + (rfam_high ? "high" : "low") +
                                              " region by the sum of squared frequencies"
                                        : "GPA values differ; not applicable"});

  matrix.witnesses.push_back({"fuzzy-agreement", true, matrix.fuzzy_internal,
                              "RFAM, GRFAM, TFAM and TpFAM give the same outcome"});

  for (const auto& w : matrix.witnesses) {
    if (w.applicable && !w.holds) {
      throw InvariantViolation("theorem check '" + w.name + "' failed for " + first.group_id + " vs " +
                               second.group_id);
    }
  }
  return matrix;
}

std::vector<RankEntry> rank(std::span<const AssessmentReport> reports, Model model) {
  if (reports.empty()) throw InputError("cannot rank an empty list of groups");

  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Outcome o = compare_reports(reports[a], reports[b], model).outcome;
    if (o != Outcome::Equivalent) return o == Outcome::FirstBetter;
    if (reports[a].group_id != reports[b].group_id) return reports[a].group_id < reports[b].group_id;
    return a < b;
  });

  std::vector<RankEntry> out;
  out.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t r = pos + 1;
    if (pos > 0 &&
        compare_reports(reports[order[pos - 1]], reports[order[pos]], model).outcome == Outcome::Equivalent) {
      r = out.back().rank;
    }
    out.push_back({r, order[pos], reports[order[pos]].group_id});
  }
  return out;
}

}  // namespace cogfam
