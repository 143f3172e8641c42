#include "cogfam/core_types.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace cogfam {

Grade grade_from_index(int index) {
  if (index < 1 || index > 5) throw std::out_of_range("grade index out of range: " + std::to_string(index));
  return static_cast<Grade>(index);
}

char grade_letter(Grade g) {
  static constexpr char kLetters[] = {'F', 'D', 'C', 'B', 'A'};
  return kLetters[grade_index(g) - 1];
}

std::optional<Grade> grade_from_letter(char letter) {
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'F': return Grade::F;
    case 'D': return Grade::D;
    case 'C': return Grade::C;
    case 'B': return Grade::B;
    case 'A': return Grade::A;
    default: return std::nullopt;
  }
}

GradeCounts::GradeCounts(const Array& counts) : counts_(counts), total_(0) {
  for (auto c : counts_) total_ += c;
  if (total_ == 0) throw InputError("empty cohort: all grade counts are zero");
}

GradeCounts::GradeCounts(std::uint64_t n_f, std::uint64_t n_d, std::uint64_t n_c, std::uint64_t n_b,
                         std::uint64_t n_a)
    : GradeCounts(Array{n_f, n_d, n_c, n_b, n_a}) {}

FrequencyVector::FrequencyVector(Array values) : values_(std::move(values)) {
  Rational sum = 0;
  for (const auto& v : values_) {
    if (v < 0) throw InputError("negative frequency " + to_string(v));
    sum += v;
  }
  if (sum != 1) throw InputError("frequencies sum to " + to_string(sum) + ", expected 1");
}

FrequencyVector FrequencyVector::uniform() {
  const Rational fifth(1, 5);
  return FrequencyVector({fifth, fifth, fifth, fifth, fifth});
}

FrequencyVector FrequencyVector::point_mass(Grade g) {
  Array values{0, 0, 0, 0, 0};
  values[grade_index(g) - 1] = 1;
  return FrequencyVector(values);
}

const Rational& FrequencyVector::y(int index) const {
  if (index < 1 || index > 5) throw std::out_of_range("frequency index out of range");
  return values_[index - 1];
}

Rational FrequencyVector::sum_of_squares() const {
  Rational s = 0;
  for (const auto& v : values_) s += v * v;
  return s;
}

Rational FrequencyVector::weighted_index_sum() const {
  Rational s = 0;
  for (int i = 1; i <= 5; ++i) s += i * values_[i - 1];
  return s;
}

FrequencyVector frequencies_from_counts(const GradeCounts& counts) {
  FrequencyVector::Array values;
  const BigInt n = counts.total();
  for (std::size_t i = 0; i < 5; ++i) values[i] = Rational(BigInt(counts.counts()[i]), n);
  return FrequencyVector(std::move(values));
}

std::string_view model_name(Model m) {
  switch (m) {
    case Model::GPA: return "GPA";
    case Model::RFAM: return "RFAM";
    case Model::GRFAM: return "GRFAM";
    case Model::TFAM: return "TFAM";
    case Model::TpFAM: return "TpFAM";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (Model m : kAllModels) {
    std::string candidate(model_name(m));
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (candidate == lowered) return m;
  }
  throw InputError("unknown model '" + std::string(name) + "' (expected GPA, RFAM, GRFAM, TFAM or TpFAM)");
}

std::optional<Rational> variation_coefficient(Model m) {
  switch (m) {
    case Model::GRFAM: return Rational(1, 2);
    case Model::TFAM: return Rational(1, 5);
    case Model::TpFAM: return Rational(3, 7);
    default: return std::nullopt;
  }
}

std::string_view class_name(PerformanceClass c) {
  switch (c) {
    case PerformanceClass::LessThanSatisfactory: return "LessThanSatisfactory";
    case PerformanceClass::ExactlyAtThreshold: return "ExactlyAtThreshold";
    case PerformanceClass::MoreThanSatisfactory: return "MoreThanSatisfactory";
  }
  return "?";
}

PerformanceClass classify_against(const Rational& score, const Rational& threshold) {
  if (score > threshold) return PerformanceClass::MoreThanSatisfactory;
  if (score == threshold) return PerformanceClass::ExactlyAtThreshold;
  return PerformanceClass::LessThanSatisfactory;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::FirstBetter: return "FirstBetter";
    case Outcome::SecondBetter: return "SecondBetter";
    case Outcome::Equivalent: return "Equivalent";
  }
  return "?";
}

std::string_view branch_name(VerdictBranch b) {
  switch (b) {
    case VerdictBranch::PrimaryXDiffers: return "PrimaryXDiffers";
    case VerdictBranch::TieHighRegion: return "TieHighRegion";
    case VerdictBranch::TieLowRegion: return "TieLowRegion";
    case VerdictBranch::FullTie: return "FullTie";
  }
  return "?";
}

Outcome reversed(Outcome o) {
  switch (o) {
    case Outcome::FirstBetter: return Outcome::SecondBetter;
    case Outcome::SecondBetter: return Outcome::FirstBetter;
    case Outcome::Equivalent: return Outcome::Equivalent;
  }
  return o;
}

ComparisonVerdict compare_by_cog(const CogPoint& first, const CogPoint& second, const Rational& pivot,
                                 Model model) {
  if (first.x != second.x) {
    return {first.x > second.x ? Outcome::FirstBetter : Outcome::SecondBetter, VerdictBranch::PrimaryXDiffers,
            model};
  }
  if (first.y == second.y) return {Outcome::Equivalent, VerdictBranch::FullTie, model};
  // Equality at the pivot belongs to the high region.
  if (first.x >= pivot) {
    return {first.y > second.y ? Outcome::FirstBetter : Outcome::SecondBetter, VerdictBranch::TieHighRegion, model};
  }
  return {first.y < second.y ? Outcome::FirstBetter : Outcome::SecondBetter, VerdictBranch::TieLowRegion, model};
}

}  // namespace cogfam
