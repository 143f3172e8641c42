#pragma once

#include "cogfam/errors.hpp"
#include "cogfam/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cogfam {

/// Linguistic grades ordered worst to best; the underlying value is the
/// 1-based index used by every COG formula.
enum class Grade : std::uint8_t { F = 1, D = 2, C = 3, B = 4, A = 5 };

inline constexpr std::array<Grade, 5> kGrades{Grade::F, Grade::D, Grade::C, Grade::B, Grade::A};

constexpr int grade_index(Grade g) { return static_cast<int>(g); }
Grade grade_from_index(int index);
char grade_letter(Grade g);
std::optional<Grade> grade_from_letter(char letter);

/// Tally of members per grade. Always holds at least one member.
class GradeCounts {
 public:
  using Array = std::array<std::uint64_t, 5>;

  /// Counts in F, D, C, B, A order. Throws InputError when all are zero.
  explicit GradeCounts(const Array& counts);
  GradeCounts(std::uint64_t n_f, std::uint64_t n_d, std::uint64_t n_c, std::uint64_t n_b,
              std::uint64_t n_a);

  std::uint64_t count(Grade g) const { return counts_[grade_index(g) - 1]; }
  std::uint64_t total() const { return total_; }
  const Array& counts() const { return counts_; }

  friend bool operator==(const GradeCounts&, const GradeCounts&) = default;

 private:
  Array counts_;
  std::uint64_t total_;
};

/// Grade frequencies y1..y5 (F..A): nonnegative, summing to exactly 1.
class FrequencyVector {
 public:
  using Array = std::array<Rational, 5>;

  /// Throws InputError on a negative entry or a sum different from 1.
  explicit FrequencyVector(Array values);

  static FrequencyVector uniform();
  /// All mass on one grade.
  static FrequencyVector point_mass(Grade g);

  const Rational& operator[](Grade g) const { return values_[grade_index(g) - 1]; }
  /// 1-based, matching y1..y5.
  const Rational& y(int index) const;
  const Array& values() const { return values_; }

  /// Σ y_i².
  Rational sum_of_squares() const;
  /// Σ i·y_i.
  Rational weighted_index_sum() const;

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;

 private:
  Array values_;
};

FrequencyVector frequencies_from_counts(const GradeCounts& counts);

enum class Model : std::uint8_t { GPA, RFAM, GRFAM, TFAM, TpFAM };

inline constexpr std::array<Model, 5> kAllModels{Model::GPA, Model::RFAM, Model::GRFAM, Model::TFAM,
                                                 Model::TpFAM};
inline constexpr std::array<Model, 4> kFuzzyModels{Model::RFAM, Model::GRFAM, Model::TFAM, Model::TpFAM};
inline constexpr std::array<Model, 3> kVariationModels{Model::GRFAM, Model::TFAM, Model::TpFAM};

std::string_view model_name(Model m);
/// Case-insensitive; throws InputError for unknown names.
Model parse_model(std::string_view name);

constexpr bool is_variation(Model m) {
  return m == Model::GRFAM || m == Model::TFAM || m == Model::TpFAM;
}

/// Y-coordinate coefficient `a` of the unified variation formula:
/// 1/2 (GRFAM), 1/5 (TFAM), 3/7 (TpFAM); empty for GPA and RFAM.
std::optional<Rational> variation_coefficient(Model m);

/// Center-of-gravity coordinates.
struct CogPoint {
  Rational x;
  Rational y;

  friend bool operator==(const CogPoint&, const CogPoint&) = default;
};

enum class PerformanceClass : std::uint8_t { LessThanSatisfactory, ExactlyAtThreshold, MoreThanSatisfactory };

std::string_view class_name(PerformanceClass c);

/// Strictly-greater-than rule shared by every model.
PerformanceClass classify_against(const Rational& score, const Rational& threshold);

enum class Outcome : std::uint8_t { FirstBetter, SecondBetter, Equivalent };

enum class VerdictBranch : std::uint8_t { PrimaryXDiffers, TieHighRegion, TieLowRegion, FullTie };

struct ComparisonVerdict {
  Outcome outcome;
  VerdictBranch branch;
  Model model;

  friend bool operator==(const ComparisonVerdict&, const ComparisonVerdict&) = default;
};

std::string_view outcome_name(Outcome o);
std::string_view branch_name(VerdictBranch b);

/// Swaps FirstBetter and SecondBetter.
Outcome reversed(Outcome o);

/// Three-branch COG criterion: larger x wins; on an exact x tie the larger y
/// wins when x >= pivot and the smaller y wins otherwise.
ComparisonVerdict compare_by_cog(const CogPoint& first, const CogPoint& second, const Rational& pivot,
                                 Model model);

}  // namespace cogfam
