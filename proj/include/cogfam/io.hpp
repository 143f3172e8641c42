#pragma once

#include "cogfam/core_types.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cogfam {

struct GradeBand {
  Grade grade;
  int lo;
  int hi;  // inclusive
};

/// Maps integer scores 0..100 onto grades. Bands partition 0..100 in F < D <
/// C < B < A order.
class GradeBoundaries {
 public:
  /// F 0-49, D 50-59, C 60-74, B 75-84, A 85-100.
  GradeBoundaries();
  /// Throws InputError unless the bands form a complete ordered partition.
  explicit GradeBoundaries(std::vector<GradeBand> bands);

  /// Lines of `label,lo,hi` (commas or whitespace); '#' starts a comment.
  static GradeBoundaries parse(std::istream& in);
  /// Missing file yields the default bands.
  static GradeBoundaries load_or_default(const std::string& path);

  const std::vector<GradeBand>& bands() const { return bands_; }

 private:
  std::vector<GradeBand> bands_;  // F..A
};

/// Throws InputError for scores outside 0..100.
Grade map_score_to_label(int score, const GradeBoundaries& boundaries);

using GroupCounts = std::map<std::string, GradeCounts>;

/// Rows `group_id,score`, optional header.
GroupCounts parse_scores(std::istream& in, const GradeBoundaries& boundaries);

/// Rows `group_id,nF,nD,nC,nB,nA`, optional header.
GroupCounts parse_counts(std::istream& in);

/// Counts CSV readable by parse_counts, with header.
std::string write_counts(const GroupCounts& groups);

}  // namespace cogfam
