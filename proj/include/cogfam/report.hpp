#pragma once

#include "cogfam/comparison.hpp"

#include <span>
#include <string>

namespace cogfam {

enum class ReportFormat { Text, Json };

ReportFormat parse_format(std::string_view name);

/// Byte-deterministic rendering. Text shows exact values with two-decimal
/// approximations (`11/3 (≈3.67)`); JSON carries num/den/approx triples.
std::string render_report(std::span<const AssessmentReport> reports, std::span<const AgreementMatrix> matrices,
                          ReportFormat format);

}  // namespace cogfam

namespace cogfam {

std::string render_ranking(std::span<const AssessmentReport> reports, std::span<const RankEntry> ranking, Model model,
                           ReportFormat format);

}  // namespace cogfam
