#include "cogfam/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace cogfam {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    fields.push_back(trim(std::string_view(line).substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::optional<long long> parse_integer(const std::string& s) {
  long long value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) return std::nullopt;
  return value;
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  std::istringstream in(s);
  double d = 0;
  in >> d;
  return !in.fail() && in.eof();
}

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

/// Calls `row(fields, line_no)` for every data row, skipping blank lines and a
/// header whose second field is non-numeric.
template <typename RowFn>
std::size_t for_each_row(std::istream& in, RowFn&& row) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    auto fields = split_fields(line, ',');
    if (first_content) {
      first_content = false;
      if (fields.size() >= 2 && !looks_numeric(fields[1])) continue;
    }
    row(fields, line_no);
    ++rows;
  }
  if (rows == 0) throw InputError("input contains no data rows");
  return rows;
}

}  // namespace

GradeBoundaries::GradeBoundaries()
    : bands_{{Grade::F, 0, 49}, {Grade::D, 50, 59}, {Grade::C, 60, 74}, {Grade::B, 75, 84}, {Grade::A, 85, 100}} {}

GradeBoundaries::GradeBoundaries(std::vector<GradeBand> bands) : bands_(std::move(bands)) {
  if (bands_.size() != 5) throw InputError("grade boundaries need exactly five bands, got " + std::to_string(bands_.size()));
  std::sort(bands_.begin(), bands_.end(), [](const GradeBand& a, const GradeBand& b) { return a.grade < b.grade; });
  int expected_lo = 0;
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    const GradeBand& b = bands_[i];
    if (b.grade != kGrades[i]) throw InputError(std::string("grade band ") + grade_letter(b.grade) + " is duplicated");
    if (b.lo != expected_lo) {
      throw InputError(std::string("grade band ") + grade_letter(b.grade) + " starts at " + std::to_string(b.lo) +
                       ", expected " + std::to_string(expected_lo) + " (bands must partition 0-100 in F<D<C<B<A order)");
    }
    if (b.hi < b.lo) throw InputError(std::string("grade band ") + grade_letter(b.grade) + " is empty");
    expected_lo = b.hi + 1;
  }
  if (expected_lo != 101) throw InputError("grade bands must end at 100");
}

GradeBoundaries GradeBoundaries::parse(std::istream& in) {
  std::vector<GradeBand> bands;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string label, lo, hi, extra;
    if (!(fields >> label)) continue;
    if (!(fields >> lo >> hi) || (fields >> extra)) throw InputError(at_line(line_no) + "expected 'label,lo,hi'");
    auto grade = label.size() == 1 ? grade_from_letter(label[0]) : std::nullopt;
    if (!grade) throw InputError(at_line(line_no) + "unknown grade label '" + label + "'");
    auto lo_v = parse_integer(lo);
    auto hi_v = parse_integer(hi);
    if (!lo_v || !hi_v) throw InputError(at_line(line_no) + "band limits must be integers");
    bands.push_back({*grade, static_cast<int>(*lo_v), static_cast<int>(*hi_v)});
  }
  return GradeBoundaries(std::move(bands));
}

GradeBoundaries GradeBoundaries::load_or_default(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) return {};
  return parse(in);
}

Grade map_score_to_label(int score, const GradeBoundaries& boundaries) {
  for (const auto& band : boundaries.bands()) {
    if (score >= band.lo && score <= band.hi) return band.grade;
  }
  throw InputError("score " + std::to_string(score) + " is outside 0-100");
}

GroupCounts parse_scores(std::istream& in, const GradeBoundaries& boundaries) {
  std::map<std::string, GradeCounts::Array> tallies;
  for_each_row(in, [&](const std::vector<std::string>& f, std::size_t line_no) {
    if (f.size() != 2) throw InputError(at_line(line_no) + "expected 'group_id,score'");
    if (f[0].empty()) throw InputError(at_line(line_no) + "empty group id");
    auto score = parse_integer(f[1]);
    if (!score) {
      if (looks_numeric(f[1])) throw InputError(at_line(line_no) + "score '" + f[1] + "' is not an integer");
      throw InputError(at_line(line_no) + "score '" + f[1] + "' is not a number");
    }
    if (*score < 0 || *score > 100) throw InputError(at_line(line_no) + "score " + f[1] + " is outside 0-100");
    const Grade g = map_score_to_label(static_cast<int>(*score), boundaries);
    auto& tally = tallies.try_emplace(f[0], GradeCounts::Array{0, 0, 0, 0, 0}).first->second;
    ++tally[grade_index(g) - 1];
  });

  GroupCounts out;
  for (const auto& [id, tally] : tallies) out.emplace(id, GradeCounts(tally));
  return out;
}

GroupCounts parse_counts(std::istream& in) {
  GroupCounts out;
  for_each_row(in, [&](const std::vector<std::string>& f, std::size_t line_no) {
    if (f.size() != 6) throw InputError(at_line(line_no) + "expected 'group_id,nF,nD,nC,nB,nA'");
    if (f[0].empty()) throw InputError(at_line(line_no) + "empty group id");
    GradeCounts::Array counts{};
    for (std::size_t i = 0; i < 5; ++i) {
      auto v = parse_integer(f[i + 1]);
      if (!v) throw InputError(at_line(line_no) + "count '" + f[i + 1] + "' is not an integer");
      if (*v < 0) throw InputError(at_line(line_no) + "count " + f[i + 1] + " is negative");
      counts[i] = static_cast<std::uint64_t>(*v);
    }
    if (std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 0; })) {
      throw InputError(at_line(line_no) + "empty cohort '" + f[0] + "' (all counts zero)");
    }
    if (!out.emplace(f[0], GradeCounts(counts)).second) {
      throw InputError(at_line(line_no) + "duplicate group id '" + f[0] + "'");
    }
  });
  return out;
}

std::string write_counts(const GroupCounts& groups) {
  std::ostringstream out;
  out << "group,nF,nD,nC,nB,nA\n";
  for (const auto& [id, counts] : groups) {
    out << id;
    for (auto c : counts.counts()) out << ',' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace cogfam
