#include "cogfam/report.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace cogfam {

namespace {

using Json = nlohmann::ordered_json;

std::string exact_with_approx(const Rational& r) { return to_string(r) + " (≈" + to_decimal(r) + ")"; }

std::string point_text(const CogPoint& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ") (≈" + to_decimal(p.x) + ", ≈" + to_decimal(p.y) + ")";
}

std::string outcome_text(Outcome o, const AgreementMatrix& m) {
  switch (o) {
    case Outcome::FirstBetter: return m.first_id + " better";
    case Outcome::SecondBetter: return m.second_id + " better";
    case Outcome::Equivalent: return "Equivalent";
  }
  return "?";
}

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Json rational_json(const Rational& r) {
  return Json{{"num", integer_json(boost::multiprecision::numerator(r))},
              {"den", integer_json(boost::multiprecision::denominator(r))},
              {"approx", to_double(r)}};
}

Json report_json(const AssessmentReport& r) {
  Json counts = Json::object();
  for (Grade g : kGrades) counts[std::string(1, grade_letter(g))] = r.counts.count(g);
  counts["n"] = r.counts.total();

  Json freqs = Json::array();
  for (const auto& y : r.frequencies.values()) freqs.push_back(rational_json(y));

  Json cog = Json::object();
  for (Model m : kFuzzyModels) {
    const CogPoint& p = r.cog(m);
    cog[std::string(model_name(m))] = Json{{"x", rational_json(p.x)}, {"y", rational_json(p.y)}};
  }

  Json classes = Json::object();
  for (Model m : kAllModels) classes[std::string(model_name(m))] = std::string(class_name(r.classifications.at(m)));

  return Json{{"id", r.group_id}, {"counts", counts}, {"frequencies", freqs}, {"gpa", rational_json(r.gpa.value)},
              {"cog", cog}, {"classifications", classes}};
}

Json matrix_json(const AgreementMatrix& m) {
  Json verdicts = Json::object();
  for (Model model : kAllModels) {
    const auto& v = m.verdicts.at(model);
    verdicts[std::string(model_name(model))] =
        Json{{"outcome", std::string(outcome_name(v.outcome))}, {"branch", std::string(branch_name(v.branch))}};
  }
  Json witnesses = Json::array();
  for (const auto& w : m.witnesses) {
    witnesses.push_back(Json{{"name", w.name}, {"applicable", w.applicable}, {"holds", w.holds}, {"detail", w.detail}});
  }
  return Json{{"first", m.first_id},
              {"second", m.second_id},
              {"verdicts", verdicts},
              {"agreement", Json{{"gpa_vs_fuzzy", m.gpa_vs_fuzzy}, {"fuzzy_internal", m.fuzzy_internal}}},
              {"witnesses", witnesses}};
}

void report_text(std::ostream& out, const AssessmentReport& r) {
  out << "Group " << r.group_id << " (n=" << r.counts.total() << ";";
  for (Grade g : kGrades) out << ' ' << grade_letter(g) << '=' << r.counts.count(g);
  out << ")\n";
  out << "  frequencies:";
  const auto& ys = r.frequencies.values();
  for (std::size_t i = 0; i < ys.size(); ++i) out << (i ? ", " : " ") << to_string(ys[i]);
  out << "\n";
  out << "  GPA " << exact_with_approx(r.gpa.value) << "  " << class_name(r.classifications.at(Model::GPA)) << "\n";
  for (Model m : kFuzzyModels) {
    out << "  " << model_name(m) << ' ' << point_text(r.cog(m)) << "  " << class_name(r.classifications.at(m))
        << "\n";
  }
}

void matrix_text(std::ostream& out, const AgreementMatrix& m) {
  out << "Comparison " << m.first_id << " vs " << m.second_id << "\n";
  for (Model model : kAllModels) {
    const auto& v = m.verdicts.at(model);
    out << "  " << model_name(model) << ": " << outcome_text(v.outcome, m) << " [" << branch_name(v.branch) << "]\n";
  }
  out << "  fuzzy verdict: " << outcome_text(m.verdicts.at(Model::RFAM).outcome, m) << "\n";
  out << "  agreement: gpa_vs_fuzzy=" << (m.gpa_vs_fuzzy ? "yes" : "no")
      << " fuzzy_internal=" << (m.fuzzy_internal ? "yes" : "no") << "\n";
  for (const auto& w : m.witnesses) {
    out << "  witness " << w.name << ": " << (!w.applicable ? "n/a" : w.holds ? "holds" : "FAILED") << " - " << w.detail
        << "\n";
  }
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw InputError("unknown format '" + std::string(name) + "' (expected text or json)");
}

std::string render_report(std::span<const AssessmentReport> reports, std::span<const AgreementMatrix> matrices,
                          ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json doc = Json::object();
    doc["groups"] = Json::array();
    for (const auto& r : reports) doc["groups"].push_back(report_json(r));
    if (matrices.size() == 1) {
      doc["comparison"] = matrix_json(matrices.front());
    } else if (matrices.size() > 1) {
      doc["comparisons"] = Json::array();
      for (const auto& m : matrices) doc["comparisons"].push_back(matrix_json(m));
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out << "\n";
    report_text(out, reports[i]);
  }
  for (const auto& m : matrices) {
    out << "\n";
    matrix_text(out, m);
  }
  return out.str();
}

std::string render_ranking(std::span<const AssessmentReport> reports, std::span<const RankEntry> ranking, Model model,
                           ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json entries = Json::array();
    for (const auto& e : ranking) {
      const auto& r = reports[e.report_index];
      entries.push_back(Json{{"rank", e.rank}, {"id", e.group_id}, {"score", rational_json(r.primary_score(model))}});
    }
    return Json{{"model", std::string(model_name(model))}, {"ranking", entries}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "Ranking under " << model_name(model) << "\n";
  for (const auto& e : ranking) {
    const auto& r = reports[e.report_index];
    out << "  " << e.rank << ". " << e.group_id << "  ";
    if (model == Model::GPA) {
      out << "GPA " << exact_with_approx(r.gpa.value);
    } else {
      out << model_name(model) << ' ' << point_text(r.cog(model));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace cogfam
