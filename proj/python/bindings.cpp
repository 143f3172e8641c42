#include "cogfam/comparison.hpp"
#include "cogfam/io.hpp"
#include "cogfam/oracle.hpp"
#include "cogfam/report.hpp"
#include "cogfam/rfam.hpp"
#include "cogfam/variations.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

// cogfam::Rational <-> fractions.Fraction (ints accepted on input).
namespace pybind11::detail {
template <>
struct type_caster<cogfam::Rational> {
  PYBIND11_TYPE_CASTER(cogfam::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
    const std::string num = py::str(src.attr("numerator"));
    const std::string den = py::str(src.attr("denominator"));
    value = cogfam::Rational(cogfam::BigInt(num), cogfam::BigInt(den));
    return true;
  }

  static handle cast(const cogfam::Rational& r, return_value_policy, handle) {
    const auto num = boost::multiprecision::numerator(r).str();
    const auto den = boost::multiprecision::denominator(r).str();
    auto fraction = module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(num)), py::int_(py::str(den))).release();
  }
};
}  // namespace pybind11::detail

namespace {

using namespace cogfam;

using CountList = std::array<std::uint64_t, 5>;
using FreqList = std::array<Rational, 5>;

py::tuple point(const CogPoint& p) { return py::make_tuple(p.x, p.y); }

py::dict report_dict(const AssessmentReport& r) {
  py::dict cog, classes;
  for (Model m : kFuzzyModels) cog[py::str(std::string(model_name(m)))] = point(r.cog(m));
  for (Model m : kAllModels) {
    classes[py::str(std::string(model_name(m)))] = std::string(class_name(r.classifications.at(m)));
  }
  py::dict out;
  out["id"] = r.group_id;
  out["counts"] = r.counts.counts();
  out["frequencies"] = r.frequencies.values();
  out["gpa"] = r.gpa.value;
  out["cog"] = cog;
  out["classifications"] = classes;
  return out;
}

std::map<std::string, CountList> counts_map(const GroupCounts& groups) {
  std::map<std::string, CountList> out;
  for (const auto& [id, c] : groups) out.emplace(id, c.counts());
  return out;
}

GroupCounts to_groups(const std::map<std::string, CountList>& groups) {
  GroupCounts out;
  for (const auto& [id, c] : groups) out.emplace(id, GradeCounts(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GPA index and center-of-gravity fuzzy assessment models";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("frequencies_from_counts",
        [](const CountList& counts) { return frequencies_from_counts(GradeCounts(counts)).values(); },
        py::arg("counts"), "Counts in F, D, C, B, A order -> exact frequencies.");
  m.def("gpa_from_counts", [](const CountList& counts) { return gpa_from_counts(GradeCounts(counts)).value; },
        py::arg("counts"));
  m.def("gpa_from_frequencies", [](const FreqList& f) { return gpa_from_frequencies(FrequencyVector(f)).value; },
        py::arg("frequencies"));
  m.def("rfam_cog", [](const FreqList& f) { return point(rfam_cog(FrequencyVector(f))); }, py::arg("frequencies"));
  m.def("variation_cog",
        [](const FreqList& f, const std::string& model) {
          return point(variation_cog(FrequencyVector(f), parse_model(model)).cog);
        },
        py::arg("frequencies"), py::arg("model"));
  m.def("landmark_points",
        [](const std::string& model) {
          const auto l = landmark_points(parse_model(model));
          py::dict out;
          out["worst"] = point(l.worst);
          out["minimum_y"] = point(l.minimum_y);
          out["ideal"] = point(l.ideal);
          return out;
        },
        py::arg("model"));

  m.def("assess", [](const std::string& id, const CountList& counts) { return report_dict(assess(id, GradeCounts(counts))); },
        py::arg("group_id"), py::arg("counts"));
  m.def("compare",
        [](const std::string& first_id, const CountList& first, const std::string& second_id, const CountList& second) {
          const auto matrix = compare_pair(assess(first_id, GradeCounts(first)), assess(second_id, GradeCounts(second)));
          py::dict verdicts;
          for (const auto& [model, v] : matrix.verdicts) {
            verdicts[py::str(std::string(model_name(model)))] =
                py::make_tuple(std::string(outcome_name(v.outcome)), std::string(branch_name(v.branch)));
          }
          py::dict out;
          out["verdicts"] = verdicts;
          out["gpa_vs_fuzzy"] = matrix.gpa_vs_fuzzy;
          out["fuzzy_internal"] = matrix.fuzzy_internal;
          return out;
        },
        py::arg("first_id"), py::arg("first"), py::arg("second_id"), py::arg("second"));
  m.def("rank",
        [](const std::map<std::string, CountList>& groups, const std::string& model) {
          const auto reports = assess_all(to_groups(groups));
          std::vector<std::pair<std::size_t, std::string>> out;
          for (const auto& e : rank(reports, parse_model(model))) out.emplace_back(e.rank, e.group_id);
          return out;
        },
        py::arg("groups"), py::arg("model"), "Returns (rank, group_id) pairs, best first.");

  m.def("composite_centroid",
        [](const FreqList& f, const std::string& model) {
          return point(composite_centroid(build_figure(FrequencyVector(f), parse_model(model))));
        },
        py::arg("frequencies"), py::arg("model"));
  m.def("integration_centroid",
        [](const FreqList& f, const std::string& model, int resolution) {
          const auto fig = build_figure(FrequencyVector(f), parse_model(model));
          ApproxPoint p;
          {
            py::gil_scoped_release release;
            p = integration_centroid(fig, resolution);
          }
          return py::make_tuple(p.x, p.y);
        },
        py::arg("frequencies"), py::arg("model"), py::arg("resolution") = 1000);
  m.def("verify_closed_form",
        [](const FreqList& f, const std::string& model) {
          const auto r = verify_closed_form(FrequencyVector(f), parse_model(model));
          py::list deviations;
          for (const auto& d : r.deviations) {
            py::dict dev;
            dev["coordinate"] = d.coordinate;
            dev["closed_form"] = d.closed_form;
            dev["geometric"] = d.geometric;
            dev["expected"] = d.expected;
            dev["note"] = d.note;
            deviations.append(dev);
          }
          py::dict out;
          out["closed_form"] = point(r.closed_form);
          out["geometric"] = point(r.geometric);
          out["x_equal"] = r.x_equal;
          out["y_equal"] = r.y_equal;
          out["y_ratio"] = r.y_ratio;
          out["deviations"] = deviations;
          return out;
        },
        py::arg("frequencies"), py::arg("model"));

  m.def("parse_counts",
        [](const std::string& text) {
          std::istringstream in(text);
          return counts_map(parse_counts(in));
        },
        py::arg("text"));
  m.def("parse_scores",
        [](const std::string& text, const std::string& boundaries) {
          std::istringstream in(text);
          GradeBoundaries bands;
          if (!boundaries.empty()) {
            std::istringstream b(boundaries);
            bands = GradeBoundaries::parse(b);
          }
          return counts_map(parse_scores(in, bands));
        },
        py::arg("text"), py::arg("boundaries") = "");
  m.def("render_report",
        [](const std::map<std::string, CountList>& groups, bool compare, const std::string& format) {
          const auto reports = assess_all(to_groups(groups));
          std::vector<AgreementMatrix> matrices;
          if (compare) {
            if (reports.size() != 2) throw InputError("compare needs exactly two groups");
            matrices.push_back(compare_pair(reports[0], reports[1]));
          }
          return render_report(reports, matrices, parse_format(format));
        },
        py::arg("groups"), py::arg("compare") = false, py::arg("format") = "text");
}
