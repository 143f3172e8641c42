// cogfam: assess, compare, rank and verify cohorts from the command line.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include "cogfam/comparison.hpp"
#include "cogfam/io.hpp"
#include "cogfam/oracle.hpp"
#include "cogfam/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace cogfam;

constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

struct InputOptions {
  std::vector<std::string> files;
  bool counts = false;
  bool scores = false;
  std::string boundaries;
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("files", opt.files, "Input CSV files ('-' or none reads stdin)");
  auto* counts = cmd->add_flag("--counts", opt.counts, "Rows are group_id,nF,nD,nC,nB,nA (default)");
  auto* scores = cmd->add_flag("--scores", opt.scores, "Rows are group_id,score with scores 0-100");
  counts->excludes(scores);
  cmd->add_option("--boundaries", opt.boundaries, "Grade band file (label,lo,hi per line)");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

GroupCounts read_one(std::istream& in, const InputOptions& opt, const GradeBoundaries& bands) {
  return opt.scores ? parse_scores(in, bands) : parse_counts(in);
}

GroupCounts load_groups(const InputOptions& opt) {
  if (!opt.boundaries.empty() && !std::ifstream(opt.boundaries)) {
    std::cerr << "warning: boundary file '" << opt.boundaries << "' not found, using default bands\n";
  }
  const GradeBoundaries bands = GradeBoundaries::load_or_default(opt.boundaries);
  if (opt.files.empty()) return read_one(std::cin, opt, bands);

  GroupCounts all;
  for (const auto& path : opt.files) {
    GroupCounts part;
    try {
      if (path == "-") {
        part = read_one(std::cin, opt, bands);
      } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open file");
        part = read_one(in, opt, bands);
      }
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
    for (auto& [id, counts] : part) {
      if (!all.emplace(id, counts).second) throw InputError(path + ": group '" + id + "' already defined");
    }
  }
  return all;
}

int cmd_assess(const InputOptions& opt) {
  const auto reports = assess_all(load_groups(opt));
  std::cout << render_report(reports, {}, parse_format(opt.format));
  return 0;
}

int cmd_compare(const InputOptions& opt) {
  const auto groups = load_groups(opt);
  if (groups.size() != 2) {
    throw InputError("compare needs exactly two groups, got " + std::to_string(groups.size()));
  }
  const auto reports = assess_all(groups);
  const std::vector<AgreementMatrix> matrices{compare_pair(reports[0], reports[1])};
  std::cout << render_report(reports, matrices, parse_format(opt.format));
  return 0;
}

int cmd_rank(const InputOptions& opt, const std::string& model_name_arg) {
  const Model model = parse_model(model_name_arg);
  const auto reports = assess_all(load_groups(opt));
  const auto ranking = rank(reports, model);
  std::cout << render_ranking(reports, ranking, model, parse_format(opt.format));
  return 0;
}

struct VerifyOptions {
  std::string model = "all";
  std::uint64_t seed = 1;
  int samples = 100;
  int resolution = 1000;
};

int cmd_verify(const InputOptions& opt, const VerifyOptions& vopt) {
  std::vector<Model> models;
  if (vopt.model == "all") {
    models.assign(kFuzzyModels.begin(), kFuzzyModels.end());
  } else {
    models.push_back(parse_model(vopt.model));
    if (models.front() == Model::GPA) throw InputError("verify needs a fuzzy model (RFAM, GRFAM, TFAM, TpFAM)");
  }
  if (vopt.resolution < 100) throw InputError("--resolution must be at least 100");

  std::vector<std::pair<std::string, FrequencyVector>> vectors;
  if (!opt.files.empty()) {
    for (const auto& [id, counts] : load_groups(opt)) vectors.emplace_back(id, frequencies_from_counts(counts));
  } else {
    std::mt19937_64 rng(vopt.seed);
    std::uniform_int_distribution<std::uint64_t> count(0, 50);
    while (static_cast<int>(vectors.size()) < vopt.samples) {
      GradeCounts::Array c{count(rng), count(rng), count(rng), count(rng), count(rng)};
      if (c == GradeCounts::Array{0, 0, 0, 0, 0}) continue;
      vectors.emplace_back("random" + std::to_string(vectors.size()), frequencies_from_counts(GradeCounts(c)));
    }
  }

  using Json = nlohmann::ordered_json;
  const bool json = parse_format(opt.format) == ReportFormat::Json;
  Json rows = Json::array();
  std::ostringstream text;
  std::size_t unexpected = 0, expected = 0;
  double worst_integration = 0;

  for (const auto& [id, freq] : vectors) {
    for (Model m : models) {
      const auto report = verify_closed_form(freq, m);
      const auto fig = build_figure(freq, m);
      const auto approx = integration_centroid(fig, vopt.resolution);
      const double err = std::max(std::abs(approx.x - to_double(report.geometric.x)),
                                  std::abs(approx.y - to_double(report.geometric.y)));
      worst_integration = std::max(worst_integration, err);

      Json deviations = Json::array();
      for (const auto& d : report.deviations) {
        (d.expected ? expected : unexpected) += 1;
        deviations.push_back(Json{{"coordinate", d.coordinate},
                                  {"closed_form", to_string(d.closed_form)},
                                  {"geometric", to_string(d.geometric)},
                                  {"expected", d.expected},
                                  {"note", d.note}});
      }
      rows.push_back(Json{{"id", id},
                          {"model", std::string(model_name(m))},
                          {"closed_form", {to_string(report.closed_form.x), to_string(report.closed_form.y)}},
                          {"geometric", {to_string(report.geometric.x), to_string(report.geometric.y)}},
                          {"x_equal", report.x_equal},
                          {"y_equal", report.y_equal},
                          {"y_ratio", to_string(report.y_ratio)},
                          {"integration_error", err},
                          {"deviations", deviations}});

      text << id << ' ' << model_name(m) << ": x " << (report.x_equal ? "equal" : "DIFFERS") << ", y ";
      if (report.y_equal) {
        text << "equal";
      } else {
        text << "closed " << to_string(report.closed_form.y) << " vs geometric " << to_string(report.geometric.y)
             << " (ratio " << to_string(report.y_ratio) << ", "
             << (report.has_unexpected() ? "UNEXPECTED" : "expected") << ")";
      }
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.2e", err);
      text << ", integration error " << buf << "\n";
    }
  }

  if (json) {
    std::cout << Json{{"resolution", vopt.resolution},
                      {"checks", rows},
                      {"expected_deviations", expected},
                      {"unexpected_deviations", unexpected},
                      {"max_integration_error", worst_integration}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << text.str() << rows.size() << " checks, " << expected << " expected deviations, " << unexpected
              << " unexpected deviations\n";
  }
  return unexpected == 0 ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohort assessment with the GPA index and center-of-gravity fuzzy models"};
  app.require_subcommand(1);

  InputOptions opt;
  std::string rank_model = "RFAM";
  VerifyOptions vopt;

  auto* assess_cmd = app.add_subcommand("assess", "Assess one or more groups under all models");
  add_input_options(assess_cmd, opt);
  auto* compare_cmd = app.add_subcommand("compare", "Compare exactly two groups under all models");
  add_input_options(compare_cmd, opt);
  auto* rank_cmd = app.add_subcommand("rank", "Rank groups under one model");
  add_input_options(rank_cmd, opt);
  rank_cmd->add_option("--model", rank_model, "GPA, RFAM, GRFAM, TFAM or TpFAM")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "Check closed-form centroids against the shape geometry");
  add_input_options(verify_cmd, opt);
  verify_cmd->add_option("--model", vopt.model, "RFAM, GRFAM, TFAM, TpFAM or all")->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed, "Seed for random vectors")->capture_default_str();
  verify_cmd->add_option("--samples", vopt.samples, "Random vectors when no input is given")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--resolution", vopt.resolution, "Integration grid per shape")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (assess_cmd->parsed()) return cmd_assess(opt);
    if (compare_cmd->parsed()) return cmd_compare(opt);
    if (rank_cmd->parsed()) return cmd_rank(opt, rank_model);
    if (verify_cmd->parsed()) return cmd_verify(opt, vopt);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
