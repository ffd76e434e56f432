#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "octalab/parallel.hpp"
#include "octalab/suites.hpp"

using namespace octalab;

namespace {

struct RunConfig {
  std::string format = "text";
  std::string cache_dir;
  uint64_t budget = PermGroup::kDefaultBudget;
  int jobs = 1;
  uint64_t seed = 12345;
  std::string instance = "all";
  std::string surrogate_out;
};

void print_text(const std::vector<Report>& reports) {
  for (size_t i = 0; i < reports.size(); ++i) {
    if (i) std::cout << '\n';
    std::cout << report_to_text(reports[i]);
  }
}

std::vector<std::string> orbit_names(const SuborbitArtifacts& art) {
  return art.match.ok ? art.match.orbit_names : std::vector<std::string>{};
}

void print_gewirtz_table(const GewirtzArtifacts& art) {
  if (art.table.empty()) return;
  std::cout << "\nfixed-set intersection by suborbit:\n";
  std::cout << "  " << std::left << std::setw(6) << "orbit" << std::right << std::setw(5) << "size"
            << std::setw(14) << "intersection" << '\n';
  for (const GewirtzTableRow& r : art.table)
    std::cout << "  " << std::left << std::setw(6) << r.orbit << std::right << std::setw(5) << r.size
              << std::setw(14) << r.intersection << '\n';
}

nlohmann::ordered_json gewirtz_table_json(const GewirtzArtifacts& art) {
  auto rows = nlohmann::ordered_json::array();
  for (const GewirtzTableRow& r : art.table)
    rows.push_back({{"orbit", r.orbit}, {"size", r.size}, {"intersection", r.intersection}});
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"verification suites for the near octagon on the 315 central involutions "
               "of the PG(2,4) collineation group"};
  app.require_subcommand(1);
  app.add_option("-f,--format", cfg.format, "output format: text, json, or dot (suborbits only)")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "directory for cached group enumerations (empty = no cache)");
  app.add_option("-j,--jobs", cfg.jobs, "worker threads; 0 means all hardware threads")
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "element budget for group enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the relabeling invariance check")
      ->capture_default_str();

  CLI::App* cmd_group = app.add_subcommand("group", "collineation group orders and classes")->fallthrough();
  CLI::App* cmd_octagon =
      app.add_subcommand("octagon", "build the near octagon and certify its shape")->fallthrough();
  CLI::App* cmd_suborbits =
      app.add_subcommand("suborbits", "point stabilizer orbit diagram with reference match")->fallthrough();
  CLI::App* cmd_quads = app.add_subcommand("quads", "quads, spread, and the quotient hexagon")->fallthrough();
  CLI::App* cmd_family = app.add_subcommand("family", "spread family axioms on an instance")->fallthrough();
  cmd_family->add_option("--instance", cfg.instance, "o2, product, or all")
      ->check(CLI::IsMember({"o2", "product", "all"}))
      ->capture_default_str();
  CLI::App* cmd_aut = app.add_subcommand("aut", "automorphism group of the collinearity graph")->fallthrough();
  CLI::App* cmd_gewirtz =
      app.add_subcommand("gewirtz", "hyperoval graph, special 8-sets, rebuilt octagon")->fallthrough();
  cmd_gewirtz->add_option("--surrogate-out", cfg.surrogate_out,
                          "write the distance-two surrogate graph to this file in graph text format");
  app.add_subcommand("all", "every suite in order")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (cfg.jobs <= 0) cfg.jobs = hardware_jobs();
  default_jobs() = cfg.jobs;

  if (cfg.format == "dot" && !cmd_suborbits->parsed()) {
    std::cerr << "octalab: dot output is only available for the suborbits command\n";
    return 2;
  }

  try {
    Workbench w(cfg.cache_dir, cfg.budget, cfg.jobs);
    std::vector<Report> reports;
    std::optional<SuborbitArtifacts> art;
    std::optional<GewirtzArtifacts> gart;

    if (cmd_group->parsed()) {
      reports.push_back(group_suite(w));
    } else if (cmd_octagon->parsed()) {
      reports.push_back(octagon_suite(w));
    } else if (cmd_suborbits->parsed()) {
      art = suborbit_artifacts(w);
      reports.push_back(suborbit_suite(*art));
    } else if (cmd_quads->parsed()) {
      reports.push_back(quads_suite(w));
    } else if (cmd_family->parsed()) {
      reports = family_suites(w, cfg.instance);
    } else if (cmd_aut->parsed()) {
      reports.push_back(aut_suite(w, cfg.seed));
    } else if (cmd_gewirtz->parsed()) {
      gart = gewirtz_artifacts(w);
      reports.push_back(gart->report);
    } else {
      reports = all_suites(w, cfg.seed);
    }

    if (!cfg.surrogate_out.empty()) {
      if (gart && gart->surrogate) {
        std::ofstream out(cfg.surrogate_out);
        if (!out) throw std::runtime_error("cannot open " + cfg.surrogate_out + " for writing");
        out << graph_to_text(*gart->surrogate);
      } else {
        std::cerr << "octalab: surrogate graph was not built; nothing written to "
                  << cfg.surrogate_out << '\n';
      }
    }

    if (cfg.format == "dot") {
      std::cout << suborbit_diagram_to_dot(art->diagram, orbit_names(*art));
    } else if (cfg.format == "json") {
      if (art || gart) {
        auto j = nlohmann::ordered_json::parse(reports_to_json(reports));
        if (art)
          j["diagram"] =
              nlohmann::ordered_json::parse(suborbit_diagram_to_json(art->diagram, orbit_names(*art)));
        if (gart) j["table"] = gewirtz_table_json(*gart);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << reports_to_json(reports);
      }
    } else {
      print_text(reports);
      if (art) {
        std::cout << "\norbits:\n";
        for (const std::string& row : art->match.node_rows) std::cout << "  " << row << '\n';
        std::cout << "line classes:\n";
        for (const std::string& row : art->match.edge_rows) std::cout << "  " << row << '\n';
      }
      if (gart) print_gewirtz_table(*gart);
    }

    for (const Report& r : reports)
      if (!r.all_pass()) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "octalab: error: " << e.what() << '\n';
    return 2;
  }
}
