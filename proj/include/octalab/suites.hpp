#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octalab/gewirtz.hpp"
#include "octalab/octagon.hpp"
#include "octalab/report.hpp"
#include "octalab/spread_family.hpp"

// Verification suites over a shared, lazily built workbench. Each suite
// returns a Report whose check tags are stable identifiers, so downstream
// tooling can key on them.

namespace octalab {

// Holds the expensive shared objects (groups, octagon) and builds each at
// most once. With a cache directory set, enumerated groups round-trip
// through disk keyed by a content hash of their generator lists; an
// unreadable or mismatched cache file is rebuilt with a warning on stderr.
class Workbench {
 public:
  explicit Workbench(std::string cache_dir = {},
                     uint64_t budget = PermGroup::kDefaultBudget, int jobs = 1);

  const ProjectivePlane& plane() const { return plane_; }
  const PermGroup& l34();
  const PermGroup& g();
  const InvolutionOctagon& octagon();
  // Conjugation action of g() on the octagon points (degree 315).
  const PermGroup& induced();

  int jobs() const { return jobs_; }
  uint64_t budget() const { return budget_; }

 private:
  PermGroup load_or_build(const std::string& name, std::shared_ptr<const Domain> domain,
                          std::vector<Perm> gens);

  const ProjectivePlane& plane_;
  std::string cache_dir_;
  uint64_t budget_;
  int jobs_;
  std::optional<PermGroup> l34_, g_, induced_;
  std::optional<InvolutionOctagon> octagon_;
};

Report group_suite(Workbench& w);
Report octagon_suite(Workbench& w);

// The computed point-stabilizer diagram plus its match against the embedded
// reference picture, for DOT/JSON export alongside the report.
struct SuborbitArtifacts {
  SuborbitDiagram diagram;
  DiagramMatch match;
};

SuborbitArtifacts suborbit_artifacts(Workbench& w);
Report suborbit_suite(const SuborbitArtifacts& art);
Report suborbit_suite(Workbench& w);
Report quads_suite(Workbench& w);

// instance: "o2", "product", or "all" (one report per instance run).
std::vector<Report> family_suites(Workbench& w, const std::string& instance);

Report aut_suite(Workbench& w, uint64_t seed);
GewirtzArtifacts gewirtz_artifacts(Workbench& w);
Report gewirtz_report(Workbench& w);

// Every suite in fixed order: group, octagon, suborbits, quads, both family
// instances, aut, gewirtz.
std::vector<Report> all_suites(Workbench& w, uint64_t seed);

}  // namespace octalab
