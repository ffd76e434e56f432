#include "octalab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace octalab {

void Report::add(std::string tag, bool pass, std::string detail) {
  checks.push_back({std::move(tag), pass, std::move(detail)});
}

bool Report::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* Report::find(std::string_view tag) const {
  for (const CheckResult& c : checks)
    if (c.tag == tag) return &c;
  return nullptr;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.title << " ==\n";
  size_t failed = 0;
  for (const CheckResult& c : r.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.tag;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
    if (!c.pass) ++failed;
  }
  os << (failed == 0 ? "all " : "") << r.checks.size() - failed << " of " << r.checks.size()
     << " checks passed\n";
  return os.str();
}

namespace {

nlohmann::ordered_json report_object(const Report& r) {
  nlohmann::ordered_json j;
  j["title"] = r.title;
  j["all_pass"] = r.all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks)
    j["checks"].push_back({{"tag", c.tag}, {"pass", c.pass}, {"detail", c.detail}});
  return j;
}

}  // namespace

std::string report_to_json(const Report& r) { return report_object(r).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json j;
  j["all_pass"] = true;
  j["reports"] = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    if (!r.all_pass()) j["all_pass"] = false;
    j["reports"].push_back(report_object(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace octalab
