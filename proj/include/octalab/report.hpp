#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace octalab {

struct CheckResult {
  std::string tag;     // stable machine tag, e.g. "family:p1"
  bool pass = false;
  std::string detail;  // summary on pass, witness on failure
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string tag, bool pass, std::string detail);
  bool all_pass() const;
  const CheckResult* find(std::string_view tag) const;  // first match or nullptr
};

// "[PASS] tag  detail" lines plus a closing summary.
std::string report_to_text(const Report& r);

// Byte-stable pretty JSON with keys in insertion order.
std::string report_to_json(const Report& r);

// {"all_pass": ..., "reports": [...]} over several reports, same schema.
std::string reports_to_json(const std::vector<Report>& reports);

}  // namespace octalab
