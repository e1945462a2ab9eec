#include "valchain/report.hpp"

namespace valchain {

std::vector<std::string> report_lines(const ValidationReport& report) {
  std::vector<std::string> out{std::string(report.passed() ? "pass" : "fail") + " (inspected depth " +
                               std::to_string(report.inspected_depth) + ")"};
  for (const auto& f : report.findings) out.push_back("  " + f.axiom + " violated at " + f.location + ": " + f.detail);
  return out;
}

Json report_envelope(const std::string& command, Json result) {
  return Json{{"schema", "valchain-report"}, {"version", kReportVersion}, {"command", command}, {"result", std::move(result)}};
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace valchain
