#include "gmlab/report.hpp"

#include <sstream>

namespace gmlab::report {

void Report::check(std::string name, bool ok, std::string basis, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(basis), std::move(detail)});
}

auto Report::passed() const -> bool {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

auto to_json(const Report& r) -> json {
  json j;
  j["schema"] = kSchema;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["verdict"] = r.passed() ? "PASS" : "FAIL";
  json cs = json::array();
  for (const auto& c : r.checks)
    cs.push_back({{"name", c.name}, {"ok", c.ok}, {"basis", c.basis}, {"detail", c.detail}});
  j["checks"] = cs;
  j["payload"] = r.payload;
  return j;
}

auto md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) -> std::string {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
  };
  line(header);
  os << "|";
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) line(r);
  return os.str();
}

auto to_markdown(const Report& r) -> std::string {
  std::ostringstream os;
  os << "## gmlab " << r.command << "\n\n";
  if (!r.body.empty()) os << r.body << (r.body.back() == '\n' ? "" : "\n") << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.checks) rows.push_back({c.ok ? "ok" : "FAIL", c.name, c.basis, c.detail});
  if (!rows.empty()) os << md_table({"status", "check", "basis", "detail"}, rows) << "\n";
  os << "verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

} // namespace gmlab::report
