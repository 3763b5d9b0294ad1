#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace gmlab::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gmlab/1";

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string basis;  // table, derived, exhaustive, axiom, regression, property
  std::string detail;
};

struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<CheckResult> checks;
  json payload = json::object();
  std::string body;  // markdown shown above the check list

  void check(std::string name, bool ok, std::string basis, std::string detail = "");
  [[nodiscard]] auto passed() const -> bool;
};

auto to_json(const Report& r) -> json;
auto to_markdown(const Report& r) -> std::string;

auto md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) -> std::string;

} // namespace gmlab::report
