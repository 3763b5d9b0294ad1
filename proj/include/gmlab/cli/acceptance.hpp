#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace gmlab::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> failures;
  std::string summary;
  double seconds = 0;
};

struct AcceptanceOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::size_t roundtrip_trials = 200;
  std::size_t lift_trials = 50;
  std::size_t cert_samples = 100;
  std::set<int> only;  // empty: all twelve
};

auto criterion_titles() -> const std::vector<std::string>&;

auto run_acceptance(const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& on_result = {})
    -> std::vector<CriterionResult>;

auto result_line(const CriterionResult& r) -> std::string;

} // namespace gmlab::cli

#include "gmlab/ledger.hpp"

namespace gmlab::cli {

// Reference diamonds: Gr from its Hodge numbers, Y and X as printed.
auto reference_diamond(Variety v) -> HodgeDiamond;

} // namespace gmlab::cli
