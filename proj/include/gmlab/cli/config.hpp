#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace gmlab::cli {

enum class Emit { Markdown, Json };

struct RunConfig {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string cache_dir;  // empty: no cache
  Emit emit = Emit::Markdown;
  std::string primes;     // vf prime filter, "" for the default range
  std::size_t samples = 100;
  std::size_t trials = 0;  // 0: per-command default
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults, then GMLAB_CACHE_DIR, then the config file when given.
// Keys (all optional):
//   [run] seed, jobs, emit (json|markdown), cache_dir
//   [vf] primes, samples
//   [gm] trials
auto load_config(const std::optional<std::filesystem::path>& file) -> RunConfig;
auto parse_emit(const std::string& s) -> Emit;

} // namespace gmlab::cli
