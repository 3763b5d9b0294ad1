#include "gmlab/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gmlab::cli {

namespace {

auto unquote(std::string s) -> std::string {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

template <class T>
void read(const boost::property_tree::ptree& pt, const std::string& key, T& out) {
  auto v = pt.get_optional<std::string>(key);
  if (!v) return;
  std::string s = unquote(*v);
  try {
    if constexpr (std::is_same_v<T, std::string>) out = s;
    else out = static_cast<T>(std::stoull(s));
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + s + "'");
  }
}

} // namespace

auto parse_emit(const std::string& s) -> Emit {
  if (s == "json") return Emit::Json;
  if (s == "markdown" || s == "md") return Emit::Markdown;
  throw ConfigError("emit must be json or markdown, got '" + s + "'");
}

auto load_config(const std::optional<std::filesystem::path>& file) -> RunConfig {
  RunConfig c;
  if (const char* env = std::getenv("GMLAB_CACHE_DIR"); env != nullptr && *env != '\0') c.cache_dir = env;
  if (!file) return c;
  std::ifstream in(*file);
  if (!in) throw ConfigError("cannot read config file " + file->string());
  // TOML comments start with '#'; the INI reader only knows ';'.
  std::stringstream clean;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    clean << line << "\n";
  }
  boost::property_tree::ptree pt;
  try {
    boost::property_tree::ini_parser::read_ini(clean, pt);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  read(pt, "run.seed", c.seed);
  read(pt, "run.jobs", c.jobs);
  read(pt, "run.cache_dir", c.cache_dir);
  std::string emit;
  read(pt, "run.emit", emit);
  if (!emit.empty()) c.emit = parse_emit(emit);
  read(pt, "vf.primes", c.primes);
  read(pt, "vf.samples", c.samples);
  read(pt, "gm.trials", c.trials);
  return c;
}

} // namespace gmlab::cli
