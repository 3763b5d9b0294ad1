#include "gmlab/cli/cache.hpp"
#include "gmlab/report.hpp"

#include <fstream>
#include <sstream>

namespace gmlab::cli {

using report::json;

auto vf_cache_path(const std::filesystem::path& dir, const vf::PrimeFilter& f) -> std::filesystem::path {
  return dir / ("vf-" + vf::build_E().hash() + "-" + std::to_string(f.lo) + "-" + (f.hi == vf::PrimeFilter::kNoBound ? std::string("inf") : std::to_string(f.hi)) + ".json");
}

auto enumeration_to_json(const vf::Enumeration& e, const vf::PrimeFilter& f) -> std::string {
  json j;
  j["schema"] = report::kSchema;
  j["E"] = vf::build_E().hash();
  j["filter"] = f.to_string();
  j["subsets"] = e.subsets;
  j["nonsingular"] = e.nonsingular;
  json hp = json::object();
  for (const auto& [p, c] : e.hits_per_prime) hp[std::to_string(p)] = c;
  j["hits_per_prime"] = hp;
  json hits = json::array();
  for (const auto& h : e.hits) hits.push_back({h.p, h.a, h.N, h.det});
  j["hits"] = hits;
  json vs = json::array();
  for (const auto& v : e.violations) vs.push_back({v.p, v.N, v.rank});
  j["violations"] = vs;
  return j.dump();
}

auto enumeration_from_json(const std::string& s, const vf::PrimeFilter& f) -> vf::Enumeration {
  auto j = json::parse(s);
  if (j.at("schema") != report::kSchema || j.at("E") != vf::build_E().hash())
    throw std::runtime_error("cache entry does not match this E matrix");
  if (j.at("filter") != f.to_string()) throw std::runtime_error("cache entry was written for another prime filter");
  vf::Enumeration e;
  e.subsets = j.at("subsets").get<std::uint64_t>();
  e.nonsingular = j.at("nonsingular").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("hits_per_prime").items())
    e.hits_per_prime[static_cast<std::uint32_t>(std::stoul(k))] = v.get<std::uint64_t>();
  for (const auto& h : j.at("hits")) {
    vf::SearchHit x;
    x.p = h.at(0).get<std::uint32_t>();
    x.a = h.at(1).get<vf::AVec>();
    x.N = h.at(2).get<std::array<std::uint8_t, 5>>();
    x.det = h.at(3).get<long>();
    e.hits.push_back(x);
  }
  for (const auto& v : j.at("violations")) {
    vf::LemmaViolation x;
    x.p = v.at(0).get<std::uint32_t>();
    x.N = v.at(1).get<std::array<std::uint8_t, 5>>();
    x.rank = v.at(2).get<std::size_t>();
    e.violations.push_back(x);
  }
  return e;
}

auto enumerate_cached_file(const vf::PrimeFilter& f, unsigned jobs, const std::filesystem::path& path)
    -> CachedEnumeration {
  if (std::ifstream in(path); in) {
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return {enumeration_from_json(ss.str(), f), true};
    } catch (const std::exception&) {
      // stale or damaged entry: recompute below
    }
  }
  CachedEnumeration r{vf::enumerate_hits(f, jobs), false};
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  if (std::ofstream out(tmp); out) {
    out << enumeration_to_json(r.e, f);
    out.close();
    std::filesystem::rename(tmp, path, ec);
  }
  return r;
}

auto enumerate_cached(const vf::PrimeFilter& f, unsigned jobs, const std::string& cache_dir) -> CachedEnumeration {
  if (cache_dir.empty()) return {vf::enumerate_hits(f, jobs), false};
  return enumerate_cached_file(f, jobs, vf_cache_path(cache_dir, f));
}

} // namespace gmlab::cli
