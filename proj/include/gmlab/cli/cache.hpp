#pragma once

#include "gmlab/vfsearch.hpp"

#include <filesystem>
#include <string>

namespace gmlab::cli {

// vf-<E hash>-<filter>.json inside the cache directory.
auto vf_cache_path(const std::filesystem::path& dir, const vf::PrimeFilter& f) -> std::filesystem::path;

auto enumeration_to_json(const vf::Enumeration& e, const vf::PrimeFilter& f) -> std::string;
// Throws unless the entry matches the current E matrix and the filter.
auto enumeration_from_json(const std::string& s, const vf::PrimeFilter& f) -> vf::Enumeration;

struct CachedEnumeration {
  vf::Enumeration e;
  bool from_cache = false;
};

// Reuses a cached enumeration when the directory is set and the entry
// matches the current E matrix and filter; writes one otherwise.
auto enumerate_cached(const vf::PrimeFilter& f, unsigned jobs, const std::string& cache_dir) -> CachedEnumeration;
// Same with an explicit cache file.
auto enumerate_cached_file(const vf::PrimeFilter& f, unsigned jobs, const std::filesystem::path& path)
    -> CachedEnumeration;

} // namespace gmlab::cli
