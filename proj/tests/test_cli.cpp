#include "gmlab/cli/cache.hpp"
#include "gmlab/cli/cli.hpp"
#include "gmlab/cli/config.hpp"
#include "gmlab/cli/dataset.hpp"
#include "gmlab/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace gmlab;
using namespace gmlab::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("gmlab-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  TempDir(const TempDir&) = delete;
  auto operator=(const TempDir&) -> TempDir& = delete;
};

struct Outcome {
  int code;
  std::string out, err;
};

auto invoke(const std::vector<std::string>& args) -> Outcome {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

auto slurp(const fs::path& p) -> std::string {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("config defaults and file values") {
  unsetenv("GMLAB_CACHE_DIR");
  auto d = load_config(std::nullopt);
  CHECK(d.seed == 1);
  CHECK(d.jobs == 1);
  CHECK(d.cache_dir.empty());
  CHECK(d.emit == Emit::Markdown);
  CHECK(d.samples == 100);

  setenv("GMLAB_CACHE_DIR", "/tmp/from-env", 1);
  CHECK(load_config(std::nullopt).cache_dir == "/tmp/from-env");

  TempDir t;
  auto cfg = t.path / "gmlab.toml";
  write(cfg,
        "# comment\n[run]\nseed = 42\njobs = 2\nemit = \"json\"\ncache_dir = \"/tmp/from-file\"\n"
        "[vf]\nprimes = \"5..7\"\nsamples = 7\n[gm]\ntrials = 3\n");
  auto c = load_config(cfg);
  CHECK(c.seed == 42);
  CHECK(c.jobs == 2);
  CHECK(c.emit == Emit::Json);
  CHECK(c.cache_dir == "/tmp/from-file");
  CHECK(c.primes == "5..7");
  CHECK(c.samples == 7);
  CHECK(c.trials == 3);
  unsetenv("GMLAB_CACHE_DIR");

  write(cfg, "[run]\nemit = \"yaml\"\n");
  CHECK_THROWS_AS(load_config(cfg), ConfigError);
  write(cfg, "[run]\nseed = banana\n");
  CHECK_THROWS_AS(load_config(cfg), ConfigError);
  CHECK_THROWS_AS(load_config(t.path / "missing.toml"), ConfigError);
  CHECK(parse_emit("json") == Emit::Json);
  CHECK(parse_emit("markdown") == Emit::Markdown);
}

TEST_CASE("ring descriptions") {
  auto q = RingDesc::parse("Q");
  CHECK(q.kind == RingDesc::Kind::Q);
  auto f9 = RingDesc::parse("F9");
  CHECK(f9.kind == RingDesc::Kind::Fq);
  CHECK(f9.p == 3);
  CHECK(f9.k == 2);
  auto z = RingDesc::parse("Z/625");
  CHECK(z.kind == RingDesc::Kind::Zpk);
  CHECK(z.p == 5);
  CHECK(z.k == 4);
  for (const auto& d : {q, f9, z}) {
    auto back = RingDesc::from_json(d.to_json());
    CHECK(back.name() == d.name());
  }
  CHECK_THROWS_AS(RingDesc::parse("F6"), DatasetError);
  CHECK_THROWS_AS(RingDesc::parse("Z/12"), DatasetError);
  CHECK_THROWS_AS(RingDesc::parse("R"), DatasetError);
  CHECK(parse_elem(Rationals{}, "-3/4") == Rat(-3, 4));
  CHECK(parse_elem(FiniteField::get(7), "10") == FiniteField::get(7).from_int(3));
}

TEST_CASE("data sets survive a JSON round trip") {
  const auto& F = FiniteField::get(7);
  std::mt19937_64 rng(3);
  auto D = gm::random_gm_datum(F, 4, rng, true);
  auto d = RingDesc::parse("F7");
  auto j = gm_to_json(d, D);
  auto D2 = gm_from_json(F, j);
  CHECK(gm::same_gm(D, D2));
  auto L = gm::gm_to_lagrangian(F, D);
  auto L2 = lagrangian_from_json(F, lagrangian_to_json(d, L));
  CHECK(L2.A == L.A);
  CHECK(L2.V5 == L.V5);
  CHECK(L2.n == L.n);
  auto broken = j;
  broken["V5"] = report::json::array();
  CHECK_THROWS(gm_from_json(F, broken));
}

TEST_CASE("enumeration cache") {
  TempDir t;
  auto f = vf::PrimeFilter::parse("7");
  auto path = vf_cache_path(t.path, f);
  CHECK(path.filename().string().rfind("vf-", 0) == 0);
  CHECK(path.filename().string().find("-7-7.json") != std::string::npos);
  CHECK(vf_cache_path(t.path, vf::PrimeFilter::parse("11..")).filename().string().find("-11-inf.json") != std::string::npos);

  auto first = enumerate_cached(f, 1, t.path.string());
  CHECK_FALSE(first.from_cache);
  CHECK(fs::exists(path));
  auto second = enumerate_cached(f, 1, t.path.string());
  CHECK(second.from_cache);
  CHECK(second.e.raw_hits() == first.e.raw_hits());
  CHECK(second.e.hits_per_prime == first.e.hits_per_prime);
  CHECK(enumeration_to_json(second.e, f) == enumeration_to_json(first.e, f));
  CHECK_THROWS(enumeration_from_json(enumeration_to_json(first.e, f), vf::PrimeFilter::parse("5")));

  write(path, "{\"schema\": \"something else\"}");
  auto third = enumerate_cached(f, 1, t.path.string());
  CHECK_FALSE(third.from_cache);
  CHECK(third.e.raw_hits() == first.e.raw_hits());

  auto none = enumerate_cached(f, 1, "");
  CHECK_FALSE(none.from_cache);

  auto file = t.path / "sub" / "mine.json";
  CHECK_FALSE(enumerate_cached_file(f, 1, file).from_cache);
  CHECK(enumerate_cached_file(f, 1, file).from_cache);
  CHECK_FALSE(enumerate_cached_file(vf::PrimeFilter::parse("11"), 1, file).from_cache);
  auto o = invoke({"vf", "search", "--p", "7", "--cache", file.string()});
  CHECK(o.out.find("(from cache)") == std::string::npos);
  auto o2 = invoke({"vf", "search", "--p", "7", "--cache", file.string()});
  CHECK(o2.out.find("(from cache)") != std::string::npos);
}

TEST_CASE("reports") {
  report::Report r;
  r.command = "demo";
  CHECK_FALSE(r.passed());
  r.check("a", true, "derived");
  CHECK(r.passed());
  r.check("b", false, "property", "detail");
  CHECK_FALSE(r.passed());
  auto j = report::to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "command", "inputs", "verdict", "checks", "payload"});
  CHECK(j["schema"] == report::kSchema);
  CHECK(j["verdict"] == "FAIL");
  CHECK(report::to_markdown(r).find("verdict: FAIL") != std::string::npos);
  auto t = report::md_table({"x", "y"}, {{"1", "2"}});
  CHECK(t.find("| x | y |") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"bott", "cohomology", "--bundle", "omega2", "--twist=-3", "--p", "5"}).code == kExitPass);
  CHECK(invoke({"bott", "table", "--bundle", "omega2", "--twist", "-3", "--p", "5"}).code == kExitPass);
  CHECK(invoke({"vf", "search", "--p", "11..200"}).code == kExitPass);
  CHECK(invoke({"hodge", "diamond", "--variety", "Y", "--p", "7"}).code == kExitPass);
  CHECK(invoke({"lattice", "verify"}).code == kExitCheckFailed);
  CHECK(invoke({"ck", "verify", "--variety", "gm6"}).code == kExitPass);
  CHECK(invoke({"ck", "verify", "--variety", "gm6", "--perturb", "H^4*e2=5"}).code == kExitCheckFailed);
  CHECK(invoke({"vf", "nilpotent", "--p", "7"}).code == kExitPass);
  CHECK(invoke({"gm", "roundtrip", "--ring", "F5", "--n", "3", "--trials", "3"}).code == kExitPass);
  CHECK(invoke({"no-such-command"}).code == kExitUsage);
  CHECK(invoke({"bott", "cohomology", "--bundle", "omega9"}).code == kExitUsage);
  CHECK(invoke({"gm", "lift", "--p", "5", "--k", "40"}).code == kExitUsage);
  CHECK(invoke({"--emit", "xml", "lattice", "verify"}).code == kExitUsage);
  CHECK(invoke({"all", "--only", "99"}).code == kExitUsage);
}

TEST_CASE("JSON output is deterministic") {
  std::vector<std::string> args{"--emit", "json", "--seed", "5", "gm", "roundtrip", "--ring", "F7", "--n", "4", "--trials", "2"};
  auto a = invoke(args), b = invoke(args);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  auto j = report::json::parse(a.out);
  CHECK(j["schema"] == "gmlab/1");
  CHECK(j["command"] == "gm roundtrip");
  CHECK(j["verdict"] == "PASS");
}

TEST_CASE("config file drives the run") {
  TempDir t;
  auto cfg = t.path / "c.toml";
  write(cfg, "[run]\nemit = \"json\"\nseed = 9\n");
  auto o = invoke({"--config", cfg.string(), "lattice", "verify"});
  CHECK(o.code == kExitCheckFailed);
  auto j = report::json::parse(o.out);
  CHECK(j["verdict"] == "FAIL");
  auto md = invoke({"--config", cfg.string(), "--emit", "markdown", "lattice", "verify"});
  CHECK(md.out.find("verdict: FAIL") != std::string::npos);
}

TEST_CASE("convert round trip through files") {
  TempDir t;
  auto a = t.path / "a.json", b = t.path / "b.json", c = t.path / "c.json";
  CHECK(invoke({"gm", "convert", "--ring", "F7", "--n", "4", "--output", a.string()}).code == kExitPass);
  CHECK(invoke({"gm", "convert", "--input", a.string(), "--output", b.string()}).code == kExitPass);
  CHECK(invoke({"gm", "convert", "--input", b.string(), "--output", c.string()}).code == kExitPass);
  CHECK(slurp(a) == slurp(c));
  write(t.path / "bad.json", "{not json");
  CHECK(invoke({"gm", "convert", "--input", (t.path / "bad.json").string()}).code == kExitUsage);
  CHECK(invoke({"gm", "convert", "--input", (t.path / "missing.json").string()}).code == kExitUsage);
}
