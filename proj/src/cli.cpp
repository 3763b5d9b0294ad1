#include "gmlab/cli/cli.hpp"

#include "gmlab/bott.hpp"
#include "gmlab/ckmotives.hpp"
#include "gmlab/cli/acceptance.hpp"
#include "gmlab/cli/cache.hpp"
#include "gmlab/cli/config.hpp"
#include "gmlab/cli/dataset.hpp"
#include "gmlab/lattice.hpp"
#include "gmlab/ledger.hpp"
#include "gmlab/report.hpp"
#include "gmlab/vfsearch.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace gmlab::cli {

namespace {

using report::json;
using report::md_table;
using report::Report;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string config;
  std::string emit;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::string cache_dir;
  // per-command
  std::string bundle = "omega2";
  long twist = 0;
  std::uint32_t p = 5;
  std::string wlist = "auto";
  std::string variety;
  std::string primes;
  std::string cache_file;
  std::string family = "all";
  std::size_t samples = 0;
  std::string ring = "F5";
  int n = 0;
  std::size_t trials = 0;
  std::string input;
  std::string output;
  unsigned max_degree = 3;
  std::uint64_t budget = 0;
  unsigned k = 4;
  std::vector<std::string> perturb;
  std::vector<int> only;
};

auto str(const Int& x) -> std::string { return gmlab::to_string(x); }

auto read_json_file(const std::string& path) -> json {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---- bott

auto wlisting(const std::string& s) -> WListing {
  if (s == "auto") return WListing::Auto;
  if (s == "always") return WListing::Always;
  if (s == "contributing") return WListing::ContributingOnly;
  throw UsageError("--wlist must be auto, always or contributing");
}

auto outcome_string(const BottOutcome& o) -> std::string {
  switch (o.kind) {
    case BottOutcome::Kind::AllZero: return "0 (" + o.rule + ")";
    case BottOutcome::Kind::Single: return "h^" + std::to_string(o.degree) + " = " + str(o.dim) + " (" + o.rule + ")";
    case BottOutcome::Kind::Undecidable: break;
  }
  return "undecidable (" + o.rule + ")";
}

void add_cohomology(Report& r, const CohomTable& t) {
  std::vector<std::string> head, row;
  json h = json::array();
  for (int j = 0; j <= 6; ++j) {
    head.push_back("h^" + std::to_string(j));
    row.push_back(t.h[j].to_string());
    h.push_back(t.h[j].to_string());
  }
  head.push_back("chi");
  row.push_back(str(t.chi));
  r.body += md_table(head, {row}) + "\nmethod: " + t.method + "\n";
  r.payload["cohomology"] = {{"h", h}, {"chi", str(t.chi)}, {"method", t.method}};
  r.check("every weight decided", t.fully_exact(), "derived");
  if (t.fully_exact()) {
    Int alt = 0;
    for (int j = 0; j <= 6; ++j) alt += (j % 2 == 0 ? 1 : -1) * *t.exact(j);
    r.check("alternating sum equals chi", alt == t.chi, "property", str(alt) + " vs " + str(t.chi));
  }
}

auto cmd_bott_table(const Flags& f) -> Report {
  Report r;
  r.command = "bott table";
  auto b = BundleSpec::parse(f.bundle, f.twist);
  r.inputs = {{"bundle", b.name()}, {"p", f.p}, {"wlist", f.wlist}};
  auto rows = weight_table(b, f.p, wlisting(f.wlist));
  std::vector<std::vector<std::string>> md;
  json jr = json::array();
  bool consistent = true;
  for (const auto& row : rows) {
    std::string w = row.w ? row.w->to_string() : "";
    md.push_back({vec_string(row.lambda), vec_string(row.lambda_rho), w, vec_string(row.v), vec_string(row.w_dot),
                  std::to_string(row.multiplicity), outcome_string(row.outcome)});
    jr.push_back({{"lambda", vec_string(row.lambda)}, {"lambda_rho", vec_string(row.lambda_rho)}, {"w", w},
                  {"w_lambda_rho", vec_string(row.v)}, {"w_dot_lambda", vec_string(row.w_dot)},
                  {"multiplicity", row.multiplicity}, {"outcome", outcome_string(row.outcome)},
                  {"basis", row.outcome.rule}});
    if (vec_sub(row.v, kRho) != row.w_dot) consistent = false;
  }
  r.body = "weights of " + b.name() + " at p = " + std::to_string(f.p) + "\n\n" +
           md_table({"lambda", "lambda+rho", "w", "w(lambda+rho)", "w.lambda", "mult", "outcome"}, md) + "\n";
  r.payload["rows"] = jr;
  r.check("w.lambda = w(lambda+rho) - rho on every row", consistent, "property");
  add_cohomology(r, bundle_cohomology(b, f.p));
  return r;
}

auto cmd_bott_cohomology(const Flags& f) -> Report {
  Report r;
  r.command = "bott cohomology";
  auto b = BundleSpec::parse(f.bundle, f.twist);
  r.inputs = {{"bundle", b.name()}, {"p", f.p}};
  r.body = "H^*(Gr(2,5), " + b.name() + ") at p = " + std::to_string(f.p) + "\n\n";
  add_cohomology(r, bundle_cohomology(b, f.p));
  return r;
}

// ---- hodge

auto diamond_json(const HodgeDiamond& d) -> json {
  json h = json::array();
  for (const auto& row : d.h) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(str(x));
    h.push_back(jr);
  }
  return h;
}

auto cmd_hodge_diamond(const Flags& f) -> Report {
  Report r;
  r.command = "hodge diamond";
  auto v = parse_variety(f.variety.empty() ? "X" : f.variety);
  r.inputs = {{"variety", variety_name(v)}, {"p", f.p}};
  auto d = derive_diamond(v, f.p);
  r.body = "Hodge diamond of " + variety_name(v) + " at p = " + std::to_string(f.p) + "\n\n```\n" + d.diamond.layout() + "```\n";
  r.payload["diamond"] = diamond_json(d.diamond);
  json tr = json::array();
  for (const auto& t : d.trace)
    tr.push_back({{"rule", t.rule}, {"label", t.label}, {"sheaf", t.sheaf.name()}, {"degree", t.degree},
                  {"value", t.value.to_string()}});
  r.payload["trace"] = tr;
  r.check("Serre symmetry", d.diamond.serre_symmetric(), "property");
  r.check("Hodge symmetry", d.diamond.hodge_symmetric(), "property");
  r.check("equals the reference diamond", d.diamond == reference_diamond(v), "table");
  r.check("topological Euler characteristic", true, "derived", str(d.diamond.topological_euler()));
  return r;
}

auto cmd_hodge_tangent(const Flags& f) -> Report {
  Report r;
  r.command = "hodge tangent";
  r.inputs = {{"p", f.p}};
  auto t = tangent_report(f.p);
  std::vector<std::vector<std::string>> rows;
  json jy = json::array(), jx = json::array();
  for (int j = 0; j < 6; ++j) jy.push_back(str(t.h_TY[j]));
  for (int j = 0; j < 7; ++j) jx.push_back(str(t.h_TX[j]));
  std::vector<std::string> ry{"T_Y"}, rx{"T_X"};
  for (int j = 0; j <= 6; ++j) {
    ry.push_back(j < 6 ? str(t.h_TY[j]) : "");
    rx.push_back(str(t.h_TX[j]));
  }
  r.body = md_table({"sheaf", "h^0", "h^1", "h^2", "h^3", "h^4", "h^5", "h^6"}, {ry, rx}) +
           "\nh^0(O_Y(1)) = " + str(t.h0_OY1) + ", h^0(O_Y(2)) = " + str(t.h0_OY2) + "\n";
  for (const auto& a : t.axioms) r.body += "axiom: " + a + "\n";
  r.payload = {{"h_TY", jy}, {"h_TX", jx}, {"h0_OY1", str(t.h0_OY1)}, {"h0_OY2", str(t.h0_OY2)}, {"axioms", t.axioms}};
  r.check("h^0(O_Y(1)) = 10", t.h0_OY1 == 10, "table", str(t.h0_OY1));
  r.check("h^0(O_Y(2)) = 49", t.h0_OY2 == 49, "table", str(t.h0_OY2));
  r.check("h^1(T_Y) = 25", t.h_TY[1] == 25, "table", str(t.h_TY[1]));
  r.check("h^1(T_X) = 25", t.h_TX[1] == 25, "table", str(t.h_TX[1]));
  return r;
}

// ---- vf

auto cmd_vf_search(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "vf search";
  auto filter = vf::PrimeFilter::parse(f.primes.empty() ? cfg.primes : f.primes);
  r.inputs = {{"primes", filter.to_string()}, {"E", vf::build_E().hash()}};
  auto run = f.cache_file.empty() ? enumerate_cached(filter, cfg.jobs, cfg.cache_dir)
                                  : enumerate_cached_file(filter, cfg.jobs, f.cache_file);
  const auto& e = run.e;
  auto before = vf::classes_before_filters(e.hits);
  auto classes = vf::filter_hits(e.hits);
  std::ostringstream os;
  os << "subsets: " << e.subsets << ", nonsingular: " << e.nonsingular << ", raw hits: " << e.raw_hits()
     << (run.from_cache ? " (from cache)" : "") << "\n\nhits per prime:";
  json hp = json::object();
  for (const auto& [p, c] : e.hits_per_prime) {
    os << " p=" << p << ": " << c;
    hp[std::to_string(p)] = c;
  }
  os << "\n\ndistinct (p, a): " << vf::distinct_pairs(e.hits).size() << ", classes before filters: " << before.size()
     << "\n\n";
  std::vector<std::vector<std::string>> rows;
  json jc = json::array();
  std::set<std::string> matched;
  bool all_match = true;
  for (const auto& cl : classes) {
    std::string fam;
    for (const auto& pf : vf::known_families())
      if (vf::match_family(pf, cl)) fam = pf.id;
    if (fam.empty()) all_match = false;
    else matched.insert(fam);
    rows.push_back({std::to_string(cl.p), vf::avec_string(cl.a), std::to_string(cl.monomials.size()),
                    std::to_string(cl.witnesses), fam.empty() ? "none" : fam});
    jc.push_back({{"p", cl.p}, {"a", vf::avec_string(cl.a)}, {"monomials", cl.monomials.size()},
                  {"witnesses", cl.witnesses}, {"family", fam}});
  }
  os << (rows.empty() ? std::string("no classes survive the filters\n")
                      : md_table({"p", "a (canonical)", "|M_A|", "raw hits", "family"}, rows));
  r.body = os.str();
  r.payload = {{"subsets", e.subsets}, {"nonsingular", e.nonsingular}, {"hits_per_prime", hp}, {"classes", jc},
               {"cached", run.from_cache}};
  r.check("all C(45,5) subsets enumerated", e.subsets == 1221759, "exhaustive", std::to_string(e.subsets));
  r.check("every surviving class is a known family", all_match, "table");
  for (const auto& pf : vf::known_families())
    if (filter.contains(pf.p)) r.check("family " + pf.id + " found", matched.contains(pf.id), "table");
  return r;
}

auto cmd_vf_certify(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "vf certify";
  std::size_t samples = f.samples ? f.samples : cfg.samples;
  r.inputs = {{"family", f.family}, {"samples", samples}, {"seed", cfg.seed}};
  std::vector<const vf::KnownFamily*> fams;
  if (f.family == "all")
    for (const auto& x : vf::known_families()) fams.push_back(&x);
  else
    fams.push_back(&vf::known_family(f.family));
  json jc = json::array();
  for (const auto* fam : fams) {
    auto c = vf::certify_family_singular(*fam, samples, cfg.seed);
    std::ostringstream os;
    os << "### family " << c.family << " (p = " << c.p << ")\n\nring: " << c.ring << "\n\npoint: (";
    for (std::size_t i = 0; i < c.point.size(); ++i) os << (i ? ", " : "") << c.point[i];
    os << ")\n\n4x4 minors checked: " << c.minors4_checked << (c.minors4_vanish ? ", all zero" : ", NOT all zero");
    if (c.minor3)
      os << "\n\nnonzero 3x3 minor rows (" << c.minor3->rows[0] << "," << c.minor3->rows[1] << "," << c.minor3->rows[2]
         << ") cols (" << c.minor3->cols[0] << "," << c.minor3->cols[1] << "," << c.minor3->cols[2] << "): " << c.minor3->value;
    os << "\n\nnumeric re-check: " << c.numeric_passed << "/" << c.numeric_samples << "\n\n";
    r.body += os.str();
    jc.push_back({{"family", c.family}, {"p", c.p}, {"ring", c.ring}, {"quadric", c.quadric}, {"point", c.point},
                  {"minors4_checked", c.minors4_checked}, {"minors4_vanish", c.minors4_vanish},
                  {"minor3", c.minor3 ? c.minor3->value : ""}, {"numeric_passed", c.numeric_passed},
                  {"numeric_samples", c.numeric_samples}, {"passed", c.passed()}});
    r.check("family " + c.family + " singular: rank 3 Jacobian at a point", c.passed(), "derived",
            std::to_string(c.numeric_passed) + "/" + std::to_string(c.numeric_samples) + " samples");
  }
  r.payload["certificates"] = jc;
  return r;
}

auto cmd_vf_lemma56(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "vf lemma56";
  auto filter = vf::PrimeFilter::parse(f.primes.empty() ? cfg.primes : f.primes);
  r.inputs = {{"primes", filter.to_string()}};
  auto run = f.cache_file.empty() ? enumerate_cached(filter, cfg.jobs, cfg.cache_dir)
                                  : enumerate_cached_file(filter, cfg.jobs, f.cache_file);
  std::ostringstream os;
  os << "nonsingular subsets: " << run.e.nonsingular << "\nprimes encountered:";
  json ps = json::array();
  for (const auto& [p, c] : run.e.hits_per_prime) {
    os << " " << p << " (" << c << ")";
    ps.push_back(p);
  }
  os << "\nviolations: " << run.e.violations.size() << "\n";
  r.body = os.str();
  json jv = json::array();
  for (const auto& v : run.e.violations) jv.push_back({{"p", v.p}, {"N", v.N}, {"rank", v.rank}});
  r.payload = {{"nonsingular", run.e.nonsingular}, {"primes", ps}, {"violations", jv}};
  r.check("rank mod p is exactly 4 for every hit", run.e.violations.empty(), "exhaustive",
          std::to_string(run.e.violations.size()) + " violations");
  return r;
}

auto cmd_vf_nilpotent(const Flags& f) -> Report {
  Report r;
  r.command = "vf nilpotent";
  r.inputs = {{"p", f.p}};
  auto rep = vf::verify_nilpotent_lift(f.p);
  std::vector<std::vector<std::string>> rows;
  json jc = json::array();
  for (const auto& c : rep.cases) {
    std::string pat = vf::pattern_string(c.pattern);
    rows.push_back({pat, std::to_string(c.kernel_q), std::to_string(c.kernel_p), c.kernel_q == c.kernel_p ? "=" : "differs"});
    jc.push_back({{"pattern", pat}, {"kernel_q", c.kernel_q}, {"kernel_p", c.kernel_p}});
    r.check("pattern " + pat + " kernel over Q = kernel over F_p", c.kernel_q == c.kernel_p, "exhaustive",
            std::to_string(c.kernel_q) + " vs " + std::to_string(c.kernel_p));
  }
  r.body = md_table({"superdiagonal", "dim ker (Q)", "dim ker (F_p)", ""}, rows);
  r.payload["cases"] = jc;
  return r;
}

// ---- gm

template <class R>
auto datum_or_random(const R& ring, const RingDesc& d, const Flags& f, const RunConfig& cfg) -> gm::LagrangianDatum<R> {
  if (!f.input.empty()) {
    auto j = read_json_file(f.input);
    if (j.contains("W")) return gm::gm_to_lagrangian(ring, gm_from_json(ring, j));
    return lagrangian_from_json(ring, j);
  }
  (void)d;
  std::mt19937_64 rng(cfg.seed);
  return gm::gm_to_lagrangian(ring, gm::random_gm_datum(ring, f.n ? f.n : 4, rng, false));
}

auto input_ring(const Flags& f) -> RingDesc {
  if (!f.input.empty()) {
    auto j = read_json_file(f.input);
    if (!j.contains("ring")) throw DatasetError("dataset has no ring");
    return RingDesc::from_json(j["ring"]);
  }
  return RingDesc::parse(f.ring);
}

auto cmd_gm_convert(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "gm convert";
  auto d = input_ring(f);
  r.inputs = {{"ring", d.name()}, {"input", f.input}, {"seed", cfg.seed}};
  with_ring(d, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    json out;
    if (!f.input.empty() && !read_json_file(f.input).contains("W")) {
      auto L = lagrangian_from_json(ring, read_json_file(f.input));
      gm::check_lagrangian_datum(ring, L);
      auto D = gm::lagrangian_to_gm(ring, L);
      out = gm_to_json<R>(d, D);
      r.check("Lagrangian datum valid", true, "derived");
      r.check("converting back recovers A", gm::gm_to_lagrangian(ring, D).A == L.A, "property");
      r.body = "Lagrangian datum -> GM datum (n = " + std::to_string(D.n) + ")\n";
    } else {
      gm::GMDatum<R> D;
      if (!f.input.empty()) {
        D = gm_from_json(ring, read_json_file(f.input));
      } else {
        std::mt19937_64 rng(cfg.seed);
        D = gm::random_gm_datum(ring, f.n ? f.n : 4, rng, false);
      }
      auto L = gm::gm_to_lagrangian(ring, D);
      out = lagrangian_to_json<R>(d, L);
      r.check("GM datum valid, A independent of v0", true, "derived");
      r.check("converting back recovers (W, q)", gm::same_gm(D, gm::lagrangian_to_gm(ring, L)), "property");
      r.body = "GM datum -> Lagrangian datum (n = " + std::to_string(D.n) + ")\n";
    }
    if (!f.output.empty()) {
      std::ofstream o(f.output);
      if (!o) throw UsageError("cannot write " + f.output);
      o << out.dump(2) << "\n";
      r.body += "written to " + f.output + "\n";
    } else {
      r.body += "\n```json\n" + out.dump(2) + "\n```\n";
    }
    r.payload["dataset"] = out;
    return 0;
  });
  return r;
}

template <class R>
void roundtrip_rows(Report& r, const R& ring, const std::string& name, const Flags& f, std::size_t trials,
                    const RunConfig& cfg, std::vector<std::vector<std::string>>& rows) {
  for (int n = 3; n <= 5; ++n) {
    if (f.n && f.n != n) continue;
    auto st = gm::roundtrip_suite(ring, n, trials, cfg.seed * 100 + static_cast<std::uint64_t>(n));
    rows.push_back({name, std::to_string(n), std::to_string(st.recovered), std::to_string(st.rank_ok),
                    std::to_string(st.v0_independent), std::to_string(st.trials)});
    r.payload["runs"].push_back({{"ring", name}, {"n", n}, {"trials", st.trials}, {"recovered", st.recovered},
                                 {"rank_ok", st.rank_ok}, {"v0_independent", st.v0_independent}, {"errors", st.errors}});
    r.check(name + " n=" + std::to_string(n) + " round trips", st.passed(), "property",
            std::to_string(st.recovered) + "/" + std::to_string(st.trials));
  }
}

auto cmd_gm_roundtrip(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "gm roundtrip";
  std::size_t trials = f.trials ? f.trials : (cfg.trials ? cfg.trials : 200);
  if (f.n != 0 && (f.n < 3 || f.n > 5)) throw UsageError("--n must be 3, 4 or 5");
  r.inputs = {{"ring", f.ring}, {"n", f.n}, {"trials", trials}, {"seed", cfg.seed}};
  r.payload["runs"] = json::array();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> rings;
  if (f.ring == "all") rings = {"F5", "F7", "F9", "Q"};
  else rings = {f.ring};
  for (const auto& name : rings) {
    auto d = RingDesc::parse(name);
    if (d.kind == RingDesc::Kind::Zpk) throw UsageError("round trips run over fields");
    with_ring(d, [&](const auto& ring) {
      roundtrip_rows(r, ring, d.name(), f, trials, cfg, rows);
      return 0;
    });
  }
  r.body = md_table({"ring", "n", "recovered", "ranks ok", "v0-independent", "trials"}, rows);
  return r;
}

auto cmd_gm_find(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "gm find-v5p";
  auto d = input_ring(f);
  if (d.kind != RingDesc::Kind::Fq) throw UsageError("find-v5p needs a finite field");
  const auto& F = FiniteField::get(d.p, d.k);
  auto L = datum_or_random(F, d, f, cfg);
  r.inputs = {{"ring", d.name()}, {"n", L.n}, {"max_degree", f.max_degree}, {"seed", cfg.seed}, {"input", f.input}};
  auto o = gm::find_opposite_V5(F, L, f.max_degree);
  std::ostringstream os;
  os << "rank(A cap wedge^3 V5) = " << gm::intersection_rank(F, L.A, L.V5) << "\n";
  if (o.found) {
    os << "u found over " << o.field << " (degree " << o.degree << ") after " << o.tested << " candidates: (";
    for (std::size_t i = 0; i < o.u.size(); ++i) os << (i ? ", " : "") << o.u[i];
    os << ")\n";
  } else {
    os << "search exhausted up to degree " << f.max_degree << " after " << o.tested << " candidates\n";
  }
  r.body = os.str();
  r.payload = {{"found", o.found}, {"degree", o.degree}, {"field", o.field}, {"u", o.u}, {"tested", o.tested}};
  r.check("V5' with A cap wedge^3 V5' = 0 found", o.found, "derived");
  return r;
}

auto cmd_gm_scan(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "gm scan";
  auto d = input_ring(f);
  if (d.kind != RingDesc::Kind::Fq) throw UsageError("scan needs a finite field");
  const auto& F = FiniteField::get(d.p, d.k);
  auto L = datum_or_random(F, d, f, cfg);
  std::uint64_t budget = f.budget ? f.budget : gm::grassmannian_3_6_points(F.order());
  r.inputs = {{"ring", d.name()}, {"n", L.n}, {"budget", budget}, {"max_degree", f.max_degree}, {"seed", cfg.seed},
              {"input", f.input}};
  auto s = gm::scan_decomposables(F, L.A, budget, f.max_degree);
  std::ostringstream os;
  os << "points tested: " << s.tested << " (|Gr(3,6)(" << F.name() << ")| = " << gm::grassmannian_3_6_points(F.order())
     << ")\n";
  if (s.found) {
    os << "decomposable vector found over " << s.field << ": rows";
    for (const auto& row : s.witness) {
      os << " (";
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << ")";
    }
    os << "\n";
  } else {
    os << (s.exhausted_degree1 ? "every F_q-point tested; none decomposable\n" : "none found within budget (partial)\n");
  }
  r.body = os.str();
  r.payload = {{"found", s.found}, {"tested", s.tested}, {"exhausted_degree1", s.exhausted_degree1}, {"witness", s.witness},
               {"field", s.field}};
  r.check("no decomposable vector in P(A)", !s.found, s.exhausted_degree1 ? "exhaustive" : "partial");
  return r;
}

auto cmd_gm_lift(const Flags& f, const RunConfig& cfg) -> Report {
  Report r;
  r.command = "gm lift";
  if (!f.input.empty()) {
    auto d = input_ring(f);
    if (d.kind != RingDesc::Kind::Fq || d.k != 1) throw UsageError("lift needs data over a prime field");
    const auto& F = FiniteField::get(d.p);
    auto L = lagrangian_from_json(F, read_json_file(f.input));
    r.inputs = {{"input", f.input}, {"k", f.k}};
    auto res = gm::lift_lagrangian(L, f.k);
    std::ostringstream os;
    os << "isotropy defect valuations:";
    for (auto v : res.defect_valuations) os << " " << v;
    r.body = os.str() + "\n";
    RingDesc out{RingDesc::Kind::Zpk, d.p, f.k};
    r.payload = {{"lifted", lagrangian_to_json<IntegersMod>(out, res.datum)}, {"defect_valuations", res.defect_valuations}};
    r.check("isotropic over Z/p^k", res.isotropic, "derived");
    r.check("direct summand of rank 10", res.summand, "derived");
    r.check("rank(A cap wedge^3 V5) = 5-n", res.intersection_ok, "derived");
    r.check("reduces to the input", res.reduction_ok, "derived");
    return r;
  }
  std::size_t trials = f.trials ? f.trials : (cfg.trials ? cfg.trials : 50);
  r.inputs = {{"p", f.p}, {"k", f.k}, {"trials", trials}, {"seed", cfg.seed}};
  auto st = gm::lift_suite(f.p, f.k, trials, cfg.seed);
  r.body = "lifted " + std::to_string(st.passed) + "/" + std::to_string(st.trials) + " random Lagrangian data over F" +
           std::to_string(f.p) + " to Z/" + std::to_string(f.p) + "^" + std::to_string(f.k) + "\n";
  for (const auto& e : st.errors) r.body += "error: " + e + "\n";
  r.payload = {{"passed", st.passed}, {"trials", st.trials}, {"errors", st.errors}};
  r.check("every lift exact", st.ok(), "property", std::to_string(st.passed) + "/" + std::to_string(st.trials));
  return r;
}

// ---- lattice, ck

auto cmd_lattice(const Flags&) -> Report {
  Report r;
  r.command = "lattice verify";
  auto rep = lat::verify_gm_lattice_facts();
  for (const auto& c : rep.checks) r.check(c.name, c.ok, "derived", c.detail);
  r.payload = {{"signature_L", {rep.signature_L.first, rep.signature_L.second}},
               {"signature_L_twisted", {rep.signature_L_twisted.first, rep.signature_L_twisted.second}}};
  r.body = "L = E8(-1)^2 + U^2 + I(-2)^2\n";
  return r;
}

auto parse_perturb(const std::string& s, ck::Degrees& d) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw UsageError("--perturb expects MONO=VALUE, e.g. H^4*e2=5");
  std::string m = s.substr(0, eq), v = s.substr(eq + 1);
  ck::Mono mono{0, 0};
  std::stringstream ss(m);
  for (std::string part; std::getline(ss, part, '*');) {
    auto caret = part.find('^');
    std::string base = part.substr(0, caret);
    int e = caret == std::string::npos ? 1 : std::stoi(part.substr(caret + 1));
    if (base == "H") mono.a += e;
    else if (base == "e2") mono.b += e;
    else throw UsageError("unknown factor '" + base + "' in --perturb");
  }
  try {
    d.top[mono] = parse_rat(v);
  } catch (const std::exception&) {
    throw UsageError("bad value in --perturb: " + v);
  }
}

auto cmd_ck(const Flags& f) -> Report {
  Report r;
  r.command = "ck verify";
  auto v = ck::parse_variety(f.variety.empty() ? "gm6" : f.variety);
  auto deg = ck::Degrees::standard(v);
  for (const auto& p : f.perturb) parse_perturb(p, deg);
  json jd = json::object();
  for (const auto& [m, x] : deg.top) jd[ck::mono_string(m)] = gmlab::to_string(x);
  r.inputs = {{"variety", ck::variety_name(v)}, {"degrees", jd}};
  ck::TautAlgebra alg(v, deg);
  auto rep = ck::verify_chow_kunneth(alg);
  std::vector<std::vector<std::string>> rows;
  json jp = json::array();
  for (const auto& p : ck::projectors(v)) {
    rows.push_back({"pi" + std::to_string(p.index), p.pi.to_string()});
    jp.push_back({{"index", p.index}, {"correspondence", p.pi.to_string()}});
  }
  r.body = md_table({"projector", "correspondence"}, rows);
  r.payload["projectors"] = jp;
  for (const auto& c : rep.checks) r.check(c.name, c.ok, "derived");
  return r;
}

// ---- all

auto cmd_all(const Flags& f, const RunConfig& cfg, std::ostream& out, bool live) -> Report {
  Report r;
  r.command = "all";
  AcceptanceOptions opt;
  opt.jobs = cfg.jobs;
  opt.seed = cfg.seed;
  opt.cache_dir = cfg.cache_dir;
  opt.cert_samples = cfg.samples;
  if (cfg.trials) opt.roundtrip_trials = cfg.trials;
  opt.only.insert(f.only.begin(), f.only.end());
  r.inputs = {{"seed", opt.seed}, {"jobs", opt.jobs}, {"samples", opt.cert_samples}, {"trials", opt.roundtrip_trials}};
  json jc = json::array();
  auto results = run_acceptance(opt, [&](const CriterionResult& c) {
    if (live) out << result_line(c) << "\n" << std::flush;
  });
  for (const auto& c : results) {
    r.check(std::to_string(c.id) + " " + c.title, c.pass, "acceptance", c.summary);
    jc.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"summary", c.summary}, {"failures", c.failures}});
    if (!live) r.body += result_line(c) + "\n";
  }
  r.payload["criteria"] = jc;
  return r;
}

} // namespace

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"gmlab: exact verification suites for Gushel-Mukai varieties in characteristic p", "gmlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config, "TOML config file ([run], [vf], [gm] tables)");
  app.add_option("--emit", f.emit, "output format: markdown or json");
  auto* seed_opt = app.add_option("--seed", f.seed, "random seed");
  auto* jobs_opt = app.add_option("--jobs", f.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--cache-dir", f.cache_dir, "result cache directory (default $GMLAB_CACHE_DIR)");

  std::function<Report(const RunConfig&)> action;

  auto* bott = app.add_subcommand("bott", "Bott vanishing on Gr(2,5)")->require_subcommand(1);
  auto* bt = bott->add_subcommand("table", "weight table of a homogeneous bundle");
  auto* bc = bott->add_subcommand("cohomology", "cohomology of a homogeneous bundle");
  for (auto* s : {bt, bc}) {
    s->add_option("--bundle", f.bundle, "O, omega<i>, tangent");
    s->add_option("--twist", f.twist, "twist m");
    s->add_option("--p", f.p, "characteristic");
  }
  bt->add_option("--wlist", f.wlist, "when to list w: auto, always, contributing");
  bt->callback([&] { action = [&](const RunConfig&) { return cmd_bott_table(f); }; });
  bc->callback([&] { action = [&](const RunConfig&) { return cmd_bott_cohomology(f); }; });

  auto* hodge = app.add_subcommand("hodge", "Hodge numbers of Gr, Y and X")->require_subcommand(1);
  auto* hd = hodge->add_subcommand("diamond", "derive a Hodge diamond");
  hd->add_option("--variety", f.variety, "Gr, Y or X");
  hd->add_option("--p", f.p, "characteristic");
  hd->callback([&] { action = [&](const RunConfig&) { return cmd_hodge_diamond(f); }; });
  auto* ht = hodge->add_subcommand("tangent", "tangent cohomology and golden dimensions");
  ht->add_option("--p", f.p, "characteristic");
  ht->callback([&] { action = [&](const RunConfig&) { return cmd_hodge_tangent(f); }; });

  auto* vfc = app.add_subcommand("vf", "vector-field classification")->require_subcommand(1);
  auto* vs = vfc->add_subcommand("search", "enumerate 5-subsets and classify");
  vs->add_option("--p", f.primes, "prime filter: 5, 11..200, or empty for all");
  vs->add_option("--cache", f.cache_file, "cache file (overrides --cache-dir)");
  vs->callback([&] { action = [&](const RunConfig& c) { return cmd_vf_search(f, c); }; });
  auto* vc = vfc->add_subcommand("certify", "singularity certificates");
  vc->add_option("--family", f.family, "1, 2, 3, 4, p7 or all");
  vc->add_option("--samples", f.samples, "numeric re-check samples");
  vc->callback([&] { action = [&](const RunConfig& c) { return cmd_vf_certify(f, c); }; });
  auto* vl = vfc->add_subcommand("lemma56", "rank lemma over the enumeration");
  vl->add_option("--p", f.primes, "prime filter");
  vl->add_option("--cache", f.cache_file, "cache file (overrides --cache-dir)");
  vl->callback([&] { action = [&](const RunConfig& c) { return cmd_vf_lemma56(f, c); }; });
  auto* vn = vfc->add_subcommand("nilpotent", "kernel comparison for nilpotent A");
  vn->add_option("--p", f.p, "characteristic");
  vn->callback([&] { action = [&](const RunConfig&) { return cmd_vf_nilpotent(f); }; });

  auto* gmc = app.add_subcommand("gm", "GM data and Lagrangian data")->require_subcommand(1);
  auto* gc = gmc->add_subcommand("convert", "convert a data set (random GM datum without --input)");
  auto* gr = gmc->add_subcommand("roundtrip", "randomized GM -> Lagrangian -> GM");
  auto* gf = gmc->add_subcommand("find-v5p", "search V5' with A cap wedge^3 V5' = 0");
  auto* gs = gmc->add_subcommand("scan", "search decomposable vectors in P(A)");
  auto* gl = gmc->add_subcommand("lift", "lift Lagrangian data to Z/p^k");
  for (auto* s : {gc, gf, gs}) {
    s->add_option("--input", f.input, "data set (JSON)");
    s->add_option("--ring", f.ring, "Q, F<q> or Z/<p^k> for random data");
    s->add_option("--n", f.n, "n in {3,4,5} for random data");
  }
  gc->add_option("--output", f.output, "write the converted data set here");
  gr->add_option("--ring", f.ring, "F5, F7, F9, Q or all");
  gr->add_option("--n", f.n, "3, 4 or 5 (default all)");
  gr->add_option("--trials", f.trials, "trials per (ring, n)");
  gf->add_option("--max-degree", f.max_degree, "largest extension degree")->check(CLI::Range(1u, 3u));
  gs->add_option("--budget", f.budget, "point budget (default all F_q-points)");
  gs->add_option("--max-degree", f.max_degree, "largest extension degree")->check(CLI::Range(1u, 3u));
  gl->add_option("--input", f.input, "Lagrangian data set over F_p");
  gl->add_option("--p", f.p, "prime for random data");
  gl->add_option("--k", f.k, "precision")->check(CLI::Range(1u, 12u));
  gl->add_option("--trials", f.trials, "random trials");
  gc->callback([&] { action = [&](const RunConfig& c) { return cmd_gm_convert(f, c); }; });
  gr->callback([&] { action = [&](const RunConfig& c) { return cmd_gm_roundtrip(f, c); }; });
  gf->callback([&] { action = [&](const RunConfig& c) { return cmd_gm_find(f, c); }; });
  gs->callback([&] { action = [&](const RunConfig& c) { return cmd_gm_scan(f, c); }; });
  gl->callback([&] { action = [&](const RunConfig& c) { return cmd_gm_lift(f, c); }; });

  auto* latc = app.add_subcommand("lattice", "lattice facts")->require_subcommand(1);
  latc->add_subcommand("verify", "discriminants, signatures, complements")->callback([&] {
    action = [&](const RunConfig&) { return cmd_lattice(f); };
  });

  auto* ckc = app.add_subcommand("ck", "Chow-Kunneth projectors")->require_subcommand(1);
  auto* cv = ckc->add_subcommand("verify", "projector identities on tautological classes");
  cv->add_option("--variety", f.variety, "gm4 or gm6");
  cv->add_option("--perturb", f.perturb, "override a top degree, e.g. H^4*e2=5");
  cv->callback([&] { action = [&](const RunConfig&) { return cmd_ck(f); }; });

  bool live = false;
  auto* all = app.add_subcommand("all", "full acceptance suite");
  all->add_option("--only", f.only, "criterion numbers to run")->delimiter(',')->check(CLI::Range(1, 12));
  all->callback([&] { live = true; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "gmlab: " << e.what() << "\n";
    return kExitUsage;
  }

  RunConfig cfg;
  try {
    cfg = load_config(f.config.empty() ? std::nullopt : std::optional<std::filesystem::path>(f.config));
    if (!f.emit.empty()) cfg.emit = parse_emit(f.emit);
    if (seed_opt->count() > 0) cfg.seed = f.seed;
    if (jobs_opt->count() > 0) cfg.jobs = f.jobs;
    if (!f.cache_dir.empty()) cfg.cache_dir = f.cache_dir;
  } catch (const std::exception& e) {
    err << "gmlab: " << e.what() << "\n";
    return kExitUsage;
  }

  Report rep;
  try {
    if (live) rep = cmd_all(f, cfg, out, cfg.emit == Emit::Markdown);
    else rep = action(cfg);
  } catch (const UsageError& e) {
    err << "gmlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DatasetError& e) {
    err << "gmlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "gmlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    rep.check("completed without error", false, "runtime", e.what());
  }
  if (cfg.emit == Emit::Json) out << report::to_json(rep).dump(2) << "\n";
  else out << report::to_markdown(rep);
  return rep.passed() ? kExitPass : kExitCheckFailed;
}

} // namespace gmlab::cli
