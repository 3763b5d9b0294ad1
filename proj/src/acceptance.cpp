#include "gmlab/cli/acceptance.hpp"

#include "gmlab/bott.hpp"
#include "gmlab/ckmotives.hpp"
#include "gmlab/cli/cache.hpp"
#include "gmlab/gmlag.hpp"
#include "gmlab/lattice.hpp"
#include "gmlab/ledger.hpp"
#include "gmlab/vfsearch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

namespace gmlab::cli {

namespace {

struct Ctx {
  CriterionResult* r;
  void need(bool ok, const std::string& what) {
    if (!ok) r->failures.push_back(what);
  }
};

// ---- printed weight tables (lambda, lambda+rho, w or "", w(lambda+rho), w.lambda)

struct PrintedRow {
  Vec5 lambda, lrho;
  const char* w;
  Vec5 v, wdot;
};

const std::vector<PrintedRow> kTableMinus2{
    {{-1, -1, 0, 4, 2}, {1, 0, 0, 3, 0}, "(1 2 3 4)", {3, 1, 0, 0, 0}, {1, 0, 0, 1, 2}},
    {{-1, 0, -1, 4, 2}, {1, 1, -1, 3, 0}, "(1 2 3 4)", {3, 1, 1, 0, -1}, {1, 0, 1, 1, 1}},
    {{-2, 0, 0, 3, 3}, {0, 1, 0, 2, 1}, "(1 4)(3 5)", {2, 1, 1, 0, 0}, {0, 0, 1, 1, 2}},
    {{-1, -1, 0, 3, 3}, {1, 0, 0, 2, 1}, "(1 2 4)(3 5)", {2, 1, 1, 0, 0}, {0, 0, 1, 1, 2}},
    {{-1, 0, -1, 3, 3}, {1, 1, -1, 2, 1}, "(1 2 3 5 4)", {2, 1, 1, 1, -1}, {0, 0, 1, 2, 1}},
    {{0, -1, -1, 4, 2}, {2, 0, -1, 3, 0}, "(1 2 3 5 4)", {3, 2, 0, 0, -1}, {1, 1, 0, 1, 1}},
    {{0, -2, 0, 3, 3}, {2, -1, 0, 2, 1}, "(2 5 3 4)", {2, 2, 1, 0, -2}, {0, 1, 1, 1, 1}},
    {{0, -1, -1, 3, 3}, {2, 0, -1, 2, 1}, "(2 4)(3 5)", {2, 2, 1, 0, -2}, {0, 1, 1, 1, 1}},
    {{0, 0, -2, 3, 3}, {2, 1, -2, 2, 1}, "(2 3 5 4)", {2, 2, 1, 1, -2}, {0, 1, 1, 2, 0}},
    {{-1, -1, 0, 2, 4}, {1, 0, 0, 1, 2}, "(1 2 4 3 5)", {2, 1, 1, 0, 0}, {0, 0, 1, 1, 2}},
    {{-1, 0, -1, 2, 4}, {1, 1, -1, 1, 2}, "(1 2 3 5)", {2, 1, 1, 1, -1}, {0, 0, 1, 2, 1}},
    {{0, -1, -1, 2, 4}, {2, 0, -1, 1, 2}, "(2 4 3 5)", {2, 2, 1, 0, -1}, {0, 0, 1, 1, 1}},
};

const std::vector<PrintedRow> kTableMinus3{
    {{-1, -1, 0, 5, 3}, {1, 0, 0, 4, 1}, "", {4, 1, 0, 0, 1}, {2, 0, 0, 1, 3}},
    {{-1, 0, -1, 5, 3}, {1, 1, -1, 4, 1}, "", {4, 1, 1, 1, -1}, {2, 0, 1, 2, 1}},
    {{-2, 0, 0, 4, 4}, {0, 1, 0, 3, 2}, "", {3, 2, 1, 0, 0}, {1, 1, 1, 1, 2}},
    {{-1, -1, 0, 4, 4}, {1, 0, 0, 3, 2}, "", {3, 2, 1, 0, 0}, {1, 1, 1, 1, 2}},
    {{-1, 0, -1, 4, 4}, {1, 1, -1, 3, 2}, "", {3, 2, 1, 1, -1}, {1, 1, 1, 2, 1}},
    {{0, -1, -1, 5, 3}, {2, 0, -1, 4, 1}, "(1 2 4)(3 5)", {4, 2, 1, 0, -1}, {2, 1, 1, 1, 1}},
    {{0, -2, 0, 4, 4}, {2, -1, 0, 3, 2}, "", {3, 2, 2, 0, -2}, {1, 1, 2, 1, 1}},
    {{0, -1, -1, 4, 4}, {2, 0, -1, 3, 2}, "", {3, 2, 2, 0, -2}, {1, 1, 2, 1, 1}},
    {{0, 0, -2, 4, 4}, {2, 1, -2, 3, 2}, "", {3, 2, 2, 1, -2}, {1, 1, 2, 2, 0}},
    {{-1, -1, 0, 3, 5}, {1, 0, 0, 2, 3}, "", {3, 2, 1, 0, 0}, {1, 1, 1, 1, 2}},
    {{-1, 0, -1, 3, 5}, {1, 1, -1, 2, 3}, "", {3, 2, 1, 1, -1}, {1, 1, 1, 2, 1}},
    {{0, -1, -1, 3, 5}, {2, 0, -1, 2, 3}, "", {3, 2, 2, 0, -1}, {1, 1, 1, 1, 1}},
};

// Printed cells that contradict their own row: (twist, row, column).
const std::set<std::tuple<long, int, std::string>> kErrata{
    {-2, 2, "w"}, {-2, 7, "v"}, {-2, 8, "v"}, {-2, 12, "wdot"},
    {-3, 1, "v"}, {-3, 1, "wdot"}, {-3, 7, "v"}, {-3, 8, "v"}, {-3, 12, "wdot"},
};

auto sorted_desc(Vec5 v) -> Vec5 {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void check_table(Ctx& c, long twist, const std::vector<PrintedRow>& printed, std::set<std::tuple<long, int, std::string>>& found) {
  auto ours = weight_table(BundleSpec::omega(2, twist), 5);
  std::string tag = "Omega^2(" + std::to_string(twist) + ")";
  c.need(ours.size() == 12, tag + ": 12 distinct weights");
  int mult = 0;
  for (const auto& r : ours) mult += r.multiplicity;
  c.need(mult == 15, tag + ": 15 weights with multiplicity");
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto& P = printed[i];
    int row = static_cast<int>(i) + 1;
    std::string where = tag + " row " + std::to_string(row);
    auto it = std::find_if(ours.begin(), ours.end(), [&](const TableRow& r) { return r.lambda == P.lambda; });
    if (it == ours.end()) {
      c.need(false, where + ": weight missing");
      continue;
    }
    Vec5 lrho = vec_add(P.lambda, kRho);
    Vec5 v = sorted_desc(lrho);
    Vec5 wdot = vec_sub(v, kRho);
    c.need(P.lrho == lrho && it->lambda_rho == lrho, where + ": lambda+rho");
    c.need(it->v == v && it->w_dot == wdot, where + ": computed row consistent");
    c.need(it->w.has_value() == (std::string(P.w) != ""), where + ": w listed exactly when printed");
    if (it->w) c.need(it->w->apply(lrho) == v, where + ": computed w sorts lambda+rho");
    auto cell = [&](const std::string& col, bool equal, bool printed_consistent) {
      if (equal) return;
      c.need(!printed_consistent, where + ": printed " + col + " differs but is self-consistent");
      found.insert({twist, row, col});
    };
    if (std::string(P.w) != "" && it->w) {
      auto pw = WeylElem::parse(P.w);
      cell("w", pw == *it->w, pw.apply(lrho) == v);
    }
    cell("v", P.v == it->v, P.v == v);
    cell("wdot", P.wdot == it->w_dot, P.wdot == wdot);
  }
}

void crit1(Ctx& c) {
  std::set<std::tuple<long, int, std::string>> found;
  check_table(c, -2, kTableMinus2, found);
  check_table(c, -3, kTableMinus3, found);
  c.need(found == kErrata, "printed/computed differences are exactly the " + std::to_string(kErrata.size()) + " known errata (found " +
                               std::to_string(found.size()) + ")");
  auto t2 = bundle_cohomology(BundleSpec::omega(2, -2), 5);
  auto t3 = bundle_cohomology(BundleSpec::omega(2, -3), 5);
  for (int j = 0; j <= 6; ++j) {
    c.need(t2.exact(j) == Int(0), "h^" + std::to_string(j) + "(Omega^2(-2)) = 0");
    c.need(t3.exact(j) == Int(j == 5 ? 5 : 0), "h^" + std::to_string(j) + "(Omega^2(-3)) = " + (j == 5 ? "5" : "0"));
  }
  int contributing = 0;
  for (const auto& r : weight_table(BundleSpec::omega(2, -3), 5))
    if (r.outcome.kind == BottOutcome::Kind::Single) {
      ++contributing;
      c.need(r.outcome.degree == 5 && r.outcome.dim == 5 && r.lambda == Vec5{0, -1, -1, 5, 3}, "single contribution h^5 = 5 from [0,-1,-1,5,3]");
    }
  c.need(contributing == 1, "exactly one contributing weight");
  c.r->summary = "24 rows, " + std::to_string(found.size()) + " printed errata confirmed inconsistent, h^5(Omega^2(-3)) = 5";
}

auto all_zero(const CohomTable& t) -> bool {
  for (int j = 0; j <= 6; ++j)
    if (t.exact(j) != Int(0)) return false;
  return true;
}

void crit2(Ctx& c) {
  auto T = bundle_cohomology(BundleSpec::tangent(0), 5);
  c.need(T.exact(0) == Int(24), "h^0(T_Gr) = 24");
  for (int j = 1; j <= 6; ++j) c.need(T.exact(j) == Int(0), "h^" + std::to_string(j) + "(T_Gr) = 0");
  c.need(all_zero(bundle_cohomology(BundleSpec::tangent(-1), 5)), "H*(T_Gr(-1)) = 0");
  c.need(all_zero(bundle_cohomology(BundleSpec::tangent(-2), 5)), "H*(T_Gr(-2)) = 0");
  for (long m = -12; m <= 12; ++m) {
    auto t = bundle_cohomology(BundleSpec::structure(m), 5);
    for (int i = 0; i <= 6; ++i) {
      auto h = t.exact(i);
      if (!h) {
        c.need(false, "h^" + std::to_string(i) + "(O(" + std::to_string(m) + ")) undecided");
        continue;
      }
      bool allowed = (i == 0 && m >= 0) || (i == 6 && m <= -5);
      c.need(*h == 0 || allowed, "h^" + std::to_string(i) + "(O(" + std::to_string(m) + ")) vanishes");
      if (allowed) c.need(*h > 0, "h^" + std::to_string(i) + "(O(" + std::to_string(m) + ")) > 0");
    }
  }
  const int hii[7] = {1, 1, 2, 2, 2, 1, 1};
  for (int i = 0; i <= 6; ++i) {
    auto t = bundle_cohomology(i == 0 ? BundleSpec::structure(0) : BundleSpec::omega(i, 0), 5);
    for (int j = 0; j <= 6; ++j)
      c.need(t.exact(j) == Int(i == j ? hii[i] : 0), "h^{" + std::to_string(i) + "," + std::to_string(j) + "}(Gr)");
  }
  for (auto [i, m] : std::vector<std::pair<int, long>>{{1, -1}, {1, -2}, {2, -1}, {2, -2}, {3, -1}})
    c.need(all_zero(bundle_cohomology(BundleSpec::omega(i, m), 5)),
           "H*(Omega^" + std::to_string(i) + "(" + std::to_string(m) + ")) = 0");
  c.r->summary = "T_Gr, T_Gr(-1), T_Gr(-2), O(m) for -12 <= m <= 12, Hodge numbers, vanishings";
}

void crit3(Ctx& c) {
  auto Y = reference_diamond(Variety::Y);
  auto X = reference_diamond(Variety::X);
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    auto s = std::to_string(p);
    c.need(derive_diamond(Variety::Y, p).diamond == Y, "diamond(Y) at p = " + s);
    c.need(derive_diamond(Variety::X, p).diamond == X, "diamond(X) at p = " + s);
  }
  auto y = derive_diamond(Variety::Y, 5).diamond;
  auto x = derive_diamond(Variety::X, 5).diamond;
  c.need(x.at(3, 3) == 22 && x.at(2, 4) == 1, "h^{3,3}(X) = 22, h^{2,4}(X) = 1");
  c.need(y.at(2, 3) == 10 && y.at(3, 2) == 10, "middle row of Y is 10, 10");
  c.need(topological_euler(Variety::Gr) == 10, "e(Gr) = 10");
  c.need(topological_euler(Variety::Y) == -12, "e(Y) = -12");
  c.r->summary = "Y and X diamonds at p = 5, 7, 11, 13; e(Gr) = 10, e(Y) = -12";
}

void crit4(Ctx& c) {
  auto t = tangent_report(5);
  c.need(t.h0_OY1 == 10, "h^0(O_Y(1)) = 10");
  c.need(t.h0_OY2 == 49, "h^0(O_Y(2)) = 49");
  c.need(t.h_TY[1] == 25, "h^1(T_Y) = 25");
  c.need(t.h_TX[1] == 25, "h^1(T_X) = 25");
  c.r->summary = "h^0(O_Y(1)) = " + to_string(t.h0_OY1) + ", h^0(O_Y(2)) = " + to_string(t.h0_OY2) +
                 ", h^1(T_Y) = " + to_string(t.h_TY[1]) + ", h^1(T_X) = " + to_string(t.h_TX[1]);
}

// diag(...) from the classification, as printed.
struct PrintedClass {
  std::uint32_t p;
  std::array<int, 5> diag;
};
const std::vector<PrintedClass> kPrintedClasses{
    {5, {-2, 0, -3, -4, 0}}, {5, {-1, -3, -3, -4, -4}}, {5, {-2, -3, 0, -4, -4}}, {5, {-2, -3, 0, -2, -4}},
    {7, {0, -1, -4, -1, -6}}};

auto diag_avec(std::uint32_t p, const std::array<int, 5>& d) -> vf::AVec {
  vf::AVec a{};
  for (int i = 0; i < 5; ++i) a[i] = static_cast<std::uint32_t>(((-d[i]) % static_cast<int>(p) + static_cast<int>(p)) % p);
  return a;
}

struct VfState {
  std::optional<CachedEnumeration> run;
};

auto enumeration(VfState& st, const AcceptanceOptions& opt) -> const vf::Enumeration& {
  if (!st.run) st.run = enumerate_cached(vf::PrimeFilter::parse(""), opt.jobs, opt.cache_dir);
  return st.run->e;
}

void crit5(Ctx& c, VfState& st, const AcceptanceOptions& opt) {
  const auto& e = enumeration(st, opt);
  c.need(e.subsets == 1221759, "1,221,759 subsets enumerated");
  auto classes = vf::filter_hits(e.hits);
  std::map<std::uint32_t, std::set<vf::AVec>> got;
  for (const auto& cl : classes) got[cl.p].insert(cl.a);
  for (const auto& [p, s] : got)
    if (p >= 11) c.need(s.empty(), "no classes at p = " + std::to_string(p));
  c.need(got[5].size() == 4, "4 classes at p = 5");
  c.need(got[7].size() == 1, "1 class at p = 7");
  std::map<std::uint32_t, std::set<vf::AVec>> want;
  for (const auto& pc : kPrintedClasses) want[pc.p].insert(vf::canonical(pc.p, diag_avec(pc.p, pc.diag)));
  c.need(got[5] == want[5], "p = 5 classes match the printed diagonal matrices");
  c.need(got[7] == want[7], "p = 7 class matches diag(0,-1,-4,-1,-6)");
  for (const auto& f : vf::known_families()) {
    bool matched = false;
    for (const auto& cl : classes)
      if (vf::match_family(f, cl)) matched = true;
    c.need(matched, "family " + f.id + " monomial set matches up to relabeling");
  }
  const auto& f1 = vf::known_family("1");
  c.need(f1.monomials.size() == 11, "family (1) has 11 monomials");
  for (const auto& cl : classes)
    if (cl.p == 5 && cl.a == vf::canonical(5, f1.a())) c.need(cl.monomials.size() == 11, "family (1) M_A size 11");
  std::ostringstream os;
  os << e.raw_hits() << " raw hits, " << classes.size() << " classes after filters"
     << (st.run->from_cache ? " (cached enumeration)" : "");
  c.r->summary = os.str();
}

void crit6(Ctx& c, VfState& st, const AcceptanceOptions& opt) {
  const auto& e = enumeration(st, opt);
  c.need(e.subsets == 1221759, "full enumeration");
  c.need(e.violations.empty(), std::to_string(e.violations.size()) + " rank violations");
  c.r->summary = std::to_string(e.nonsingular) + " nonsingular subsets, " + std::to_string(e.violations.size()) + " violations";
}

void crit7(Ctx& c, const AcceptanceOptions& opt) {
  std::size_t ok = 0;
  for (const auto& f : vf::known_families()) {
    auto cert = vf::certify_family_singular(f, opt.cert_samples, opt.seed);
    c.need(cert.point_nonzero && cert.on_grassmannian && cert.on_quadric, "family " + f.id + ": point lies on the variety");
    c.need(cert.minors4_vanish && cert.minors4_checked > 0, "family " + f.id + ": all 4x4 minors vanish");
    c.need(cert.minor3.has_value(), "family " + f.id + ": nonzero 3x3 minor");
    c.need(cert.numeric_samples == opt.cert_samples && cert.numeric_passed == opt.cert_samples,
           "family " + f.id + ": " + std::to_string(cert.numeric_passed) + "/" + std::to_string(opt.cert_samples) + " numeric samples");
    ok += cert.passed();
  }
  c.r->summary = std::to_string(ok) + "/5 certificates, " + std::to_string(opt.cert_samples) + " samples each";
}

void crit8(Ctx& c) {
  std::ostringstream os;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    auto rep = vf::verify_nilpotent_lift(p);
    c.need(rep.cases.size() == 16, "16 patterns at p = " + std::to_string(p));
    std::size_t good = 0;
    for (const auto& k : rep.cases) {
      if (k.kernel_q == k.kernel_p) ++good;
      else
        c.need(false, "p = " + std::to_string(p) + " pattern " + vf::pattern_string(k.pattern) + ": ker over Q = " +
                          std::to_string(k.kernel_q) + ", over F_p = " + std::to_string(k.kernel_p));
    }
    os << (p == 5 ? "" : ", ") << "p=" << p << ": " << good << "/16";
  }
  c.r->summary = os.str();
}

template <class R>
void roundtrips(Ctx& c, const R& ring, const std::string& name, const AcceptanceOptions& opt, std::ostringstream& os) {
  for (int n = 3; n <= 5; ++n) {
    auto st = gm::roundtrip_suite(ring, n, opt.roundtrip_trials, opt.seed * 100 + n);
    std::string tag = name + " n=" + std::to_string(n);
    c.need(st.recovered == st.trials, tag + ": " + std::to_string(st.recovered) + " recovered");
    c.need(st.rank_ok == st.trials, tag + ": " + std::to_string(st.rank_ok) + " rank checks");
    c.need(st.v0_independent == st.trials, tag + ": " + std::to_string(st.v0_independent) + " v0-independent");
    for (const auto& e : st.errors) c.need(false, tag + ": " + e);
    os << tag << " " << st.recovered << "/" << st.trials << "; ";
  }
}

void crit9(Ctx& c, const AcceptanceOptions& opt) {
  std::ostringstream os;
  roundtrips(c, FiniteField::get(5), "F5", opt, os);
  roundtrips(c, FiniteField::get(7), "F7", opt, os);
  roundtrips(c, FiniteField::get(3, 2), "F9", opt, os);
  roundtrips(c, Rationals{}, "Q", opt, os);
  c.r->summary = std::to_string(opt.roundtrip_trials) + " trials per (field, n)";
}

void crit10(Ctx& c, const AcceptanceOptions& opt) {
  std::ostringstream os;
  for (auto [p, k] : {std::pair{5u, 4u}, std::pair{7u, 3u}}) {
    auto st = gm::lift_suite(p, k, opt.lift_trials, opt.seed);
    c.need(st.ok(), "p = " + std::to_string(p) + ", k = " + std::to_string(k) + ": " + std::to_string(st.passed) + "/" +
                        std::to_string(st.trials));
    for (const auto& e : st.errors) c.need(false, e);
    os << (p == 5 ? "" : ", ") << "Z/" << p << "^" << k << ": " << st.passed << "/" << st.trials;
  }
  c.r->summary = os.str();
}

void crit11(Ctx& c) {
  auto rep = lat::verify_gm_lattice_facts();
  auto find = [&](const std::string& name) -> const lat::Check* {
    for (const auto& k : rep.checks)
      if (k.name == name) return &k;
    return nullptr;
  };
  for (const char* name : {"Discr(L) = (Z/2)^2", "signature(L) = (20,2)", "complement of I(2)^2 is Gram-congruent to L"}) {
    const auto* k = find(name);
    c.need(k != nullptr && k->ok, std::string(name) + (k ? " [" + k->detail + "]" : " [missing]"));
  }
  c.r->summary = "signature(L) = (" + std::to_string(rep.signature_L.first) + "," + std::to_string(rep.signature_L.second) +
                 "), signature(L(-1)) = (" + std::to_string(rep.signature_L_twisted.first) + "," +
                 std::to_string(rep.signature_L_twisted.second) + ")";
}

void crit12(Ctx& c) {
  for (auto v : {ck::GMVariety::GM4, ck::GMVariety::GM6}) {
    auto rep = ck::verify_chow_kunneth(ck::TautAlgebra(v));
    c.need(rep.passed(), ck::variety_name(v) + " suite");
    for (const auto& f : rep.failures()) c.need(false, ck::variety_name(v) + ": " + f);
  }
  auto d = ck::Degrees::standard(ck::GMVariety::GM6);
  d.top[{4, 1}] = 5;
  bool raised = false;
  try {
    ck::require_chow_kunneth(ck::TautAlgebra(ck::GMVariety::GM6, d));
  } catch (const ck::IdentityViolation&) {
    raised = true;
  }
  c.need(raised, "negative control deg(H^4 e2) = 5 raises IdentityViolation");
  c.r->summary = "GM4, GM6 suites; negative control rejected";
}

} // namespace

namespace {

auto diamond_from_hij(int dim, const std::map<std::pair<int, int>, int>& nz) -> HodgeDiamond {
  HodgeDiamond d;
  d.dim = dim;
  d.h.assign(dim + 1, std::vector<Int>(dim + 1, Int(0)));
  for (const auto& [ij, v] : nz) d.h[ij.first][ij.second] = v;
  return d;
}

} // namespace

auto reference_diamond(Variety v) -> HodgeDiamond {
  switch (v) {
    case Variety::Gr:
      return diamond_from_hij(6, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 2}, {{3, 3}, 2}, {{4, 4}, 2}, {{5, 5}, 1}, {{6, 6}, 1}});
    case Variety::Y:
      return diamond_from_hij(5, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 2}, {{3, 3}, 2}, {{4, 4}, 1}, {{5, 5}, 1},
                                  {{2, 3}, 10}, {{3, 2}, 10}});
    case Variety::X: break;
  }
  return diamond_from_hij(6, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 2}, {{3, 3}, 22}, {{4, 4}, 2}, {{5, 5}, 1},
                              {{6, 6}, 1}, {{2, 4}, 1}, {{4, 2}, 1}});
}

auto criterion_titles() -> const std::vector<std::string>& {
  static const std::vector<std::string> t{
      "Bott tables for Omega^2(-2), Omega^2(-3)",
      "Grassmannian cohomology suite",
      "Hodge diamonds of Y and X",
      "golden dimensions",
      "vector-field classification",
      "rank lemma over the full enumeration",
      "singularity certificates",
      "nilpotent kernel comparison",
      "GM <-> Lagrangian round trips",
      "Lagrangian lifting",
      "lattices",
      "Chow-Kunneth projectors",
  };
  return t;
}

auto run_acceptance(const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& on_result)
    -> std::vector<CriterionResult> {
  const double limit[13] = {0, 1, 1, 1, 1, 60, 60, 10, 5, 0, 0, 1, 1};
  std::vector<CriterionResult> out;
  VfState vf;
  for (int id = 1; id <= 12; ++id) {
    if (!opt.only.empty() && !opt.only.contains(id)) continue;
    CriterionResult r;
    r.id = id;
    r.title = criterion_titles()[id - 1];
    Ctx c{&r};
    auto t0 = std::chrono::steady_clock::now();
    try {
      switch (id) {
        case 1: crit1(c); break;
        case 2: crit2(c); break;
        case 3: crit3(c); break;
        case 4: crit4(c); break;
        case 5: crit5(c, vf, opt); break;
        case 6: crit6(c, vf, opt); break;
        case 7: crit7(c, opt); break;
        case 8: crit8(c); break;
        case 9: crit9(c, opt); break;
        case 10: crit10(c, opt); break;
        case 11: crit11(c); break;
        case 12: crit12(c); break;
        default: break;
      }
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit[id] > 0 && r.seconds > limit[id]) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "runtime %.2fs exceeds %.0fs", r.seconds, limit[id]);
      r.failures.push_back(buf);
    }
    r.pass = r.failures.empty();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

auto result_line(const CriterionResult& r) -> std::string {
  char t[32];
  std::snprintf(t, sizeof t, "%.2fs", r.seconds);
  std::string s = std::string(r.pass ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.title + " (" + t + ")";
  if (!r.summary.empty()) s += ": " + r.summary;
  for (const auto& f : r.failures) s += "\n     - " + f;
  return s;
}

} // namespace gmlab::cli
