#include "gmlab/bott.hpp"

#include <algorithm>
#include <map>

namespace gmlab {

namespace {

constexpr std::array<Vec5, 6> kOmegaWeights{{
    {-1, 0, 0, 0, 1},
    {-1, 0, 0, 1, 0},
    {0, -1, 0, 0, 1},
    {0, -1, 0, 1, 0},
    {0, 0, -1, 0, 1},
    {0, 0, -1, 1, 0},
}};

constexpr Vec5 kTwistShift{0, 0, 0, -1, -1};

auto all_zero(std::string rule) -> BottOutcome {
  BottOutcome o;
  o.kind = BottOutcome::Kind::AllZero;
  o.rule = std::move(rule);
  return o;
}

} // namespace

auto line_cohomology(const Weight& lambda, std::uint32_t p) -> BottOutcome {
  if (p < 2) throw std::invalid_argument("line_cohomology: p must be at least 2");
  if (lambda.is_dominant()) {
    BottOutcome o;
    o.kind = BottOutcome::Kind::Single;
    o.rule = "kempf";
    o.degree = 0;
    o.mu = lambda;
    o.dim = weyl_dim(lambda);
    return o;
  }
  std::array<long, 4> s{};
  for (int i = 0; i < 4; ++i) s[i] = pairing(lambda, i + 1, i + 2);
  for (long x : s)
    if (x == -1) return all_zero("demazure-a");
  for (int a = 0; a < 4; ++a) {
    if (s[a] != -2) continue;
    for (int b : {a - 1, a + 1})
      if (b >= 0 && b < 4 && s[b] == 0) return all_zero("demazure-pair");
  }
  auto [w, v] = sorting_word(lambda);
  BottOutcome o;
  o.w = w;
  o.spread = v[0] - v[4];
  if (o.spread > static_cast<long>(p)) {
    o.kind = BottOutcome::Kind::Undecidable;
    o.rule = "beyond-alcove";
    return o;
  }
  for (int i = 0; i < 4; ++i)
    if (v[i] == v[i + 1]) {
      o.kind = BottOutcome::Kind::AllZero;
      o.rule = "alcove";
      return o;
    }
  o.kind = BottOutcome::Kind::Single;
  o.rule = "alcove";
  o.degree = w.length();
  o.mu = dot_act(w, lambda);
  o.dim = weyl_dim(o.mu);
  return o;
}

auto BundleSpec::omega(int i, long m) -> BundleSpec {
  if (i == 0) throw std::invalid_argument("Omega^0 is written as the structure sheaf");
  if (i < 1 || i > 6) throw std::invalid_argument("Omega^i needs 1 <= i <= 6");
  return {BundleKind::Omega, i, m};
}

auto BundleSpec::parse(const std::string& name, long twist) -> BundleSpec {
  if (name == "O" || name == "structure") return structure(twist);
  if (name == "T" || name == "tangent") return tangent(twist);
  if (name.rfind("omega", 0) == 0 && name.size() == 6 && name[5] >= '0' && name[5] <= '9')
    return omega(name[5] - '0', twist);
  throw std::invalid_argument("unknown bundle '" + name + "' (expected O, tangent, omega1..omega6)");
}

auto BundleSpec::name() const -> std::string {
  std::string base;
  switch (kind) {
    case BundleKind::Structure: base = "O"; break;
    case BundleKind::Omega: base = "Omega^" + std::to_string(i); break;
    case BundleKind::Tangent: base = "T"; break;
  }
  return base + "(" + std::to_string(m) + ")";
}

auto serre_dual(const BundleSpec& b) -> BundleSpec {
  switch (b.kind) {
    case BundleKind::Structure: return BundleSpec::omega(6, -b.m);
    case BundleKind::Tangent: return BundleSpec::omega(1, -b.m - 5);
    case BundleKind::Omega:
      if (b.i == 6) return BundleSpec::structure(-b.m);
      return BundleSpec::omega(6 - b.i, -b.m);
  }
  return b;
}

auto bundle_weights(const BundleSpec& b) -> std::vector<Vec5> {
  std::vector<Vec5> out;
  Vec5 shift = vec_scale(b.m, kTwistShift);
  switch (b.kind) {
    case BundleKind::Structure: out.push_back({b.m, b.m, b.m, 0, 0}); break;
    case BundleKind::Tangent:
      for (const auto& l : kOmegaWeights) out.push_back(vec_add(vec_scale(-1, l), shift));
      break;
    case BundleKind::Omega:
      for (unsigned mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) != b.i) continue;
        Vec5 s = shift;
        for (int k = 0; k < 6; ++k)
          if (mask & (1u << k)) s = vec_add(s, kOmegaWeights[k]);
        out.push_back(s);
      }
      break;
  }
  return out;
}

auto distinct_weights(const BundleSpec& b) -> std::vector<WeightTerm> {
  std::map<Vec5, int> count;
  for (const auto& l : bundle_weights(b)) ++count[l];
  std::vector<WeightTerm> out;
  for (const auto& [l, c] : count) out.push_back({l, c});
  return out;
}

auto euler_char(const BundleSpec& b) -> Int {
  Int chi = 0;
  for (const auto& l : bundle_weights(b)) {
    auto [w, v] = sorting_word(l);
    bool regular = true;
    for (int i = 0; i < 4; ++i) regular = regular && v[i] != v[i + 1];
    if (!regular) continue;
    Int d = weyl_dim(Weight(vec_sub(v, kRho)));
    chi += w.sign() > 0 ? d : Int(-d);
  }
  return chi;
}

auto CohomEntry::to_string() const -> std::string {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Exact: return gmlab::to_string(value);
    case Kind::UpperBound: return "<=" + gmlab::to_string(value);
  }
  return "?";
}

auto CohomTable::fully_exact() const -> bool {
  return std::none_of(h.begin(), h.end(), [](const CohomEntry& e) { return e.kind == CohomEntry::Kind::UpperBound; });
}

auto CohomTable::exact(int j) const -> std::optional<Int> {
  const auto& e = h.at(static_cast<std::size_t>(j));
  if (e.kind == CohomEntry::Kind::UpperBound) return std::nullopt;
  return e.kind == CohomEntry::Kind::Zero ? Int(0) : e.value;
}

namespace {

auto describe(const BundleSpec& b, const std::vector<Weight>& ws) -> std::string {
  std::string s = "undecidable weights for " + b.name() + ":";
  for (const auto& w : ws) s += " " + w.to_string();
  return s;
}

} // namespace

UndecidableWeights::UndecidableWeights(const BundleSpec& b, std::vector<Weight> ws)
    : std::runtime_error(describe(b, ws)), weights(std::move(ws)) {}

auto bundle_cohomology_direct(const BundleSpec& b, std::uint32_t p) -> CohomTable {
  CohomTable t;
  t.bundle = b;
  t.p = p;
  t.method = "direct";
  t.chi = euler_char(b);
  // Degrees up to 10 occur on the full flag variety; they cancel in the end.
  std::array<Int, 11> contrib{};
  std::vector<Weight> bad;
  for (const auto& [l, mult] : distinct_weights(b)) {
    auto o = line_cohomology(Weight(l), p);
    if (o.kind == BottOutcome::Kind::Undecidable) bad.emplace_back(l);
    else if (o.kind == BottOutcome::Kind::Single) contrib.at(static_cast<std::size_t>(o.degree)) += mult * o.dim;
  }
  if (!bad.empty()) throw UndecidableWeights(b, bad);
  int nonzero = 0;
  for (const auto& c : contrib) nonzero += c != 0;
  for (std::size_t j = 0; j < 7; ++j) {
    if (contrib[j] == 0) continue;
    // A single contributing degree is exact: the filtration bounds every
    // other degree by zero and chi fixes the rest.
    t.h[j] = {nonzero == 1 ? CohomEntry::Kind::Exact : CohomEntry::Kind::UpperBound, contrib[j]};
  }
  if (nonzero == 1) {
    Int alt = 0;
    for (std::size_t j = 0; j < contrib.size(); ++j) alt += (j % 2 ? -1 : 1) * contrib[j];
    if (alt != t.chi) throw std::logic_error("euler characteristic mismatch for " + b.name());
  }
  return t;
}

namespace {

auto merge_entry(const CohomEntry& x, const CohomEntry& y) -> CohomEntry {
  using K = CohomEntry::Kind;
  if (x.kind == K::Zero || y.kind == K::Zero) return {};
  if (x.kind == K::Exact) return x;
  if (y.kind == K::Exact) return y;
  return x.value <= y.value ? x : y;
}

// Closes a single remaining bound with chi.
void close_with_chi(CohomTable& t) {
  int open = -1;
  Int known = 0;
  for (int j = 0; j < 7; ++j) {
    const auto& e = t.h[static_cast<std::size_t>(j)];
    if (e.kind == CohomEntry::Kind::UpperBound) {
      if (open >= 0) return;
      open = j;
    } else if (e.kind == CohomEntry::Kind::Exact) {
      known += (j % 2 ? -1 : 1) * e.value;
    }
  }
  if (open < 0) return;
  Int v = (open % 2 ? -1 : 1) * (t.chi - known);
  t.h[static_cast<std::size_t>(open)] = v == 0 ? CohomEntry{} : CohomEntry{CohomEntry::Kind::Exact, v};
}

auto dual_view(const BundleSpec& b, const CohomTable& d) -> CohomTable {
  CohomTable t;
  t.bundle = b;
  t.p = d.p;
  t.method = "serre-dual";
  t.chi = euler_char(b);
  for (std::size_t j = 0; j < 7; ++j) t.h[j] = d.h[6 - j];
  return t;
}

} // namespace

auto bundle_cohomology(const BundleSpec& b, std::uint32_t p) -> CohomTable {
  CohomTable direct;
  try {
    direct = bundle_cohomology_direct(b, p);
  } catch (const UndecidableWeights& direct_failure) {
    CohomTable d;
    try {
      d = bundle_cohomology_direct(serre_dual(b), p);
    } catch (const UndecidableWeights&) {
      throw direct_failure;
    }
    auto t = dual_view(b, d);
    close_with_chi(t);
    return t;
  }
  if (direct.fully_exact()) return direct;
  CohomTable t = direct;
  try {
    auto d = dual_view(b, bundle_cohomology_direct(serre_dual(b), p));
    for (std::size_t j = 0; j < 7; ++j) t.h[j] = merge_entry(direct.h[j], d.h[j]);
    t.method = "direct+serre-dual";
  } catch (const UndecidableWeights&) {
  }
  close_with_chi(t);
  return t;
}

auto weight_table(const BundleSpec& b, std::uint32_t p, WListing listing) -> std::vector<TableRow> {
  std::vector<TableRow> rows;
  bool any_contribution = false;
  for (const auto& [l, mult] : distinct_weights(b)) {
    TableRow r;
    r.lambda = l;
    r.lambda_rho = vec_add(l, kRho);
    auto sw = sorting_word(l);
    r.w = sw.w;
    r.v = sw.v;
    r.w_dot = vec_sub(sw.v, kRho);
    r.multiplicity = mult;
    r.outcome = line_cohomology(Weight(l), p);
    any_contribution = any_contribution || r.outcome.kind == BottOutcome::Kind::Single;
    rows.push_back(std::move(r));
  }
  bool keep_all = listing == WListing::Always || (listing == WListing::Auto && !any_contribution);
  if (!keep_all)
    for (auto& r : rows)
      if (r.outcome.kind != BottOutcome::Kind::Single) r.w.reset();
  return rows;
}

} // namespace gmlab
