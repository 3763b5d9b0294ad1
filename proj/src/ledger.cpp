#include "gmlab/ledger.hpp"

#include <algorithm>
#include <sstream>

namespace gmlab {

auto variety_dim(Variety v) -> int { return v == Variety::Y ? 5 : 6; }

auto variety_name(Variety v) -> std::string {
  switch (v) {
    case Variety::Gr: return "Gr";
    case Variety::Y: return "Y";
    case Variety::X: return "X";
  }
  return "?";
}

auto parse_variety(const std::string& s) -> Variety {
  if (s == "Gr" || s == "gr") return Variety::Gr;
  if (s == "Y" || s == "y") return Variety::Y;
  if (s == "X" || s == "x") return Variety::X;
  throw std::invalid_argument("unknown variety '" + s + "' (expected Gr, Y or X)");
}

auto SheafRef::omega(Variety v, int i, long m) -> SheafRef {
  if (i < 0 || i > variety_dim(v)) throw std::invalid_argument("Omega^i out of range");
  if (i == 0) return O(v, m);
  return {v, SheafKind::Omega, i, m};
}

auto SheafRef::restricted_omega(int i, long m) -> SheafRef {
  if (i < 0 || i > 6) throw std::invalid_argument("restricted Omega^i out of range");
  if (i == 0) return O(Variety::Y, m);
  return {Variety::Y, SheafKind::RestrictedOmega, i, m};
}

auto SheafRef::name() const -> std::string {
  std::string t = "(" + std::to_string(m) + ")";
  std::string v = variety_name(var) + ":";
  switch (kind) {
    case SheafKind::O: return v + "O" + t;
    case SheafKind::Omega: return v + "Omega^" + std::to_string(i) + t;
    case SheafKind::Tangent: return v + "T" + t;
    case SheafKind::RestrictedOmega: return v + "Omega^" + std::to_string(i) + "_Gr" + t + "|Y";
    case SheafKind::RestrictedTangent: return v + "T_Gr" + t + "|Y";
  }
  return v + "?";
}

namespace {

auto gr_bundle(const SheafRef& s) -> BundleSpec {
  switch (s.kind) {
    case SheafKind::O: return BundleSpec::structure(s.m);
    case SheafKind::Omega: return BundleSpec::omega(s.i, s.m);
    case SheafKind::Tangent: return BundleSpec::tangent(s.m);
    default: throw std::invalid_argument("not a Grassmannian sheaf: " + s.name());
  }
}

auto gr_chi(int i, long m) -> Int { return euler_char(i == 0 ? BundleSpec::structure(m) : BundleSpec::omega(i, m)); }

auto chi_y_omega(int i, long m) -> Int {
  if (i == 0) return gr_chi(0, m) - gr_chi(0, m - 2);
  return gr_chi(i, m) - gr_chi(i, m - 2) - chi_y_omega(i - 1, m - 2);
}

} // namespace

auto chi(const SheafRef& s) -> Int {
  switch (s.var) {
    case Variety::Gr: return euler_char(gr_bundle(s));
    case Variety::Y:
      switch (s.kind) {
        case SheafKind::O: return chi_y_omega(0, s.m);
        case SheafKind::Omega: return chi_y_omega(s.i, s.m);
        case SheafKind::RestrictedOmega: return gr_chi(s.i, s.m) - gr_chi(s.i, s.m - 2);
        case SheafKind::RestrictedTangent:
          return euler_char(BundleSpec::tangent(s.m)) - euler_char(BundleSpec::tangent(s.m - 2));
        case SheafKind::Tangent:
          return euler_char(BundleSpec::tangent(s.m)) - euler_char(BundleSpec::tangent(s.m - 2)) - chi_y_omega(0, s.m + 2);
      }
      break;
    case Variety::X:
      switch (s.kind) {
        case SheafKind::O: return gr_chi(0, s.m) + gr_chi(0, s.m - 1);
        case SheafKind::Omega: return gr_chi(s.i, s.m) + gr_chi(s.i, s.m - 1) + chi_y_omega(s.i - 1, s.m - 1);
        case SheafKind::Tangent:
          return euler_char(BundleSpec::tangent(s.m)) + euler_char(BundleSpec::tangent(s.m - 1)) - chi_y_omega(0, s.m + 2);
        default: break;
      }
      break;
  }
  throw std::invalid_argument("no Euler characteristic rule for " + s.name());
}

auto chi_X_twist(long m) -> Int {
  auto c = [&](long shift) { return binomial(Int(m + shift), 10); };
  return c(10) - 6 * c(8) + 5 * c(7) + 5 * c(6) - 6 * c(5) + c(3);
}

auto Dim::to_string() const -> std::string {
  if (exact) return gmlab::to_string(*exact);
  if (upper) return "<=" + gmlab::to_string(*upper);
  return "?";
}

Ledger::Ledger(std::uint32_t p) : p_(p) {
  if (p < 5) throw std::invalid_argument("the ledger needs p >= 5");
}

auto Ledger::touch(const SheafRef& s) -> std::array<Dim, 7>& {
  auto [it, fresh] = facts_.try_emplace(s);
  if (fresh)
    for (int j = variety_dim(s.var) + 1; j < 7; ++j) it->second[j].exact = 0;
  return it->second;
}

auto Ledger::get(const SheafRef& s, int j) const -> Dim {
  if (j < 0 || j > variety_dim(s.var)) return {Int(0), Int(0)};
  auto it = facts_.find(s);
  if (it == facts_.end()) return {};
  return it->second[j];
}

auto Ledger::set_exact(const SheafRef& s, int j, const Int& v, const std::string& rule, const std::string& label)
    -> bool {
  auto& d = touch(s)[j];
  std::string where = rule + " [" + label + "] on h^" + std::to_string(j) + "(" + s.name() + ")";
  if (v < 0) throw ContradictionInLedger("negative dimension from " + where);
  if (d.exact) {
    if (*d.exact != v)
      throw ContradictionInLedger(where + " gives " + gmlab::to_string(v) + " but ledger has " + gmlab::to_string(*d.exact));
    return false;
  }
  if (d.upper && v > *d.upper)
    throw ContradictionInLedger(where + " gives " + gmlab::to_string(v) + " above bound " + gmlab::to_string(*d.upper));
  d.exact = v;
  d.upper = v;
  trace_.push_back({rule, label, s, j, d});
  return true;
}

auto Ledger::set_upper(const SheafRef& s, int j, const Int& v, const std::string& rule, const std::string& label)
    -> bool {
  auto& d = touch(s)[j];
  if (d.exact || (d.upper && *d.upper <= v)) return false;
  if (v == 0) return set_exact(s, j, 0, rule, label);
  d.upper = v;
  trace_.push_back({rule, label, s, j, d});
  return true;
}

void Ledger::import_gr(const SheafRef& s) {
  if (s.var != Variety::Gr) throw std::invalid_argument("import_gr on " + s.name());
  if (facts_.count(s) && std::all_of(facts_[s].begin(), facts_[s].end(), [](const Dim& d) { return d.known(); }))
    return;
  touch(s);
  CohomTable t;
  try {
    t = bundle_cohomology(gr_bundle(s), p_);
  } catch (const UndecidableWeights& e) {
    for (const auto& w : e.weights)
      if (std::find(undecidable_.begin(), undecidable_.end(), w) == undecidable_.end()) undecidable_.push_back(w);
    return;
  }
  std::string label = "bott " + t.method + " p=" + std::to_string(p_);
  for (int j = 0; j < 7; ++j) {
    const auto& e = t.h[j];
    if (e.kind == CohomEntry::Kind::UpperBound) set_upper(s, j, e.value, "bott", label);
    else set_exact(s, j, e.kind == CohomEntry::Kind::Zero ? Int(0) : e.value, "bott", label);
  }
}

void Ledger::add_ses(const std::string& label, const Term& a, const Term& b, const Term& c) {
  for (const auto* t : {&a, &b, &c})
    for (const auto& s : *t) {
      if (s.var == Variety::Gr) import_gr(s);
      else touch(s);
    }
  seqs_.push_back({label, a, b, c});
  apply_ses(seqs_.back());
}

void Ledger::add_axiom(const SheafRef& s, int j, const Int& value, const std::string& label) {
  set_exact(s, j, value, "axiom", label);
}

auto Ledger::apply_ses(const Seq& q) -> bool {
  struct Slot {
    const Term* term;
    int j;
  };
  std::vector<Slot> slots;
  for (int j = 0; j < 7; ++j)
    for (const auto* t : {&q.a, &q.b, &q.c}) slots.push_back({t, j});
  auto value = [&](const Slot& s) -> Dim {
    Dim d{Int(0), Int(0)};
    for (const auto& r : *s.term) {
      Dim x = get(r, s.j);
      if (d.exact && x.exact) *d.exact += *x.exact;
      else d.exact.reset();
      if (d.upper && x.upper) *d.upper += *x.upper;
      else d.upper.reset();
    }
    return d;
  };
  bool changed = false;
  std::size_t n = slots.size();
  std::vector<Dim> vals(n);
  for (std::size_t k = 0; k < n; ++k) vals[k] = value(slots[k]);
  auto is_zero = [&](std::size_t k) { return vals[k].exact && *vals[k].exact == 0; };

  for (std::size_t k = 0; k < n;) {
    if (is_zero(k)) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < n && !is_zero(k)) ++k;
    std::vector<std::size_t> unknown;
    Int alt = 0;
    for (std::size_t r = start; r < k; ++r) {
      if (!vals[r].exact) unknown.push_back(r);
      else alt += ((r - start) % 2 ? -1 : 1) * *vals[r].exact;
    }
    if (unknown.empty() && alt != 0)
      throw ContradictionInLedger("sequence [" + q.label + "] fails the alternating-sum test");
    if (unknown.size() == 1 && slots[unknown[0]].term->size() == 1) {
      std::size_t u = unknown[0];
      Int v = ((u - start) % 2 ? alt : Int(-alt));
      changed |= set_exact(slots[u].term->front(), slots[u].j, v, "ses", q.label);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (vals[k].exact || slots[k].term->size() != 1) continue;
    Dim left = k > 0 ? vals[k - 1] : Dim{Int(0), Int(0)};
    Dim right = k + 1 < n ? vals[k + 1] : Dim{Int(0), Int(0)};
    if (left.upper && right.upper)
      changed |= set_upper(slots[k].term->front(), slots[k].j, *left.upper + *right.upper, "ses", q.label);
  }
  return changed;
}

namespace {

auto serre_partner(const SheafRef& s) -> std::optional<SheafRef> {
  if (s.var == Variety::Gr) return std::nullopt;
  int d = variety_dim(s.var);
  switch (s.kind) {
    case SheafKind::O: return SheafRef::omega(s.var, d, -s.m);
    case SheafKind::Omega: return SheafRef::omega(s.var, d - s.i, -s.m);
    case SheafKind::Tangent: return SheafRef::omega(s.var, 1, -s.m - (s.var == Variety::Y ? 3 : 4));
    default: return std::nullopt;
  }
}

} // namespace

auto Ledger::apply_serre(const SheafRef& s) -> bool {
  auto partner = serre_partner(s);
  if (!partner) return false;
  int d = variety_dim(s.var);
  std::string label = "dual of " + partner->name();
  bool changed = false;
  for (int j = 0; j <= d; ++j) {
    Dim x = get(*partner, d - j);
    if (x.exact) changed |= set_exact(s, j, *x.exact, "serre", label);
    else if (x.upper) changed |= set_upper(s, j, *x.upper, "serre", label);
  }
  return changed;
}

auto Ledger::apply_raynaud(const SheafRef& s) -> bool {
  if (s.var == Variety::Gr || s.m >= 0) return false;
  if (s.kind != SheafKind::O && s.kind != SheafKind::Omega) return false;
  long bound = std::min<long>(p_, variety_dim(s.var));
  bool changed = false;
  for (int j = 0; s.i + j < bound; ++j) changed |= set_exact(s, j, 0, "raynaud", "i+j < min(p, dim), lifts to W(k)");
  return changed;
}

auto Ledger::apply_chi(const SheafRef& s) -> bool {
  const auto& row = facts_.at(s);
  int d = variety_dim(s.var);
  std::optional<int> missing;
  Int alt = 0;
  for (int j = 0; j <= d; ++j) {
    if (row[j].exact) alt += (j % 2 ? -1 : 1) * *row[j].exact;
    else if (missing) return false;
    else missing = j;
  }
  Int target = chi(s);
  if (!missing) {
    if (alt != target)
      throw ContradictionInLedger("chi(" + s.name() + ") = " + gmlab::to_string(target) + " but degrees sum to " +
                                  gmlab::to_string(alt));
    return false;
  }
  Int rest = target - alt;
  Int v = (*missing % 2) ? Int(-rest) : rest;
  return set_exact(s, *missing, v, "chi", "chi = " + gmlab::to_string(target));
}

void Ledger::saturate() {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& q : seqs_) changed |= apply_ses(q);
    std::vector<SheafRef> keys;
    for (const auto& [k, v] : facts_) keys.push_back(k);
    for (const auto& k : keys)
      if (auto partner = serre_partner(k)) {
        touch(*partner);
        changed |= apply_serre(k) | apply_serre(*partner);
      }
    keys.clear();
    for (const auto& [k, v] : facts_) keys.push_back(k);
    for (const auto& k : keys) changed |= apply_raynaud(k);
    for (const auto& k : keys)
      if (k.var != Variety::Gr) changed |= apply_chi(k);
  }
}

void Ledger::derive_y_omega(int i, long m) {
  if (!derived_y_.insert({i, m}).second) return;
  auto restricted = SheafRef::restricted_omega(i, m);
  add_ses("0 -> Omega^" + std::to_string(i) + "_Gr(m-2) -> Omega^" + std::to_string(i) + "_Gr(m) -> restriction -> 0, m=" +
              std::to_string(m),
          {SheafRef::omega(Variety::Gr, i, m - 2)}, {SheafRef::omega(Variety::Gr, i, m)}, {restricted});
  if (i == 0) return;
  derive_y_omega(i - 1, m - 2);
  add_ses("0 -> Omega^" + std::to_string(i - 1) + "_Y(m-2) -> Omega^" + std::to_string(i) + "_Gr(m)|Y -> Omega^" +
              std::to_string(i) + "_Y(m) -> 0, m=" + std::to_string(m),
          {SheafRef::omega(Variety::Y, i - 1, m - 2)}, {restricted}, {SheafRef::omega(Variety::Y, i, m)});
}

auto HodgeDiamond::serre_symmetric() const -> bool {
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j <= dim; ++j)
      if (at(i, j) != at(dim - i, dim - j)) return false;
  return true;
}

auto HodgeDiamond::hodge_symmetric() const -> bool {
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j <= dim; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

auto HodgeDiamond::topological_euler() const -> Int {
  Int e = 0;
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j <= dim; ++j) e += ((i + j) % 2 ? -1 : 1) * at(i, j);
  return e;
}

auto HodgeDiamond::layout() const -> std::string {
  std::size_t width = 1;
  for (const auto& r : h)
    for (const auto& x : r) width = std::max(width, gmlab::to_string(x).size());
  std::ostringstream os;
  for (int k = 0; k <= 2 * dim; ++k) {
    int lo = std::max(0, k - dim), hi = std::min(k, dim);
    int count = hi - lo + 1;
    os << std::string(static_cast<std::size_t>(dim + 1 - count) * (width + 1), ' ');
    for (int i = hi; i >= lo; --i) {
      std::string s = gmlab::to_string(at(i, k - i));
      os << std::string(width - s.size(), ' ') << s;
      if (i > lo) os << std::string(width + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

namespace {

auto collect(const Ledger& L, Variety v) -> HodgeDiamond {
  HodgeDiamond d;
  d.dim = variety_dim(v);
  d.h.assign(static_cast<std::size_t>(d.dim + 1), std::vector<Int>(static_cast<std::size_t>(d.dim + 1)));
  std::vector<std::string> missing;
  for (int i = 0; i <= d.dim; ++i)
    for (int j = 0; j <= d.dim; ++j) {
      auto x = L.exact(SheafRef::omega(v, i, 0), j);
      if (!x) missing.push_back("h^" + std::to_string(j) + "(Omega^" + std::to_string(i) + ")");
      else d.h[i][j] = *x;
    }
  if (!missing.empty()) {
    std::string msg = "diamond of " + variety_name(v) + " not determined:";
    for (const auto& m : missing) msg += " " + m;
    throw UndecidableDependency(msg, L.undecidable());
  }
  for (int i = 0; i <= d.dim; ++i) {
    Int alt = 0;
    for (int j = 0; j <= d.dim; ++j) alt += (j % 2 ? -1 : 1) * d.h[i][j];
    if (alt != chi(SheafRef::omega(v, i, 0)))
      throw ContradictionInLedger("column " + std::to_string(i) + " of " + variety_name(v) + " misses its chi");
  }
  if (!d.serre_symmetric()) throw ContradictionInLedger("diamond of " + variety_name(v) + " is not Serre symmetric");
  return d;
}

void script_x(Ledger& L) {
  for (int i = 0; i <= 3; ++i) {
    Term c;
    if (i >= 1) {
      L.derive_y_omega(i - 1, -1);
      c.push_back(SheafRef::omega(Variety::Y, i - 1, -1));
    }
    L.add_ses("0 -> Omega^" + std::to_string(i) + "_Gr + Omega^" + std::to_string(i) + "_Gr(-1) -> g_*Omega^" +
                  std::to_string(i) + "_X -> Omega^" + std::to_string(i - 1) + "_Y(-1) -> 0",
              {SheafRef::omega(Variety::Gr, i, 0), SheafRef::omega(Variety::Gr, i, -1)},
              {SheafRef::omega(Variety::X, i, 0)}, c);
  }
}

} // namespace

auto derive_diamond(Variety v, std::uint32_t p) -> Derivation {
  Ledger L(p);
  switch (v) {
    case Variety::Gr:
      for (int i = 0; i <= 6; ++i) L.import_gr(SheafRef::omega(Variety::Gr, i, 0));
      break;
    case Variety::Y:
      for (int i = 0; i <= 2; ++i) L.derive_y_omega(i, 0);
      break;
    case Variety::X: script_x(L); break;
  }
  L.saturate();
  return {collect(L, v), L.trace()};
}

auto topological_euler(Variety v, std::uint32_t p) -> Int { return derive_diamond(v, p).diamond.topological_euler(); }

auto tangent_report(std::uint32_t p) -> TangentReport {
  Ledger L(p);
  const auto OY1 = SheafRef::O(Variety::Y, 1), OY2 = SheafRef::O(Variety::Y, 2);
  const auto TY = SheafRef::tangent(Variety::Y, 0), TX = SheafRef::tangent(Variety::X, 0);
  const auto TGr = SheafRef::tangent(Variety::Gr, 0);
  L.derive_y_omega(0, 1);
  L.derive_y_omega(0, 2);
  L.add_ses("0 -> T_Gr(-2) -> T_Gr -> T_Gr|Y -> 0", {SheafRef::tangent(Variety::Gr, -2)}, {TGr},
            {SheafRef::restricted_tangent(0)});
  L.add_ses("0 -> T_Y -> T_Gr|Y -> N = O_Y(2) -> 0", {TY}, {SheafRef::restricted_tangent(0)}, {OY2});
  L.add_ses("0 -> g_*T_X -> T_Gr + T_Gr(-1) -> O_Y(2) -> 0", {TX}, {TGr, SheafRef::tangent(Variety::Gr, -1)}, {OY2});
  TangentReport r;
  r.axioms.emplace_back("H^0(Y, T_Y) = 0: beta_Y injective, no global vector field of Gr is tangent to Y "
                        "(diagonal vector-field search)");
  r.axioms.emplace_back("H^0(X, T_X) = 0: beta_X factors as H^0(T_Gr) = H^0(T_Gr|Y) followed by beta_Y");
  r.axioms.emplace_back("gamma^*: H^{3,3}(Gr) -> H^{3,3}(X) injective");
  L.add_axiom(TY, 0, 0, r.axioms[0]);
  L.add_axiom(TX, 0, 0, r.axioms[1]);
  L.saturate();
  auto need = [&](const SheafRef& s, int j) {
    auto x = L.exact(s, j);
    if (!x) throw UndecidableDependency("h^" + std::to_string(j) + "(" + s.name() + ") not determined", L.undecidable());
    return *x;
  };
  for (int j = 0; j <= 5; ++j) r.h_TY[j] = need(TY, j);
  for (int j = 0; j <= 6; ++j) r.h_TX[j] = need(TX, j);
  r.h0_OY1 = need(OY1, 0);
  r.h0_OY2 = need(OY2, 0);
  auto dx = derive_diamond(Variety::X, p).diamond;
  auto dg = derive_diamond(Variety::Gr, p).diamond;
  r.h33_00 = dx.at(3, 3) - dg.at(3, 3);
  r.h24 = dx.at(2, 4);
  r.trace = L.trace();
  return r;
}

} // namespace gmlab
