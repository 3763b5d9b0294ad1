#include "gmlab/ckmotives.hpp"

#include <algorithm>

namespace gmlab::ck {

auto variety_dim(GMVariety v) -> int { return v == GMVariety::GM4 ? 4 : 6; }
auto variety_name(GMVariety v) -> std::string { return v == GMVariety::GM4 ? "GM4" : "GM6"; }
auto parse_variety(const std::string& s) -> GMVariety {
  if (s == "GM4" || s == "gm4" || s == "4") return GMVariety::GM4;
  if (s == "GM6" || s == "gm6" || s == "6") return GMVariety::GM6;
  throw std::invalid_argument("unknown variety '" + s + "'");
}

auto mono_string(Mono m) -> std::string {
  if (m.a == 0 && m.b == 0) return "1";
  std::string s;
  if (m.a > 0) s += m.a == 1 ? "H" : "H^" + std::to_string(m.a);
  if (m.b > 0) {
    if (!s.empty()) s += "*";
    s += m.b == 1 ? "e2" : "e2^" + std::to_string(m.b);
  }
  return s;
}

namespace {

void check_mono(GMVariety v, Mono m) {
  if (m.a < 0 || m.b < 0) throw std::invalid_argument("negative exponent in " + mono_string(m));
  if (v == GMVariety::GM4 && m.b > 0) throw std::invalid_argument("e2 is not a class on GM4");
}

auto coef_string(const Rat& c, const std::string& body, bool first) -> std::string {
  std::string s;
  Rat a = abs(c);
  if (!first) s += c < 0 ? " - " : " + ";
  else if (c < 0) s += "-";
  if (a != 1) s += to_string(a) + "*";
  return s + body;
}

} // namespace

void TautClass::add(Mono m, const Rat& c) {
  check_mono(v_, m);
  if (m.codim() > variety_dim(v_) || c == 0) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

auto TautClass::monomial(GMVariety v, Mono m, Rat c) -> TautClass {
  TautClass x(v);
  check_mono(v, m);
  if (m.codim() > variety_dim(v)) throw WrongCodimension(mono_string(m) + " exceeds the dimension");
  x.add(m, c);
  return x;
}

auto TautClass::pt(GMVariety v) -> TautClass { return monomial(v, {variety_dim(v), 0}, Rat(1, 10)); }

auto TautClass::codim() const -> int {
  int c = -1;
  for (const auto& [m, _] : t_) {
    if (c >= 0 && m.codim() != c) throw WrongCodimension("inhomogeneous class " + to_string());
    c = m.codim();
  }
  return c;
}

auto TautClass::to_string() const -> std::string {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : t_) {
    s += coef_string(c, mono_string(m), first);
    first = false;
  }
  return s;
}

auto operator+(const TautClass& x, const TautClass& y) -> TautClass {
  if (x.v_ != y.v_) throw std::invalid_argument("classes on different varieties");
  TautClass r = x;
  for (const auto& [m, c] : y.t_) r.add(m, c);
  return r;
}
auto operator-(const TautClass& x, const TautClass& y) -> TautClass { return x + Rat(-1) * y; }
auto operator*(const Rat& c, const TautClass& x) -> TautClass {
  TautClass r(x.v_);
  for (const auto& [m, d] : x.t_) r.add(m, c * d);
  return r;
}
auto operator*(const TautClass& x, const TautClass& y) -> TautClass {
  if (x.v_ != y.v_) throw std::invalid_argument("classes on different varieties");
  TautClass r(x.v_);
  for (const auto& [m1, c1] : x.t_)
    for (const auto& [m2, c2] : y.t_) r.add({m1.a + m2.a, m1.b + m2.b}, c1 * c2);
  return r;
}

void Correspondence::add_term(Mono a, Mono b, const Rat& c) {
  check_mono(v_, a);
  check_mono(v_, b);
  if (a.codim() + b.codim() != variety_dim(v_))
    throw WrongCodimension(mono_string(a) + " x " + mono_string(b) + " is not a degree-0 correspondence");
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace({a, b}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

auto Correspondence::product(const TautClass& alpha, const TautClass& beta) -> Correspondence {
  if (alpha.variety() != beta.variety()) throw std::invalid_argument("classes on different varieties");
  Correspondence r(alpha.variety());
  for (const auto& [a, c] : alpha.terms())
    for (const auto& [b, d] : beta.terms()) r.add_term(a, b, c * d);
  return r;
}

auto Correspondence::diagonal(GMVariety v, Rat c) -> Correspondence {
  Correspondence r(v);
  r.delta_ = std::move(c);
  return r;
}

auto Correspondence::transpose() const -> Correspondence {
  Correspondence r(v_);
  r.delta_ = delta_;
  for (const auto& [ab, c] : t_) r.add_term(ab.second, ab.first, c);
  return r;
}

auto Correspondence::to_string() const -> std::string {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  if (delta_ != 0) {
    s += coef_string(delta_, "Delta", true);
    first = false;
  }
  for (const auto& [ab, c] : t_) {
    s += coef_string(c, "(" + mono_string(ab.first) + " x " + mono_string(ab.second) + ")", first);
    first = false;
  }
  return s;
}

auto operator+(const Correspondence& x, const Correspondence& y) -> Correspondence {
  if (x.v_ != y.v_) throw std::invalid_argument("correspondences on different varieties");
  Correspondence r = x;
  r.delta_ += y.delta_;
  for (const auto& [ab, c] : y.t_) r.add_term(ab.first, ab.second, c);
  return r;
}
auto operator-(const Correspondence& x, const Correspondence& y) -> Correspondence { return x + Rat(-1) * y; }
auto operator*(const Rat& c, const Correspondence& x) -> Correspondence {
  Correspondence r(x.v_);
  r.delta_ = c * x.delta_;
  for (const auto& [ab, d] : x.t_) r.add_term(ab.first, ab.second, c * d);
  return r;
}

auto Degrees::standard(GMVariety v) -> Degrees {
  Degrees d;
  if (v == GMVariety::GM4) {
    d.top[{4, 0}] = 10;
  } else {
    d.top[{6, 0}] = 10;
    d.top[{4, 1}] = 4;
    d.top[{2, 2}] = 2;
    d.top[{0, 3}] = 2;
  }
  return d;
}

auto TautAlgebra::taut_degree(const TautClass& x) const -> Rat {
  if (x.variety() != v_) throw std::invalid_argument("class on a different variety");
  Rat s = 0;
  for (const auto& [m, c] : x.terms()) {
    if (m.codim() != variety_dim(v_))
      throw WrongCodimension("degree of " + x.to_string() + " needs codimension " + std::to_string(variety_dim(v_)));
    auto it = deg_.top.find(m);
    if (it == deg_.top.end()) throw std::out_of_range("no degree for " + mono_string(m));
    s += c * it->second;
  }
  return s;
}

auto TautAlgebra::pairing(const TautClass& x, const TautClass& y) const -> Rat {
  TautClass top(v_);
  TautClass xy = x * y;
  for (const auto& [m, c] : xy.terms())
    if (m.codim() == variety_dim(v_)) top = top + TautClass::monomial(v_, m, c);
  return taut_degree(top);
}

auto TautAlgebra::compose(const Correspondence& g, const Correspondence& f) const -> Correspondence {
  if (g.variety() != v_ || f.variety() != v_) throw std::invalid_argument("correspondence on a different variety");
  Correspondence r = Correspondence::diagonal(v_, g.delta() * f.delta());
  for (const auto& [ab, c] : f.terms()) r.add_term(ab.first, ab.second, g.delta() * c);
  for (const auto& [ab, c] : g.terms()) r.add_term(ab.first, ab.second, f.delta() * c);
  for (const auto& [ab, c1] : g.terms()) {
    TautClass a = TautClass::monomial(v_, ab.first);
    for (const auto& [cd, c2] : f.terms()) {
      Rat k = pairing(TautClass::monomial(v_, cd.second), a);
      if (k != 0) r.add_term(cd.first, ab.second, c1 * c2 * k);
    }
  }
  return r;
}

auto TautAlgebra::act(const Correspondence& c, const TautClass& x) const -> TautClass {
  TautClass r = c.delta() * x;
  for (const auto& [ab, k] : c.terms()) {
    Rat d = pairing(x, TautClass::monomial(v_, ab.first));
    if (d != 0) r = r + (k * d) * TautClass::monomial(v_, ab.second);
  }
  return r;
}

auto TautAlgebra::monomials() const -> std::vector<Mono> {
  std::vector<Mono> out;
  int n = variety_dim(v_);
  for (int b = 0; 2 * b <= n; ++b) {
    if (v_ == GMVariety::GM4 && b > 0) break;
    for (int a = 0; a + 2 * b <= n; ++a) out.push_back({a, b});
  }
  return out;
}

auto TautAlgebra::numerically_equal(const TautClass& x, const TautClass& y) const -> bool {
  TautClass d = x - y;
  for (const auto& m : monomials())
    if (pairing(d, TautClass::monomial(v_, m)) != 0) return false;
  return true;
}

auto f1() -> TautClass {
  auto v = GMVariety::GM6;
  return Rat(1, 2) * TautClass::H(v, 4) - TautClass::monomial(v, {2, 1});
}
auto f2() -> TautClass {
  auto v = GMVariety::GM6;
  return Rat(-1) * TautClass::H(v, 4) + Rat(5, 2) * TautClass::monomial(v, {2, 1});
}

auto projectors(GMVariety v) -> std::vector<Projector> {
  using C = Correspondence;
  using T = TautClass;
  const Rat tenth(1, 10);
  std::vector<Projector> out;
  if (v == GMVariety::GM4) {
    out.push_back({0, C::product(T::pt(v), T::fundamental(v))});
    out.push_back({2, tenth * C::product(T::H(v, 3), T::H(v))});
    out.push_back({6, tenth * C::product(T::H(v), T::H(v, 3))});
    out.push_back({8, C::product(T::fundamental(v), T::pt(v))});
  } else {
    T e1 = T::H(v, 2), e2 = T::e2(v);
    out.push_back({0, C::product(T::pt(v), T::fundamental(v))});
    out.push_back({2, tenth * C::product(T::H(v, 5), T::H(v))});
    out.push_back({4, C::product(f1(), e1) + C::product(f2(), e2)});
    out.push_back({8, C::product(e1, f1()) + C::product(e2, f2())});
    out.push_back({10, tenth * C::product(T::H(v), T::H(v, 5))});
    out.push_back({12, C::product(T::fundamental(v), T::pt(v))});
  }
  int mid = variety_dim(v);
  C rest(v);
  for (const auto& p : out) rest = rest + p.pi;
  out.push_back({mid, C::diagonal(v) - rest});
  std::sort(out.begin(), out.end(), [](const Projector& a, const Projector& b) { return a.index < b.index; });
  return out;
}

auto CkReport::passed() const -> bool {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

auto CkReport::failures() const -> std::vector<std::string> {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c.name);
  return out;
}

auto verify_chow_kunneth(const TautAlgebra& alg) -> CkReport {
  GMVariety v = alg.variety();
  CkReport rep;
  rep.variety = v;
  auto pis = projectors(v);
  auto name = [](int i) { return "pi" + std::to_string(i); };
  for (const auto& p : pis)
    for (const auto& q : pis) {
      Correspondence pq = alg.compose(p.pi, q.pi);
      if (p.index == q.index)
        rep.checks.push_back({name(p.index) + " o " + name(q.index) + " = " + name(p.index), pq == p.pi});
      else
        rep.checks.push_back({name(p.index) + " o " + name(q.index) + " = 0", pq.is_zero()});
    }
  Correspondence sum(v);
  for (const auto& p : pis) sum = sum + p.pi;
  rep.checks.push_back({"sum of projectors = Delta", sum == Correspondence::diagonal(v)});
  int n = variety_dim(v);
  for (const auto& p : pis) {
    bool ok = false;
    for (const auto& q : pis)
      if (q.index == 2 * n - p.index) ok = p.pi.transpose() == q.pi;
    rep.checks.push_back({"transpose " + name(p.index) + " = " + name(2 * n - p.index), ok});
  }
  for (const auto& m : alg.monomials()) {
    TautClass x = TautClass::monomial(v, m);
    for (const auto& p : pis) {
      TautClass y = alg.act(p.pi, x);
      bool own = p.index == 2 * m.codim();
      bool ok = own ? alg.numerically_equal(y, x) : alg.numerically_equal(y, TautClass(v));
      rep.checks.push_back({name(p.index) + " acts on " + mono_string(m) + (own ? " as identity" : " as 0"), ok});
    }
  }
  return rep;
}

void require_chow_kunneth(const TautAlgebra& alg) {
  auto rep = verify_chow_kunneth(alg);
  auto bad = rep.failures();
  if (!bad.empty()) throw IdentityViolation(bad.front());
}

auto solve_delta_system(const Rat& deg_h6) -> std::optional<std::pair<Rat, Rat>> {
  // Unknowns u = deg H^4 e2, w = deg H^2 e2^2. Pairings:
  // e1.f1 = h/2 - u, e1.f2 = -h + 5u/2, e2.f1 = u/2 - w, e2.f2 = -u + 5w/2.
  const Rat& h = deg_h6;
  Rat u = h / 2 - 1;
  if (-h + Rat(5, 2) * u != 0) return std::nullopt;
  Rat w = u / 2;
  if (-u + Rat(5, 2) * w != 1) return std::nullopt;
  return std::make_pair(u, w);
}

} // namespace gmlab::ck
