#include "gmlab/exact/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gmlab {

auto GrlexLess::operator()(const Exponent& a, const Exponent& b) const -> bool {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

void Poly::add_term(const Exponent& e, std::uint32_t c) {
  c %= p();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second = (it->second + c) % p();
  if (it->second == 0) terms_.erase(it);
}

auto Poly::total_degree() const -> int {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

auto Poly::to_string() const -> std::string {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->vars[i];
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    std::string term;
    if (mono.empty())
      term = std::to_string(it->second);
    else if (it->second == 1)
      term = mono;
    else
      term = std::to_string(it->second) + "*" + mono;
    s += s.empty() ? term : " + " + term;
  }
  return s;
}

auto Poly::evaluate(const std::vector<Fq>& point) const -> Fq {
  if (point.size() != ctx_->vars.size()) throw std::invalid_argument("evaluate: wrong number of values");
  const FiniteField* f = point.empty() ? &FiniteField::get(ctx_->p) : point[0].field;
  Fq acc = f->zero();
  for (const auto& [e, c] : terms_) {
    Fq t = f->from_int(c);
    for (std::size_t i = 0; i < e.size(); ++i) t = t * f->pow(point[i], e[i]);
    acc = acc + t;
  }
  return acc;
}

namespace {
auto ctx_of(const Poly& a, const Poly& b) -> std::shared_ptr<const PolyContext> {
  if (a.context() && b.context() && a.context() != b.context() && a.context()->vars != b.context()->vars)
    throw std::invalid_argument("polynomials from different rings");
  return a.context() ? a.context() : b.context();
}
} // namespace

auto operator+(const Poly& a, const Poly& b) -> Poly {
  Poly r = a;
  r.ctx_ = ctx_of(a, b);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

auto operator-(const Poly& a) -> Poly {
  Poly r(a.ctx_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, a.p() - c);
  return r;
}

auto operator-(const Poly& a, const Poly& b) -> Poly { return a + (-b); }

auto operator*(const Poly& a, const Poly& b) -> Poly {
  Poly r(ctx_of(a, b));
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::uint64_t p = r.p();
  Exponent e(r.ctx_->vars.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, static_cast<std::uint32_t>(static_cast<std::uint64_t>(ca) * cb % p));
    }
  return r;
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> vars)
    : ctx_(std::make_shared<const PolyContext>(PolyContext{p, std::move(vars)})) {
  FiniteField::get(p);  // validates p
}

auto PolyRing::from_int(long long n) const -> Poly {
  Poly r(ctx_);
  long long m = n % static_cast<long long>(ctx_->p);
  if (m < 0) m += ctx_->p;
  r.add_term(Exponent(nvars(), 0), static_cast<std::uint32_t>(m));
  return r;
}

auto PolyRing::var(std::size_t i) const -> Poly {
  if (i >= nvars()) throw std::out_of_range("variable index");
  Poly r(ctx_);
  Exponent e(nvars(), 0);
  e[i] = 1;
  r.add_term(e, 1);
  return r;
}

auto PolyRing::var(const std::string& name) const -> Poly {
  auto it = std::find(ctx_->vars.begin(), ctx_->vars.end(), name);
  if (it == ctx_->vars.end()) throw std::out_of_range("unknown variable " + name);
  return var(static_cast<std::size_t>(it - ctx_->vars.begin()));
}

auto PolyRing::is_unit(const Poly& a) -> bool {
  return a.terms().size() == 1 && a.total_degree() == 0;
}

auto PolyRing::inv(const Poly& a) const -> Poly {
  if (!is_unit(a)) throw std::domain_error("polynomial is not a unit");
  const auto& F = FiniteField::get(ctx_->p);
  return from_int(F.inv(F.element(a.terms().begin()->second)).v);
}

} // namespace gmlab
