#include "gmlab/exact/quad_ext.hpp"

#include <stdexcept>

namespace gmlab {

auto QuadExtRing::monic(const PolyRing& base, Poly c1, Poly c0, std::string gen) -> QuadExtRing {
  return QuadExtRing(std::make_shared<const QuadExtContext>(QuadExtContext{base, std::move(c1), std::move(c0), std::move(gen)}));
}

auto QuadExtRing::monic_after_scaling(const PolyRing& base, const Poly& a2, const Poly& a1, const Poly& a0,
                                      std::string gen) -> QuadExtRing {
  if (a2.is_zero()) throw std::invalid_argument("leading coefficient vanishes");
  return monic(base, a1, a2 * a0, std::move(gen));
}

namespace {
auto ctx_of(const QElem& x, const QElem& y) -> const std::shared_ptr<const QuadExtContext>& {
  if (x.context() && y.context() && x.context() != y.context()) throw std::invalid_argument("elements of different extensions");
  return x.context() ? x.context() : y.context();
}
} // namespace

auto operator+(const QElem& x, const QElem& y) -> QElem { return {ctx_of(x, y), x.a_ + y.a_, x.b_ + y.b_}; }
auto operator-(const QElem& x, const QElem& y) -> QElem { return {ctx_of(x, y), x.a_ - y.a_, x.b_ - y.b_}; }
auto operator-(const QElem& x) -> QElem { return {x.ctx_, -x.a_, -x.b_}; }

auto operator*(const QElem& x, const QElem& y) -> QElem {
  const auto& ctx = ctx_of(x, y);
  // (a + b mu)(c + d mu) = ac + (ad + bc) mu + bd mu^2, mu^2 = -c1 mu - c0.
  Poly bd = x.b_ * y.b_;
  Poly lo = x.a_ * y.a_ - bd * ctx->c0;
  Poly hi = x.a_ * y.b_ + x.b_ * y.a_ - bd * ctx->c1;
  return {ctx, std::move(lo), std::move(hi)};
}

auto QElem::to_string() const -> std::string {
  if (is_zero()) return "0";
  std::string s;
  if (!a_.is_zero()) s = a_.to_string();
  if (!b_.is_zero()) {
    std::string g = ctx_ ? ctx_->gen : "mu";
    std::string t = b_.terms().size() == 1 && b_.total_degree() == 0 && b_.terms().begin()->second == 1
                        ? g
                        : "(" + b_.to_string() + ")*" + g;
    s += s.empty() ? t : " + " + t;
  }
  return s;
}

} // namespace gmlab
