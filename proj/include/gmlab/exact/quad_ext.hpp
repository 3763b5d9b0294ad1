#pragma once

#include "gmlab/exact/poly.hpp"

#include <memory>
#include <string>

namespace gmlab {

// R[mu]/(mu^2 + c1*mu + c0) over R = F_p[t].
struct QuadExtContext {
  PolyRing base;
  Poly c1;
  Poly c0;
  std::string gen;
};

class QElem {
 public:
  QElem() = default;
  QElem(std::shared_ptr<const QuadExtContext> ctx, Poly a, Poly b) : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {}

  // this = a + b*mu
  [[nodiscard]] auto a() const -> const Poly& { return a_; }
  [[nodiscard]] auto b() const -> const Poly& { return b_; }
  [[nodiscard]] auto is_zero() const -> bool { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] auto to_string() const -> std::string;
  [[nodiscard]] auto context() const -> const std::shared_ptr<const QuadExtContext>& { return ctx_; }

  friend auto operator+(const QElem& x, const QElem& y) -> QElem;
  friend auto operator-(const QElem& x, const QElem& y) -> QElem;
  friend auto operator*(const QElem& x, const QElem& y) -> QElem;
  friend auto operator-(const QElem& x) -> QElem;
  friend auto operator==(const QElem& x, const QElem& y) -> bool { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  std::shared_ptr<const QuadExtContext> ctx_;
  Poly a_, b_;
};

class QuadExtRing {
 public:
  using value_type = QElem;
  static constexpr bool is_field = false;

  // g = mu^2 + c1*mu + c0.
  static auto monic(const PolyRing& base, Poly c1, Poly c0, std::string gen) -> QuadExtRing;
  // For a2*l^2 + a1*l + a0 = 0 the scaled generator mu = a2*l satisfies the
  // monic relation mu^2 + a1*mu + a2*a0 = 0.
  static auto monic_after_scaling(const PolyRing& base, const Poly& a2, const Poly& a1, const Poly& a0,
                                  std::string gen) -> QuadExtRing;

  [[nodiscard]] auto base() const -> const PolyRing& { return ctx_->base; }
  [[nodiscard]] auto zero() const -> QElem { return {ctx_, base().zero(), base().zero()}; }
  [[nodiscard]] auto one() const -> QElem { return {ctx_, base().one(), base().zero()}; }
  [[nodiscard]] auto from_int(long long n) const -> QElem { return {ctx_, base().from_int(n), base().zero()}; }
  [[nodiscard]] auto embed(const Poly& a) const -> QElem { return {ctx_, a, base().zero()}; }
  [[nodiscard]] auto gen() const -> QElem { return {ctx_, base().zero(), base().one()}; }
  [[nodiscard]] static auto is_zero(const QElem& x) -> bool { return x.is_zero(); }
  [[nodiscard]] auto c1() const -> const Poly& { return ctx_->c1; }
  [[nodiscard]] auto c0() const -> const Poly& { return ctx_->c0; }

 private:
  explicit QuadExtRing(std::shared_ptr<const QuadExtContext> ctx) : ctx_(std::move(ctx)) {}
  std::shared_ptr<const QuadExtContext> ctx_;
};

} // namespace gmlab
