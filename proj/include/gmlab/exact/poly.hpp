#pragma once

#include "gmlab/exact/finite_field.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gmlab {

using Exponent = std::vector<std::uint16_t>;

// Graded lexicographic order: total degree first, then the first differing
// exponent decides (larger exponent is larger).
struct GrlexLess {
  auto operator()(const Exponent& a, const Exponent& b) const -> bool;
};

struct PolyContext {
  std::uint32_t p;
  std::vector<std::string> vars;
};

// Sparse polynomial over F_p; terms are kept in grlex order without zeros.
class Poly {
 public:
  using Terms = std::map<Exponent, std::uint32_t, GrlexLess>;

  Poly() = default;
  explicit Poly(std::shared_ptr<const PolyContext> ctx) : ctx_(std::move(ctx)) {}

  [[nodiscard]] auto context() const -> const std::shared_ptr<const PolyContext>& { return ctx_; }
  [[nodiscard]] auto terms() const -> const Terms& { return terms_; }
  [[nodiscard]] auto is_zero() const -> bool { return terms_.empty(); }
  [[nodiscard]] auto total_degree() const -> int;
  [[nodiscard]] auto to_string() const -> std::string;
  // Evaluate at a point of an extension field of F_p.
  [[nodiscard]] auto evaluate(const std::vector<Fq>& point) const -> Fq;

  void add_term(const Exponent& e, std::uint32_t c);

  friend auto operator+(const Poly& a, const Poly& b) -> Poly;
  friend auto operator-(const Poly& a, const Poly& b) -> Poly;
  friend auto operator*(const Poly& a, const Poly& b) -> Poly;
  friend auto operator-(const Poly& a) -> Poly;
  friend auto operator==(const Poly& a, const Poly& b) -> bool { return a.terms_ == b.terms_; }
  auto operator+=(const Poly& b) -> Poly& { return *this = *this + b; }
  auto operator-=(const Poly& b) -> Poly& { return *this = *this - b; }
  auto operator*=(const Poly& b) -> Poly& { return *this = *this * b; }

 private:
  [[nodiscard]] auto p() const -> std::uint32_t { return ctx_->p; }
  std::shared_ptr<const PolyContext> ctx_;
  Terms terms_;
};

class PolyRing {
 public:
  using value_type = Poly;
  static constexpr bool is_field = false;

  PolyRing(std::uint32_t p, std::vector<std::string> vars);

  [[nodiscard]] auto context() const -> const std::shared_ptr<const PolyContext>& { return ctx_; }
  [[nodiscard]] auto nvars() const -> std::size_t { return ctx_->vars.size(); }
  [[nodiscard]] auto characteristic() const -> std::uint32_t { return ctx_->p; }
  [[nodiscard]] auto zero() const -> Poly { return Poly(ctx_); }
  [[nodiscard]] auto one() const -> Poly { return from_int(1); }
  [[nodiscard]] auto from_int(long long n) const -> Poly;
  [[nodiscard]] auto var(std::size_t i) const -> Poly;
  [[nodiscard]] auto var(const std::string& name) const -> Poly;
  [[nodiscard]] static auto is_zero(const Poly& a) -> bool { return a.is_zero(); }
  // Units of F_p[t] are the nonzero constants.
  [[nodiscard]] static auto is_unit(const Poly& a) -> bool;
  [[nodiscard]] auto inv(const Poly& a) const -> Poly;

 private:
  std::shared_ptr<const PolyContext> ctx_;
};

} // namespace gmlab
