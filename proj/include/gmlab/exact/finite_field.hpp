#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gmlab {

class FiniteField;

// Element of GF(p^e). The value packs the coefficients of the residue
// polynomial as base-p digits (constant term lowest).
struct Fq {
  const FiniteField* field = nullptr;
  std::uint32_t v = 0;

  friend auto operator+(Fq a, Fq b) -> Fq;
  friend auto operator-(Fq a, Fq b) -> Fq;
  friend auto operator*(Fq a, Fq b) -> Fq;
  friend auto operator-(Fq a) -> Fq;
  auto operator+=(Fq b) -> Fq& { return *this = *this + b; }
  auto operator-=(Fq b) -> Fq& { return *this = *this - b; }
  auto operator*=(Fq b) -> Fq& { return *this = *this * b; }
  friend auto operator==(Fq a, Fq b) -> bool { return a.v == b.v; }
};

// GF(p^e) with discrete-log tables. Instances are interned and live for the
// whole process, so elements may hold raw pointers to them.
class FiniteField {
 public:
  using value_type = Fq;
  static constexpr bool is_field = true;

  static auto get(std::uint32_t p, unsigned e = 1) -> const FiniteField&;

  [[nodiscard]] auto characteristic() const -> std::uint32_t { return p_; }
  [[nodiscard]] auto degree() const -> unsigned { return e_; }
  [[nodiscard]] auto order() const -> std::uint32_t { return q_; }
  [[nodiscard]] auto name() const -> std::string;
  // Coefficients of the defining monic polynomial, constant term first.
  [[nodiscard]] auto modulus() const -> const std::vector<std::uint32_t>& { return modulus_; }

  [[nodiscard]] auto zero() const -> Fq { return {this, 0}; }
  [[nodiscard]] auto one() const -> Fq { return {this, 1}; }
  [[nodiscard]] auto from_int(long long n) const -> Fq;
  [[nodiscard]] auto element(std::uint32_t index) const -> Fq { return {this, index}; }
  [[nodiscard]] auto generator() const -> Fq { return {this, exp_[1]}; }

  [[nodiscard]] auto add(std::uint32_t a, std::uint32_t b) const -> std::uint32_t;
  [[nodiscard]] auto sub(std::uint32_t a, std::uint32_t b) const -> std::uint32_t;
  [[nodiscard]] auto neg(std::uint32_t a) const -> std::uint32_t;
  [[nodiscard]] auto mul(std::uint32_t a, std::uint32_t b) const -> std::uint32_t {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  [[nodiscard]] static auto is_zero(Fq a) -> bool { return a.v == 0; }
  [[nodiscard]] static auto is_unit(Fq a) -> bool { return a.v != 0; }
  [[nodiscard]] auto inv(Fq a) const -> Fq;
  [[nodiscard]] auto pow(Fq a, std::uint64_t k) const -> Fq;
  [[nodiscard]] auto log(Fq a) const -> std::uint32_t;
  [[nodiscard]] auto is_square(Fq a) const -> bool;
  // Throws std::domain_error for non-squares.
  [[nodiscard]] auto sqrt(Fq a) const -> Fq;
  [[nodiscard]] auto random(std::mt19937_64& rng) const -> Fq;
  [[nodiscard]] auto random_unit(std::mt19937_64& rng) const -> Fq;

  // Image of the generator of `small`'s residue ring in `big`, chosen as the
  // smallest root of small's modulus; returns the embedding table.
  static auto embedding(const FiniteField& small, const FiniteField& big) -> std::vector<std::uint32_t>;

  FiniteField(const FiniteField&) = delete;
  auto operator=(const FiniteField&) -> FiniteField& = delete;

 private:
  FiniteField(std::uint32_t p, unsigned e);
  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> pw_;  // p^i
};

} // namespace gmlab
