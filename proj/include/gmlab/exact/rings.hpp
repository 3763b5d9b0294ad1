#pragma once

#include "gmlab/exact/finite_field.hpp"
#include "gmlab/exact/integer.hpp"

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

namespace gmlab {

// A ring object supplies constants and unit tests; its elements carry the
// arithmetic operators.
template <class R>
concept Ring = requires(const R& r, const typename R::value_type& a, long long n) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { a + a } -> std::convertible_to<typename R::value_type>;
  { a - a } -> std::convertible_to<typename R::value_type>;
  { a * a } -> std::convertible_to<typename R::value_type>;
  { -a } -> std::convertible_to<typename R::value_type>;
};

// Rings where elimination can pivot on units: fields and local rings.
template <class R>
concept LocalRing = Ring<R> && requires(const R& r, const typename R::value_type& a) {
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.inv(a) } -> std::convertible_to<typename R::value_type>;
};

struct Rationals {
  using value_type = Rat;
  static constexpr bool is_field = true;
  [[nodiscard]] auto zero() const -> Rat { return 0; }
  [[nodiscard]] auto one() const -> Rat { return 1; }
  [[nodiscard]] auto from_int(long long n) const -> Rat { return Rat(static_cast<long>(n)); }
  [[nodiscard]] static auto is_zero(const Rat& a) -> bool { return a == 0; }
  [[nodiscard]] static auto is_unit(const Rat& a) -> bool { return a != 0; }
  [[nodiscard]] auto inv(const Rat& a) const -> Rat { return Rat(1) / a; }
  [[nodiscard]] auto name() const -> std::string { return "Q"; }
};

struct Integers {
  using value_type = Int;
  static constexpr bool is_field = false;
  [[nodiscard]] auto zero() const -> Int { return 0; }
  [[nodiscard]] auto one() const -> Int { return 1; }
  [[nodiscard]] auto from_int(long long n) const -> Int { return Int(static_cast<long>(n)); }
  [[nodiscard]] static auto is_zero(const Int& a) -> bool { return a == 0; }
  [[nodiscard]] auto name() const -> std::string { return "Z"; }
};

class IntegersMod;

// Element of Z/p^k.
struct Zpk {
  const IntegersMod* ring = nullptr;
  std::int64_t v = 0;

  friend auto operator+(Zpk a, Zpk b) -> Zpk;
  friend auto operator-(Zpk a, Zpk b) -> Zpk;
  friend auto operator*(Zpk a, Zpk b) -> Zpk;
  friend auto operator-(Zpk a) -> Zpk;
  auto operator+=(Zpk b) -> Zpk& { return *this = *this + b; }
  auto operator-=(Zpk b) -> Zpk& { return *this = *this - b; }
  auto operator*=(Zpk b) -> Zpk& { return *this = *this * b; }
  friend auto operator==(Zpk a, Zpk b) -> bool { return a.v == b.v; }
};

// Z/p^k, the truncated dvr used for lifting. Interned like FiniteField.
class IntegersMod {
 public:
  using value_type = Zpk;
  static constexpr bool is_field = false;

  static auto get(std::uint32_t p, unsigned k) -> const IntegersMod&;

  [[nodiscard]] auto prime() const -> std::uint32_t { return p_; }
  [[nodiscard]] auto precision() const -> unsigned { return k_; }
  [[nodiscard]] auto modulus() const -> std::int64_t { return m_; }
  [[nodiscard]] auto name() const -> std::string;

  [[nodiscard]] auto zero() const -> Zpk { return {this, 0}; }
  [[nodiscard]] auto one() const -> Zpk { return {this, m_ == 1 ? 0 : 1}; }
  [[nodiscard]] auto from_int(long long n) const -> Zpk;
  [[nodiscard]] auto from_int(const Int& n) const -> Zpk;
  [[nodiscard]] static auto is_zero(Zpk a) -> bool { return a.v == 0; }
  [[nodiscard]] auto is_unit(Zpk a) const -> bool { return a.v % p_ != 0; }
  [[nodiscard]] auto inv(Zpk a) const -> Zpk;
  // p-adic valuation, k for zero.
  [[nodiscard]] auto valuation(Zpk a) const -> unsigned;
  [[nodiscard]] auto random(std::mt19937_64& rng) const -> Zpk {
    return {this, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m_))};
  }

  [[nodiscard]] auto add(std::int64_t a, std::int64_t b) const -> std::int64_t {
    std::int64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  [[nodiscard]] auto mul(std::int64_t a, std::int64_t b) const -> std::int64_t {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m_);
  }

  IntegersMod(const IntegersMod&) = delete;
  auto operator=(const IntegersMod&) -> IntegersMod& = delete;

 private:
  IntegersMod(std::uint32_t p, unsigned k);
  std::uint32_t p_;
  unsigned k_;
  std::int64_t m_;
};

} // namespace gmlab
