#include "gmlab/exact/rings.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gmlab {

auto IntegersMod::get(std::uint32_t p, unsigned k) -> const IntegersMod& {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<IntegersMod>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<IntegersMod>(new IntegersMod(p, k))).first;
  return *it->second;
}

IntegersMod::IntegersMod(std::uint32_t p, unsigned k) : p_(p), k_(k), m_(1) {
  if (!is_prime(p)) throw std::invalid_argument("Z/p^k needs a prime p");
  if (k == 0) throw std::invalid_argument("precision must be positive");
  for (unsigned i = 0; i < k; ++i) {
    if (m_ > (std::int64_t{1} << 62) / p) throw std::invalid_argument("p^k too large");
    m_ *= p;
  }
}

auto IntegersMod::name() const -> std::string {
  return k_ == 1 ? "F" + std::to_string(p_) : "Z/" + std::to_string(p_) + "^" + std::to_string(k_);
}

auto IntegersMod::from_int(long long n) const -> Zpk {
  std::int64_t r = n % m_;
  if (r < 0) r += m_;
  return {this, r};
}

auto IntegersMod::from_int(const Int& n) const -> Zpk {
  Int r = floor_mod(n, Int(std::to_string(m_)));
  return {this, to_i64(r)};
}

auto IntegersMod::inv(Zpk a) const -> Zpk {
  if (!is_unit(a)) throw std::domain_error("non-unit in " + name());
  // Extended Euclid on (a, m).
  __int128 r0 = m_, r1 = a.v, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  __int128 x = s0 % m_;
  if (x < 0) x += m_;
  return {this, static_cast<std::int64_t>(x)};
}

auto IntegersMod::valuation(Zpk a) const -> unsigned {
  if (a.v == 0) return k_;
  unsigned v = 0;
  std::int64_t x = a.v;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

namespace {
auto ring_of(Zpk a, Zpk b) -> const IntegersMod* { return a.ring ? a.ring : b.ring; }
} // namespace

auto operator+(Zpk a, Zpk b) -> Zpk {
  const auto* r = ring_of(a, b);
  return {r, r->add(a.v, b.v)};
}
auto operator-(Zpk a, Zpk b) -> Zpk {
  const auto* r = ring_of(a, b);
  return {r, r->add(a.v, b.v == 0 ? 0 : r->modulus() - b.v)};
}
auto operator*(Zpk a, Zpk b) -> Zpk {
  const auto* r = ring_of(a, b);
  return {r, r->mul(a.v, b.v)};
}
auto operator-(Zpk a) -> Zpk { return {a.ring, a.v == 0 ? 0 : a.ring->modulus() - a.v}; }

} // namespace gmlab
