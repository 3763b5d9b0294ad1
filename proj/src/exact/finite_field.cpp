#include "gmlab/exact/finite_field.hpp"

#include "gmlab/exact/integer.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gmlab {

namespace {

auto digits(std::uint32_t v, std::uint32_t p, unsigned e) -> std::vector<std::uint32_t> {
  std::vector<std::uint32_t> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

auto pack(const std::vector<std::uint32_t>& d, std::uint32_t p) -> std::uint32_t {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Multiply the residue v by x modulo the monic polynomial with low
// coefficients m (degree e).
auto times_x(std::uint32_t v, const std::vector<std::uint32_t>& m, std::uint32_t p, unsigned e)
    -> std::uint32_t {
  auto d = digits(v, p, e);
  std::uint32_t top = d[e - 1];
  for (unsigned i = e - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  for (unsigned i = 0; i < e; ++i) d[i] = (d[i] + (p - top) * m[i]) % p;
  return pack(d, p);
}

} // namespace

auto FiniteField::get(std::uint32_t p, unsigned e) -> const FiniteField& {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, e))).first;
  return *it->second;
}

FiniteField::FiniteField(std::uint32_t p, unsigned e) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    pw_.push_back(static_cast<std::uint32_t>(q));
    q *= p;
    if (q > (1u << 24)) throw std::invalid_argument("field too large for log tables");
  }
  q_ = static_cast<std::uint32_t>(q);
  exp_.assign(q_, 0);
  log_.assign(q_, 0);

  if (e == 1) {
    modulus_ = {0, 1};
    for (std::uint32_t g = 1; g < p; ++g) {
      std::uint32_t x = 1, k = 0;
      do {
        x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * g % p);
        ++k;
      } while (x != 1);
      if (k == p - 1) {
        x = 1;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
          exp_[i] = x;
          log_[x] = i;
          x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * g % p);
        }
        return;
      }
    }
    if (p == 2) {
      exp_[0] = 1;
      log_[1] = 0;
      return;
    }
    throw std::logic_error("no primitive root");
  }

  // Search monic polynomials of degree e in index order for a primitive one.
  for (std::uint32_t idx = 0; idx < q_; ++idx) {
    auto m = digits(idx, p, e);
    if (m[0] == 0) continue;
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    bool ok = true;
    std::vector<char> seen(q_, 0);
    do {
      if (x == 0 || seen[x]) {
        ok = false;
        break;
      }
      seen[x] = 1;
      exp_[k] = x;
      log_[x] = k;
      x = times_x(x, m, p, e);
      ++k;
    } while (k < q_ - 1);
    if (ok && x == 1) {
      modulus_ = m;
      modulus_.push_back(1);
      return;
    }
  }
  throw std::logic_error("no primitive polynomial");
}

auto FiniteField::name() const -> std::string {
  return e_ == 1 ? "F" + std::to_string(p_) : "F" + std::to_string(q_);
}

auto FiniteField::from_int(long long n) const -> Fq {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}

auto FiniteField::add(std::uint32_t a, std::uint32_t b) const -> std::uint32_t {
  if (e_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t r = 0;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pw_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

auto FiniteField::neg(std::uint32_t a) const -> std::uint32_t {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t r = 0;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * pw_[i];
    a /= p_;
  }
  return r;
}

auto FiniteField::sub(std::uint32_t a, std::uint32_t b) const -> std::uint32_t { return add(a, neg(b)); }

auto FiniteField::inv(Fq a) const -> Fq {
  if (a.v == 0) throw std::domain_error("inverse of zero in " + name());
  std::uint32_t l = log_[a.v];
  return {this, exp_[l == 0 ? 0 : q_ - 1 - l]};
}

auto FiniteField::pow(Fq a, std::uint64_t k) const -> Fq {
  if (k == 0) return one();
  if (a.v == 0) return zero();
  return {this, exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a.v]) * (k % (q_ - 1))) % (q_ - 1))]};
}

auto FiniteField::log(Fq a) const -> std::uint32_t {
  if (a.v == 0) throw std::domain_error("log of zero");
  return log_[a.v];
}

auto FiniteField::is_square(Fq a) const -> bool {
  if (a.v == 0 || p_ == 2) return true;
  return log_[a.v] % 2 == 0;
}

auto FiniteField::sqrt(Fq a) const -> Fq {
  if (a.v == 0) return zero();
  if (!is_square(a)) throw std::domain_error("not a square");
  if (p_ == 2) {
    // Frobenius is bijective; the square root is a^(q/2).
    return pow(a, q_ / 2);
  }
  return {this, exp_[log_[a.v] / 2]};
}

auto FiniteField::random(std::mt19937_64& rng) const -> Fq {
  return {this, static_cast<std::uint32_t>(rng() % q_)};
}

auto FiniteField::random_unit(std::mt19937_64& rng) const -> Fq {
  return {this, static_cast<std::uint32_t>(1 + rng() % (q_ - 1))};
}

auto FiniteField::embedding(const FiniteField& small, const FiniteField& big) -> std::vector<std::uint32_t> {
  if (small.p_ != big.p_ || big.e_ % small.e_ != 0)
    throw std::invalid_argument("no embedding " + small.name() + " -> " + big.name());
  std::vector<std::uint32_t> table(small.q_);
  if (small.e_ == 1) {
    for (std::uint32_t i = 0; i < small.q_; ++i) table[i] = i;
    return table;
  }
  // Find the smallest root of small's modulus in big.
  for (std::uint32_t r = 0; r < big.q_; ++r) {
    Fq root{&big, r};
    Fq val = big.zero();
    Fq pw = big.one();
    for (std::uint32_t c : small.modulus_) {
      val = val + big.from_int(c) * pw;
      pw = pw * root;
    }
    if (val.v != 0) continue;
    for (std::uint32_t i = 0; i < small.q_; ++i) {
      auto d = digits(i, small.p_, small.e_);
      Fq img = big.zero();
      Fq rp = big.one();
      for (unsigned j = 0; j < small.e_; ++j) {
        img = img + big.from_int(d[j]) * rp;
        rp = rp * root;
      }
      table[i] = img.v;
    }
    return table;
  }
  throw std::logic_error("modulus has no root in extension");
}

auto operator+(Fq a, Fq b) -> Fq {
  const auto* f = a.field ? a.field : b.field;
  return {f, f->add(a.v, b.v)};
}
auto operator-(Fq a, Fq b) -> Fq {
  const auto* f = a.field ? a.field : b.field;
  return {f, f->sub(a.v, b.v)};
}
auto operator*(Fq a, Fq b) -> Fq {
  const auto* f = a.field ? a.field : b.field;
  return {f, f->mul(a.v, b.v)};
}
auto operator-(Fq a) -> Fq { return {a.field, a.field->neg(a.v)}; }

} // namespace gmlab
