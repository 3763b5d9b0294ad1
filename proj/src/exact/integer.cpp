#include "gmlab/exact/integer.hpp"

#include <limits>
#include <stdexcept>

namespace gmlab {

auto make_rat(const Int& num, const Int& den) -> Rat {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

auto to_string(const Int& x) -> std::string { return x.get_str(); }
auto to_string(const Rat& x) -> std::string { return x.get_str(); }

auto parse_int(std::string_view s) -> Int {
  Int r;
  if (r.set_str(std::string(s), 10) != 0) throw std::invalid_argument("not an integer: " + std::string(s));
  return r;
}

auto parse_rat(std::string_view s) -> Rat {
  Rat r;
  if (r.set_str(std::string(s), 10) != 0) throw std::invalid_argument("not a rational: " + std::string(s));
  r.canonicalize();
  return r;
}

auto to_i64(const Int& x) -> std::int64_t {
  if (x > Int(std::to_string(std::numeric_limits<std::int64_t>::max())) ||
      x < Int(std::to_string(std::numeric_limits<std::int64_t>::min())))
    throw std::overflow_error("integer does not fit in 64 bits");
  if (x.fits_slong_p()) return x.get_si();
  return std::stoll(x.get_str());
}

auto floor_div(const Int& a, const Int& b) -> Int {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

auto floor_mod(const Int& a, const Int& b) -> Int {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

auto binomial(const Int& n, unsigned k) -> Int {
  Int num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

auto is_prime(std::uint64_t n) -> bool {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace gmlab
