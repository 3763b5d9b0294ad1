#include "gmlab/exact/int_matrix.hpp"

#include <stdexcept>

namespace gmlab {

auto int_matrix(const std::vector<std::vector<long long>>& rows) -> IntMatrix {
  std::vector<std::vector<Int>> r;
  for (const auto& row : rows) {
    std::vector<Int> x;
    for (long long v : row) x.emplace_back(static_cast<long>(v));
    r.push_back(std::move(x));
  }
  return IntMatrix::from_rows(r, Int(0));
}

auto int_identity(std::size_t n) -> IntMatrix { return identity_matrix(Integers{}, n); }

auto int_mul(const IntMatrix& a, const IntMatrix& b) -> IntMatrix { return mat_mul(Integers{}, a, b); }

namespace {

// rows (a, b) <- (s*a + t*b, u*a + v*b)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u,
                  const Int& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int x = m(a, j), y = m(b, j);
    m(a, j) = s * x + t * y;
    m(b, j) = u * x + v * y;
  }
}

void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace

auto hnf(const IntMatrix& m) -> HnfResult {
  IntMatrix h = m;
  IntMatrix u = int_identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Int a = h(r, c), b = h(i, c), g, s, t;
      xgcd(a, b, g, s, t);
      Int ua = -b / g, ub = a / g;
      combine_rows(h, r, i, s, t, ua, ub);
      combine_rows(u, r, i, s, t, ua, ub);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Int q = floor_div(h(k, c), h(r, c));
      if (q == 0) continue;
      for (std::size_t j = 0; j < h.cols(); ++j) h(k, j) -= q * h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(k, j) -= q * u(r, j);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

auto snf(const IntMatrix& m) -> SnfResult {
  IntMatrix d = m;
  IntMatrix p = int_identity(m.rows());
  IntMatrix q = int_identity(m.cols());
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // Move a nonzero entry of least absolute value to (t, t).
    bool found = false;
    for (;;) {
      std::size_t bi = 0, bj = 0;
      found = false;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
          if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
            found = true;
          }
      if (!found) break;
      d.swap_rows(t, bi);
      p.swap_rows(t, bi);
      d.swap_cols(t, bj);
      q.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int f = floor_div(d(i, t), d(t, t));
        for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) -= f * d(t, j);
        for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) -= f * p(t, j);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int f = floor_div(d(t, j), d(t, t));
        for (std::size_t i = 0; i < d.rows(); ++i) d(i, j) -= f * d(i, t);
        for (std::size_t i = 0; i < q.rows(); ++i) q(i, j) -= f * q(i, t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with an entry not divisible by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            for (std::size_t k = 0; k < d.cols(); ++k) d(t, k) += d(i, k);
            for (std::size_t k = 0; k < p.cols(); ++k) p(t, k) += p(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (!found) break;
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols(); ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < p.cols(); ++j) p(t, j) = -p(t, j);
    }
  }
  SnfResult out{d, p, q, {}};
  for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(d(t, t));
  return out;
}

auto det_bareiss(const IntMatrix& m) -> Int {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

auto rank_bareiss(const IntMatrix& m) -> std::size_t {
  IntMatrix a = m;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t s = r;
    while (s < a.rows() && a(s, c) == 0) ++s;
    if (s == a.rows()) continue;
    a.swap_rows(r, s);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

auto FieldDesc::prime(std::uint32_t p) -> FieldDesc {
  if (!is_prime(p)) throw std::invalid_argument("FieldDesc::prime needs a prime");
  return {p};
}

auto reduce_mod(const IntMatrix& m, const FiniteField& f) -> Matrix<Fq> {
  Matrix<Fq> r(m.rows(), m.cols(), f.zero());
  Int p = f.characteristic();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f.element(static_cast<std::uint32_t>(floor_mod(m(i, j), p).get_ui()));
  return r;
}

auto rank_over(const IntMatrix& m, FieldDesc f) -> std::size_t {
  if (f.p == 0) return rank_bareiss(m);
  return rank(FiniteField::get(f.p), reduce_mod(m, FiniteField::get(f.p)));
}

auto kernel_over(const IntMatrix& m, FieldDesc f) -> std::vector<std::vector<Rat>> {
  std::vector<std::vector<Rat>> out;
  if (f.p == 0) {
    Matrix<Rat> q(m.rows(), m.cols(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return kernel(Rationals{}, q);
  }
  const auto& F = FiniteField::get(f.p);
  for (const auto& v : kernel(F, reduce_mod(m, F))) {
    std::vector<Rat> x;
    for (const auto& e : v) x.emplace_back(static_cast<unsigned long>(e.v));
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace gmlab
