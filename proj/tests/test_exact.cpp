#include "gmlab/exact/int_matrix.hpp"
#include "gmlab/exact/poly.hpp"
#include "gmlab/exact/quad_ext.hpp"

#include <doctest.h>

#include <random>

using namespace gmlab;

namespace {

// Cofactor expansion, used as an independent determinant oracle.
auto cofactor_det(const IntMatrix& m) -> Int {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Int d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1, Int(0));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, kk++) = m(i, k);
      }
    Int c = m(0, j) * cofactor_det(minor);
    d += (j % 2 == 0) ? c : Int(-c);
  }
  return d;
}

auto random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) -> IntMatrix {
  IntMatrix m(r, c, Int(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

const IntMatrix kCyclic = int_matrix({{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 0, 0, 1}});

} // namespace

TEST_CASE("rational normalization") {
  Rat r = make_rat(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(to_string(parse_rat("10/4")) == "5/2");
}

TEST_CASE("polynomial binomial") {
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(5, 10) == 0);
  CHECK(binomial(-1, 10) == 1);
  CHECK(binomial(-2, 2) == 3);
}

TEST_CASE("hnf examples") {
  auto id = int_identity(5);
  auto r = hnf(id);
  CHECK(r.H == id);
  CHECK(r.U == id);

  auto d = int_matrix({{2, 0}, {0, 3}});
  auto rd = hnf(d);
  CHECK(rd.H == d);
  CHECK(rd.U == int_identity(2));

  auto m = int_matrix({{1, 1, 0, 0, 0}, {2, 1, 1, 0, 0}});
  auto rm = hnf(m);
  CHECK(rm.H(0, 0) == 1);
  CHECK(rm.H(1, 0) == 0);
  CHECK(rm.H(1, 1) == 1);
  CHECK(int_mul(rm.U, m) == rm.H);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 6, 6);
    auto [h, u] = hnf(m);
    CHECK(int_mul(u, m) == h);
    CHECK(abs(det_bareiss(u)) == 1);
    // Pivots positive, entries above reduced, zeros below.
    std::size_t row = 0;
    for (std::size_t c = 0; c < h.cols() && row < h.rows(); ++c) {
      if (h(row, c) == 0) continue;
      CHECK(h(row, c) > 0);
      for (std::size_t k = 0; k < row; ++k) CHECK((h(k, c) >= 0 && h(k, c) < h(row, c)));
      for (std::size_t k = row + 1; k < h.rows(); ++k) CHECK(h(k, c) == 0);
      ++row;
    }
  }
}

TEST_CASE("snf transforms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 9);
    auto s = snf(m);
    CHECK(int_mul(int_mul(s.P, m), s.Q) == s.D);
    CHECK(abs(det_bareiss(s.P)) == 1);
    CHECK(abs(det_bareiss(s.Q)) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i] >= 0);
      if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      else CHECK(s.diagonal[i + 1] == 0);
    }
  }
  auto s = snf(int_matrix({{2, 0}, {0, 3}}));
  CHECK(s.diagonal == std::vector<Int>{1, 6});
}

TEST_CASE("bareiss determinant matches cofactor oracle") {
  CHECK(det_bareiss(kCyclic) == 2);
  CHECK(cofactor_det(kCyclic) == 2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto m = random_matrix(rng, n, n, 3);
    CHECK(det_bareiss(m) == cofactor_det(m));
  }
}

TEST_CASE("rank over Q and F_p") {
  CHECK(rank_over(IntMatrix(3, 4, Int(0)), FieldDesc::rationals()) == 0);
  CHECK(rank_over(IntMatrix(3, 4, Int(0)), FieldDesc::prime(5)) == 0);
  auto d = int_matrix({{5, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(rank_over(d, FieldDesc::prime(5)) == 4);
  CHECK(rank_over(d, FieldDesc::rationals()) == 5);
  CHECK(rank_over(kCyclic, FieldDesc::rationals()) == 5);
  CHECK(rank_over(kCyclic, FieldDesc::prime(5)) == 5);
  CHECK(rank_over(kCyclic, FieldDesc::prime(2)) == 4);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 2);
    auto rq = rank_over(m, FieldDesc::rationals());
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(rank_over(m, FieldDesc::prime(p)) <= rq);
  }
}

TEST_CASE("kernel over fields") {
  CHECK(kernel_over(int_identity(4), FieldDesc::rationals()).empty());
  auto row = int_matrix({{1, 1, 1, 1, 0}});
  auto k = kernel_over(row, FieldDesc::prime(5));
  CHECK(k.size() == 4);
  for (const auto& v : k) {
    Rat s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += v[i];
    CHECK(floor_mod(Int(s.get_num()), 5) == 0);
  }
}

TEST_CASE("prime field Fermat identity") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const auto& F = FiniteField::get(p);
    for (std::uint32_t a = 0; a < p; ++a) CHECK(F.pow(F.element(a), p) == F.element(a));
  }
}

TEST_CASE("extension fields") {
  for (auto [p, e] : {std::pair{3u, 2u}, std::pair{5u, 4u}, std::pair{7u, 2u}, std::pair{2u, 3u}}) {
    const auto& F = FiniteField::get(p, e);
    CAPTURE(F.name());
    std::mt19937_64 rng(p * 100 + e);
    for (int t = 0; t < 200; ++t) {
      Fq a = F.random(rng), b = F.random(rng), c = F.random(rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == F.zero());
      if (!F.is_zero(a)) CHECK(a * F.inv(a) == F.one());
      CHECK(F.pow(a, F.order()) == a);
      Fq s = a * a;
      CHECK(F.is_square(s));
      Fq r = F.sqrt(s);
      CHECK(r * r == s);
    }
    // Frobenius of the prime subfield is trivial.
    for (std::uint32_t i = 0; i < p; ++i) CHECK(F.pow(F.from_int(i), p) == F.from_int(i));
  }
  const auto& F9 = FiniteField::get(3, 2);
  const auto& F729 = FiniteField::get(3, 6);
  auto emb = FiniteField::embedding(F9, F729);
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      CHECK(F729.element(emb[F9.mul(a, b)]) == F729.element(emb[a]) * F729.element(emb[b]));
      CHECK(emb[F9.add(a, b)] == F729.add(emb[a], emb[b]));
    }
}

TEST_CASE("Z/p^k arithmetic") {
  const auto& Z = IntegersMod::get(5, 4);
  CHECK(Z.modulus() == 625);
  CHECK(Z.inv(Z.from_int(2)) * Z.from_int(2) == Z.one());
  CHECK(Z.valuation(Z.from_int(50)) == 2);
  CHECK_FALSE(Z.is_unit(Z.from_int(10)));
  CHECK(Z.from_int(-1) == Z.from_int(624));
}

TEST_CASE("rref over Z/p^k detects non-split rows") {
  const auto& Z = IntegersMod::get(5, 2);
  Matrix<Zpk> m(1, 2, Z.zero());
  m(0, 0) = Z.from_int(5);
  m(0, 1) = Z.from_int(1);
  CHECK(rref(Z, m).split);
  Matrix<Zpk> n(1, 2, Z.zero());
  n(0, 0) = Z.from_int(5);
  CHECK_FALSE(rref(Z, n).split);
}

TEST_CASE("kernel over Z/p^k with a skipped non-unit column") {
  const auto& Z = IntegersMod::get(5, 3);
  // Column 0 has only non-units, so the pivot row keeps a multiple of p there.
  Matrix<Zpk> m(2, 3, Z.zero());
  m(0, 0) = Z.from_int(5);
  m(0, 1) = Z.from_int(1);
  m(0, 2) = Z.from_int(2);
  m(1, 0) = Z.from_int(10);
  m(1, 1) = Z.from_int(3);
  m(1, 2) = Z.from_int(2);
  auto ker = kernel(Z, m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Z.one());
  auto img = mat_vec(Z, m, ker[0]);
  CHECK(Z.is_zero(img[0]));
  CHECK(Z.is_zero(img[1]));
  std::vector<Zpk> b{Z.from_int(7), Z.from_int(3)};
  auto x = solve(Z, m, b);
  REQUIRE(x);
  CHECK(mat_vec(Z, m, *x) == b);
}

TEST_CASE("determinant over Q with elimination") {
  Rationals Q;
  Matrix<Rat> m = Matrix<Rat>::from_rows({{Rat(2), Rat(1), Rat(3)}, {Rat(4), Rat(3), Rat(1)}, {Rat(6), Rat(5), Rat(7)}}, Rat(0));
  CHECK(determinant(Q, m) == Rat(16));
}

TEST_CASE("multivariate polynomials") {
  PolyRing R(5, {"x", "y", "z"});
  auto x = R.var(0), y = R.var(1), z = R.var(2);
  auto f = (x + y) * (x + y);
  CHECK(f == x * x + R.from_int(2) * x * y + y * y);
  auto g = (x + y) * (x + y) * (x + y) * (x + y) * (x + y);
  CHECK(g == x * x * x * x * x + y * y * y * y * y);  // Frobenius in char 5
  CHECK((f - f).is_zero());
  CHECK(f.total_degree() == 2);
  CHECK(f.to_string() == "x^2 + 2*x*y + y^2");
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    auto r = [&] { return R.from_int(static_cast<long long>(rng() % 5)) * x + R.from_int(static_cast<long long>(rng() % 5)) * y * z + R.from_int(1); };
    auto a = r(), b = r(), c = r();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
  const auto& F = FiniteField::get(5, 2);
  std::vector<Fq> pt{F.element(7), F.element(3), F.element(11)};
  CHECK(f.evaluate(pt) == (pt[0] + pt[1]) * (pt[0] + pt[1]));
}

TEST_CASE("quadratic extension") {
  PolyRing R(7, {"s", "t"});
  auto s = R.var(0), t = R.var(1);
  auto Q = QuadExtRing::monic_after_scaling(R, s, t, R.one(), "mu");
  auto mu = Q.gen();
  // mu^2 + t mu + s = 0
  CHECK((mu * mu + Q.embed(t) * mu + Q.embed(s)).is_zero());
  std::mt19937_64 rng(9);
  auto rnd = [&] {
    return Q.embed(R.from_int(static_cast<long long>(rng() % 7)) * s + R.from_int(static_cast<long long>(rng() % 7))) +
           Q.embed(R.from_int(static_cast<long long>(rng() % 7)) * t) * mu;
  };
  for (int k = 0; k < 30; ++k) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
