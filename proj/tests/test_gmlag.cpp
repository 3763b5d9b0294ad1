#include "gmlab/gmlag.hpp"

#include <doctest.h>

#include <random>

using namespace gmlab;
using namespace gmlab::gm;

namespace {

const Rationals kQ;

auto binom(int n, int k) -> std::size_t {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sign of the shuffle sorting I followed by J.
auto brute_sign(unsigned I, unsigned J) -> int {
  if (I & J) return 0;
  std::vector<int> seq;
  for (int t = 0; t < 16; ++t)
    if (I >> t & 1u) seq.push_back(t);
  for (int t = 0; t < 16; ++t)
    if (J >> t & 1u) seq.push_back(t);
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) inv += seq[a] > seq[b];
  return inv % 2 ? -1 : 1;
}

auto random_vec(std::mt19937_64& rng, std::size_t n) -> std::vector<Rat> {
  std::vector<Rat> v(n);
  for (auto& x : v) x = Rat(static_cast<long>(rng() % 7) - 3);
  return v;
}

auto random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) -> Matrix<Rat> {
  Matrix<Rat> m(r, c, Rat(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
  return m;
}

auto neg(std::vector<Rat> v) -> std::vector<Rat> {
  for (auto& x : v) x = -x;
  return v;
}

auto add(std::vector<Rat> a, const std::vector<Rat>& b) -> std::vector<Rat> {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class R>
auto random_lagrangian(const R& ring, int n, std::uint64_t seed) -> LagrangianDatum<R> {
  std::mt19937_64 rng(seed);
  return gm_to_lagrangian(ring, random_gm_datum(ring, n, rng, true));
}

} // namespace

TEST_CASE("exterior bases") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto& B = ext_basis(n, k);
      CHECK(B.size() == binom(n, k));
      for (std::size_t i = 0; i < B.size(); ++i) {
        CHECK(__builtin_popcount(B.masks[i]) == k);
        CHECK(B.index(B.masks[i]) == static_cast<int>(i));
      }
    }
  CHECK(mask_label(0b101001) == "146");
  for (unsigned I = 0; I < 64; ++I)
    for (unsigned J = 0; J < 64; ++J) CHECK(merge_sign(I, J) == brute_sign(I, J));
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937_64 rng(1);
  const int n = 6;
  for (int t = 0; t < 10; ++t) {
    int a = 1 + static_cast<int>(rng() % 2), b = 1 + static_cast<int>(rng() % 2), c = 1;
    auto x = random_vec(rng, binom(n, a)), y = random_vec(rng, binom(n, b)), z = random_vec(rng, binom(n, c));
    auto left = wedge(kQ, wedge(kQ, x, a, y, b, n), a + b, z, c, n);
    auto right = wedge(kQ, x, a, wedge(kQ, y, b, z, c, n), b + c, n);
    CHECK(left == right);
    auto xy = wedge(kQ, x, a, y, b, n), yx = wedge(kQ, y, b, x, a, n);
    CHECK(xy == ((a * b) % 2 ? neg(yx) : yx));
  }
}

TEST_CASE("contraction is a graded derivation") {
  std::mt19937_64 rng(2);
  const int n = 6;
  for (int t = 0; t < 10; ++t) {
    int a = 1 + static_cast<int>(rng() % 2), b = 1 + static_cast<int>(rng() % 3);
    auto phi = random_vec(rng, n);
    auto x = random_vec(rng, binom(n, a)), y = random_vec(rng, binom(n, b));
    auto lhs = contract(kQ, phi, wedge(kQ, x, a, y, b, n), a + b, n);
    auto t1 = wedge(kQ, contract(kQ, phi, x, a, n), a - 1, y, b, n);
    auto t2 = wedge(kQ, x, a, contract(kQ, phi, y, b, n), b - 1, n);
    CHECK(lhs == add(t1, a % 2 ? neg(t2) : t2));
  }
}

TEST_CASE("the symplectic form on wedge^3") {
  auto O = omega(kQ);
  for (int i = 0; i < 20; ++i) {
    int nonzero = 0;
    for (int j = 0; j < 20; ++j) {
      CHECK(O(i, j) == -O(j, i));
      nonzero += O(i, j) != 0;
    }
    CHECK(nonzero == 1);
  }
  CHECK(rank(kQ, O) == 20);
}

TEST_CASE("third exterior power is functorial") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    auto G = random_mat(rng, 6, 6), H = random_mat(rng, 6, 5);
    CHECK(exterior3(kQ, mat_mul(kQ, G, H)) == mat_mul(kQ, exterior3(kQ, G), exterior3(kQ, H)));
  }
  CHECK(exterior3(kQ, identity_matrix(kQ, 6)) == identity_matrix(kQ, 20));
}

TEST_CASE("Gaussian binomial") {
  auto brute = [](std::uint64_t q) {
    // ordered bases of 3-spaces divided by |GL3|
    auto pw = [&](int k) {
      std::uint64_t r = 1;
      for (int i = 0; i < k; ++i) r *= q;
      return r;
    };
    std::uint64_t frames = (pw(6) - 1) * (pw(6) - q) * (pw(6) - q * q);
    std::uint64_t gl3 = (pw(3) - 1) * (pw(3) - q) * (pw(3) - q * q);
    return frames / gl3;
  };
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) CHECK(grassmannian_3_6_points(q) == brute(q));
  CHECK(grassmannian_3_6_points(2) == 1395);
}

TEST_CASE("round trips over several rings") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(roundtrip_suite(FiniteField::get(5), n, 10, 11).passed());
    CHECK(roundtrip_suite(FiniteField::get(7), n, 10, 12).passed());
    CHECK(roundtrip_suite(FiniteField::get(3, 2), n, 10, 13).passed());
  }
  auto q = roundtrip_suite(kQ, 4, 4, 14);
  CHECK(q.passed());
  CHECK(q.errors.empty());
}

TEST_CASE("Lagrangian data satisfy their invariants") {
  const auto& F = FiniteField::get(7);
  for (int n = 3; n <= 5; ++n) {
    auto L = random_lagrangian(F, n, 20 + n);
    CHECK(is_isotropic(F, L.A));
    CHECK(rank(F, L.A) == 10);
    CHECK(intersection_rank(F, L.A, L.V5) == static_cast<std::size_t>(5 - n));
    CHECK_NOTHROW(check_lagrangian_datum(F, L));
  }
  auto bad = random_lagrangian(F, 4, 30);
  bad.A(0, 0) = bad.A(0, 0) + F.one();
  bad.A(19, 0) = bad.A(19, 0) + F.one();
  bool rejected = false;
  try {
    check_lagrangian_datum(F, bad);
  } catch (const CompatibilityViolation&) {
    rejected = true;
  } catch (const RankDefect&) {
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("conversion refuses characteristic two") {
  const auto& F2 = FiniteField::get(2);
  std::mt19937_64 rng(1);
  CHECK_THROWS(gm_to_lagrangian(F2, random_gm_datum(F2, 4, rng, false)));
}

TEST_CASE("opposite V5 and decomposable vectors") {
  const auto& F = FiniteField::get(5);
  for (int n = 3; n <= 5; ++n) {
    auto L = random_lagrangian(F, n, 40 + n);
    auto opp = find_opposite_V5(F, L, 2);
    REQUIRE(opp.found);
    const auto& big = FiniteField::get(5, opp.degree);
    std::vector<Fq> u;
    for (auto x : opp.u) u.push_back(big.element(x));
    auto table = FiniteField::embedding(F, big);
    Matrix<Fq> A(20, 10, big.zero());
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 10; ++j) A(i, j) = big.element(table[L.A(i, j).v]);
    auto K = wedge3_kernel(big, u);
    CHECK(is_isotropic(big, K));
    CHECK(rank(big, hcat(A, K, big.zero())) == 20);

    auto scan = scan_decomposables(F, L.A, 2000000, 1);
    if (scan.found) {
      const auto& sf = FiniteField::get(5, scan.degree);
      auto st = FiniteField::embedding(F, sf);
      Matrix<Fq> U(3, 6, sf.zero());
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) U(r, c) = sf.element(scan.witness[r][c]);
      Matrix<Fq> As(20, 10, sf.zero());
      for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 10; ++j) As(i, j) = sf.element(st[L.A(i, j).v]);
      auto w = exterior3(sf, U.transpose());
      CHECK(rank(sf, hcat(As, w, sf.zero())) == 10);
      CHECK(rank(sf, w) == 1);
    }
  }
}

TEST_CASE("decomposable scan on a Lagrangian full of decomposables") {
  const auto& F = FiniteField::get(5);
  const auto& B = ext_basis(6, 3);
  Matrix<Fq> A(20, 10, F.zero());
  std::size_t c = 0;
  for (std::size_t i = 0; i < B.size(); ++i)
    if (B.masks[i] & 1u) A(i, c++) = F.one();
  REQUIRE(c == 10);
  CHECK(is_isotropic(F, A));
  auto scan = scan_decomposables(F, A, 1000, 1);
  CHECK(scan.found);
  CHECK(scan.degree == 1);
  CHECK(scan.tested <= 1000);
}

TEST_CASE("lifting to Z/p^k") {
  auto s5 = lift_suite(5, 3, 6, 7);
  CHECK(s5.ok());
  auto s7 = lift_suite(7, 2, 6, 8);
  CHECK(s7.ok());
  const auto& F = FiniteField::get(7);
  auto L = random_lagrangian(F, 4, 50);
  auto r = lift_lagrangian(L, 3);
  CHECK(r.passed());
  CHECK(reduce(r.datum.A, F) == L.A);
  CHECK(r.defect_valuations.back() >= 3);
}

TEST_CASE("element strings") {
  CHECK(elem_string(Rat(3, 4)) == "3/4");
  CHECK(elem_string(FiniteField::get(7).from_int(10)) == "3");
}
