#include "gmlab/pluecker.hpp"

#include <doctest.h>

#include <random>

using namespace gmlab;
using namespace gmlab::pl;

namespace {

const Rationals kQ;

auto random_rat_matrix(std::mt19937_64& rng, int n) -> Matrix<Rat> {
  Matrix<Rat> A(n, n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
  return A;
}

auto random_form(std::mt19937_64& rng) -> QuadricForm<Rat> {
  QuadricForm<Rat> q;
  for (int m = 0; m < kMonos; ++m)
    if (rng() % 3 == 0) qf_add_term(kQ, q, m, Rat(static_cast<long>(rng() % 9) - 4));
  return q;
}

// x_ij = u_i v_j - u_j v_i
auto plucker_point(const std::vector<Rat>& u, const std::vector<Rat>& v) -> std::vector<Rat> {
  std::vector<Rat> P(kPairs);
  for (int t = 0; t < kPairs; ++t) {
    auto [i, j] = pair_at(t);
    P[t] = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
  }
  return P;
}

auto commutator(const Matrix<Rat>& A, const Matrix<Rat>& B) -> Matrix<Rat> {
  auto ab = mat_mul(kQ, A, B), ba = mat_mul(kQ, B, A);
  Matrix<Rat> C(5, 5, Rat(0));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) C(i, j) = ab(i, j) - ba(i, j);
  return C;
}

} // namespace

TEST_CASE("index tables") {
  for (int t = 0; t < kPairs; ++t) {
    auto [i, j] = pair_at(t);
    CHECK(i < j);
    CHECK(pair_index(i, j) == t);
    CHECK(pair_index(j, i) == t);
  }
  CHECK(pair_name(0) == "x12");
  CHECK(pair_name(9) == "x45");
  for (int m = 0; m < kMonos; ++m) {
    auto [a, b] = mono_at(m);
    CHECK(a <= b);
    CHECK(mono_index(a, b) == m);
    CHECK(mono_from_key(mono_key(m)) == m);
    auto w = mono_weight(m);
    CHECK(w[0] + w[1] + w[2] + w[3] + w[4] == 4);
  }
  CHECK(mono_name(mono_index(0, 0)) == "x12^2");
  CHECK(mono_name(mono_index(0, 9)) == "x12*x45");
}

TEST_CASE("Pluecker quadrics cut out decomposable vectors") {
  std::mt19937_64 rng(1);
  auto rnd = [&] { return Rat(static_cast<long>(rng() % 11) - 5); };
  int outside = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<Rat> u(5), v(5), r(kPairs);
    for (auto& x : u) x = rnd();
    for (auto& x : v) x = rnd();
    for (auto& x : r) x = rnd();
    auto P = plucker_point(u, v);
    bool zero = std::all_of(P.begin(), P.end(), [](const Rat& x) { return x == 0; });
    if (!zero) CHECK(gr_membership(kQ, P));
    if (std::any_of(r.begin(), r.end(), [](const Rat& x) { return x != 0; }) && !gr_membership(kQ, r)) ++outside;
  }
  CHECK(outside > 40);
  CHECK_THROWS_AS(gr_membership(kQ, std::vector<Rat>(kPairs, Rat(0))), ZeroPoint);
  CHECK_THROWS_AS(gr_membership(kQ, std::vector<Rat>(3, Rat(1))), std::invalid_argument);
}

TEST_CASE("each quadric has three terms and a unit mu") {
  for (int k = 1; k <= 5; ++k) {
    auto q = pluecker_quadric(kQ, k);
    CHECK(q.coeffs.size() == 3);
    auto m = mu(kQ, q);
    for (int l = 1; l <= 5; ++l) CHECK(m[l - 1] == Rat(l == k ? 3 : 0));
  }
}

TEST_CASE("the action is a Lie algebra representation") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    auto A = random_rat_matrix(rng, 5), B = random_rat_matrix(rng, 5);
    auto Q = random_form(rng);
    auto lhs = act(kQ, commutator(A, B), Q);
    auto rhs = qf_sub(kQ, act(kQ, A, act(kQ, B, Q)), act(kQ, B, act(kQ, A, Q)));
    CHECK(lhs == rhs);
    auto M = action_matrix(kQ, A);
    auto img = act(kQ, A, Q);
    std::vector<Rat> coords(kMonos, Rat(0));
    for (const auto& [m, c] : Q.coeffs) coords[m] = c;
    auto w = mat_vec(kQ, M, coords);
    for (int m = 0; m < kMonos; ++m) CHECK(w[m] == (img.coeffs.count(m) ? img.coeffs.at(m) : Rat(0)));
  }
}

TEST_CASE("identity acts by -4 and the quadric span is invariant") {
  auto I = identity_matrix(kQ, 5);
  std::mt19937_64 rng(3);
  auto Q = random_form(rng);
  CHECK(act(kQ, I, Q) == qf_scale(kQ, Rat(-4), Q));
  for (int t = 0; t < 10; ++t) {
    auto A = random_rat_matrix(rng, 5);
    for (int k = 1; k <= 5; ++k) {
      auto [inside, rest] = mu_split(kQ, act(kQ, A, pluecker_quadric(kQ, k)));
      CHECK(rest.coeffs.empty());
    }
  }
}

TEST_CASE("mu_split") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    auto Q = random_form(rng);
    auto [qi, rest] = mu_split(kQ, Q);
    CHECK(qf_add(kQ, qi, rest) == Q);
    for (const auto& x : mu(kQ, rest)) CHECK(x == 0);
    CHECK(mu(kQ, qi) == mu(kQ, Q));
  }
  const auto& F3 = FiniteField::get(3);
  CHECK_THROWS_AS(mu_split(F3, pluecker_quadric(F3, 1)), NonInvertibleScalar);
}

TEST_CASE("gradient and Jacobian") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto Q = random_form(rng);
    std::vector<Rat> P(kPairs);
    for (auto& x : P) x = Rat(static_cast<long>(rng() % 9) - 4);
    auto g = gradient(kQ, Q, P);
    Rat euler = 0;
    for (int a = 0; a < kPairs; ++a) euler += P[a] * g[a];
    CHECK(euler == Rat(2) * evaluate(kQ, Q, P));
    for (int a = 0; a < kPairs; ++a) {
      auto Pp = P, Pm = P;
      Pp[a] += 1;
      Pm[a] -= 1;
      CHECK(g[a] == (evaluate(kQ, Q, Pp) - evaluate(kQ, Q, Pm)) / Rat(2));
    }
    auto J = jacobian_rows(kQ, {Q, pluecker_quadric(kQ, 1)}, P);
    CHECK(J.rows() == 2);
    for (int a = 0; a < kPairs; ++a) CHECK(J(0, a) == g[a]);
  }
}

TEST_CASE("tangent space of the Grassmannian has dimension 6") {
  std::vector<Rat> u{1, 2, 0, -1, 3}, v{0, 1, 4, 2, -2};
  auto P = plucker_point(u, v);
  auto qs = pluecker_quadrics(kQ);
  auto J = jacobian_rows(kQ, std::vector<QuadricForm<Rat>>(qs.begin(), qs.end()), P);
  CHECK(rank(kQ, J) == 3);
}

TEST_CASE("works over finite fields") {
  const auto& F = FiniteField::get(7);
  std::vector<Fq> u, v;
  for (int i = 0; i < 5; ++i) {
    u.push_back(F.from_int(i * i + 1));
    v.push_back(F.from_int(3 * i + 2));
  }
  std::vector<Fq> P(kPairs, F.zero());
  for (int t = 0; t < kPairs; ++t) {
    auto [i, j] = pair_at(t);
    P[t] = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
  }
  CHECK(gr_membership(F, P));
}
