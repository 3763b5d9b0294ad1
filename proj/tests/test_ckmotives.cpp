#include "gmlab/ckmotives.hpp"

#include <doctest.h>

#include <random>

using namespace gmlab;
using namespace gmlab::ck;

namespace {

// Schubert classes sigma_{a,b} on Gr(2,5), 3 >= a >= b >= 0.
using Schubert = std::map<std::pair<int, int>, long>;

auto pieri1(const Schubert& x) -> Schubert {
  Schubert out;
  for (const auto& [ab, c] : x) {
    auto [a, b] = ab;
    if (a + 1 <= 3) out[{a + 1, b}] += c;
    if (b + 1 <= a) out[{a, b + 1}] += c;
  }
  return out;
}

auto pieri11(const Schubert& x) -> Schubert {
  Schubert out;
  for (const auto& [ab, c] : x) {
    auto [a, b] = ab;
    if (a + 1 <= 3) out[{a + 1, b + 1}] += c;
  }
  return out;
}

// deg sigma_1^a sigma_11^b on Gr(2,5)
auto gr_degree(int a, int b) -> long {
  Schubert x{{{0, 0}, 1}};
  for (int i = 0; i < a; ++i) x = pieri1(x);
  for (int i = 0; i < b; ++i) x = pieri11(x);
  auto it = x.find({3, 3});
  return it == x.end() ? 0 : it->second;
}

auto random_class(std::mt19937& rng, GMVariety v, int codim) -> TautClass {
  TautClass x(v);
  TautAlgebra alg(v);
  for (const auto& m : alg.monomials())
    if (m.codim() == codim) x = x + TautClass::monomial(v, m, Rat(static_cast<long>(rng() % 7) - 3));
  return x;
}

auto random_corr(std::mt19937& rng, GMVariety v) -> Correspondence {
  TautAlgebra alg(v);
  int d = variety_dim(v);
  Correspondence c = Correspondence::diagonal(v, Rat(static_cast<long>(rng() % 5) - 2));
  for (const auto& a : alg.monomials())
    for (const auto& b : alg.monomials())
      if (a.codim() + b.codim() == d && rng() % 2) c.add_term(a, b, Rat(static_cast<long>(rng() % 7) - 3));
  return c;
}

} // namespace

TEST_CASE("degrees agree with Schubert calculus on the double cover") {
  auto deg = Degrees::standard(GMVariety::GM6).top;
  CHECK(deg.at({6, 0}) == 2 * gr_degree(6, 0));
  CHECK(deg.at({4, 1}) == 2 * gr_degree(4, 1));
  CHECK(deg.at({2, 2}) == 2 * gr_degree(2, 2));
  CHECK(deg.at({0, 3}) == 2 * gr_degree(0, 3));
  CHECK(gr_degree(6, 0) == 5);
  CHECK(Degrees::standard(GMVariety::GM4).top.at({4, 0}) == 10);
}

TEST_CASE("degree system") {
  auto s = solve_delta_system(10);
  REQUIRE(s.has_value());
  CHECK(s->first == 4);
  CHECK(s->second == 2);
}

TEST_CASE("tautological classes") {
  auto v = GMVariety::GM6;
  TautAlgebra alg(v);
  CHECK(alg.taut_degree(TautClass::pt(v)) == 1);
  CHECK((TautClass::H(v, 4) * TautClass::H(v, 3)).is_zero());
  CHECK((TautClass::H(v) * TautClass::e2(v)).codim() == 3);
  CHECK(TautClass(v).codim() == -1);
  CHECK_THROWS(static_cast<void>((TautClass::H(v) + TautClass::e2(v)).codim()));
  CHECK_THROWS(TautClass::e2(GMVariety::GM4));
  CHECK(mono_string({4, 1}) == "H^4*e2");
  CHECK(alg.monomials().size() == 16);
  CHECK(TautAlgebra(GMVariety::GM4).monomials().size() == 5);
  CHECK(alg.pairing(TautClass::H(v, 2), TautClass::H(v, 2) * TautClass::e2(v)) == 4);
  CHECK(alg.numerically_equal(TautClass::e2(v, 2), Rat(3) * TautClass::H(v, 2) * TautClass::e2(v) - TautClass::H(v, 4)));
  CHECK_FALSE(alg.numerically_equal(TautClass::e2(v, 2), TautClass::H(v, 4)));
  CHECK(parse_variety("gm6") == v);
  CHECK_THROWS(parse_variety("gm5"));
}

TEST_CASE("correspondences") {
  auto v = GMVariety::GM6;
  Correspondence c(v);
  CHECK_THROWS_AS(c.add_term({1, 0}, {1, 0}, 1), WrongCodimension);
  c.add_term({2, 0}, {0, 2}, 3);
  CHECK(c.transpose().terms().count({{0, 2}, {2, 0}}) == 1);
  CHECK(c.transpose().transpose() == c);
  CHECK((c - c).is_zero());
  CHECK(Rat(2) * c == c + c);
}

TEST_CASE("composition laws") {
  std::mt19937 rng(8);
  for (auto v : {GMVariety::GM4, GMVariety::GM6}) {
    TautAlgebra alg(v);
    auto id = Correspondence::diagonal(v);
    for (int t = 0; t < 20; ++t) {
      auto f = random_corr(rng, v), g = random_corr(rng, v), h = random_corr(rng, v);
      CHECK(alg.compose(h, alg.compose(g, f)) == alg.compose(alg.compose(h, g), f));
      CHECK(alg.compose(g, f).transpose() == alg.compose(f.transpose(), g.transpose()));
      CHECK(alg.compose(id, f) == f);
      CHECK(alg.compose(f, id) == f);
      int codim = static_cast<int>(rng() % (variety_dim(v) + 1));
      if (v == GMVariety::GM4 && codim % 2) codim = 2;
      auto x = random_class(rng, v, codim);
      CHECK(alg.numerically_equal(alg.act(alg.compose(g, f), x), alg.act(g, alg.act(f, x))));
    }
  }
}

TEST_CASE("projectors") {
  for (auto v : {GMVariety::GM4, GMVariety::GM6}) {
    TautAlgebra alg(v);
    auto ps = projectors(v);
    Correspondence sum(v);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i > 0) CHECK(ps[i - 1].index < ps[i].index);
      sum = sum + ps[i].pi;
      CHECK(alg.compose(ps[i].pi, ps[i].pi) == ps[i].pi);
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (i != j) CHECK(alg.compose(ps[i].pi, ps[j].pi).is_zero());
    }
    CHECK(sum == Correspondence::diagonal(v));
    auto r = verify_chow_kunneth(alg);
    CHECK(r.passed());
    CHECK(r.failures().empty());
    CHECK_NOTHROW(require_chow_kunneth(alg));
  }
  CHECK(verify_chow_kunneth(TautAlgebra(GMVariety::GM4)).checks.size() == 56);
  CHECK(verify_chow_kunneth(TautAlgebra(GMVariety::GM6)).checks.size() == 169);
}

TEST_CASE("middle classes are dual") {
  TautAlgebra alg(GMVariety::GM6);
  auto e1 = TautClass::H(GMVariety::GM6, 2);
  auto e2 = TautClass::e2(GMVariety::GM6);
  CHECK(alg.pairing(e1, f1()) == 1);
  CHECK(alg.pairing(e1, f2()) == 0);
  CHECK(alg.pairing(e2, f1()) == 0);
  CHECK(alg.pairing(e2, f2()) == 1);
}

TEST_CASE("perturbed degrees break the identities") {
  auto d = Degrees::standard(GMVariety::GM6);
  d.top[{4, 1}] = 5;
  TautAlgebra bad(GMVariety::GM6, d);
  auto r = verify_chow_kunneth(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.failures().empty());
  CHECK_THROWS_AS(require_chow_kunneth(bad), IdentityViolation);
}
