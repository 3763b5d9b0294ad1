#include "gmlab/weights.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gmlab;

namespace {

auto all_perms() -> std::vector<WeylElem> {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  std::vector<WeylElem> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

auto inversions(const std::array<int, 5>& p) -> int {
  int n = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) n += p[i] > p[j];
  return n;
}

// Semistandard tableaux count via brute force on small shapes.
auto count_ssyt_two_rows(int a, int b, int n) -> long {
  // shape (a, b), entries 1..n
  long count = 0;
  std::vector<int> r1(a, 1), r2(b, 1);
  auto next = [n](std::vector<int>& r) {
    for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
      if (r[i] < n) {
        ++r[i];
        for (std::size_t j = i + 1; j < r.size(); ++j) r[j] = r[i];
        return true;
      }
    }
    return false;
  };
  do {
    std::fill(r2.begin(), r2.end(), 1);
    do {
      bool ok = true;
      for (int j = 0; j < b; ++j) ok = ok && r2[j] > r1[j];
      count += ok;
    } while (next(r2));
  } while (next(r1));
  return count;
}

} // namespace

TEST_CASE("weights are normalized to minimum zero") {
  Weight w({3, 1, 1, -2, 0});
  CHECK(w.rep() == Vec5{5, 3, 3, 0, 2});
  CHECK(Weight({1, 1, 1, 1, 1}).is_zero());
  CHECK(Weight({2, 1, 0, 0, 0}).is_dominant());
  CHECK_FALSE(w.is_dominant());
  CHECK(Weight({1, 0, 0, 0, 0}) + Weight({0, 1, 0, 0, 0}) == Weight({1, 1, 0, 0, 0}));
}

TEST_CASE("Weyl group elements") {
  auto perms = all_perms();
  CHECK(perms.size() == 120);
  for (const auto& w : perms) {
    CHECK(w.length() == inversions(w.perm()));
    CHECK(w * w.inverse() == WeylElem());
    CHECK(WeylElem::parse(w.to_string()) == w);
  }
  auto c = WeylElem::parse("(1 2 3 4 5)");
  CHECK(c.length() == 4);
  CHECK(c.sign() == 1);
  CHECK(WeylElem::parse("(1 2)").sign() == -1);
  CHECK(WeylElem::parse("id") == WeylElem());
  CHECK(WeylElem::parse("") == WeylElem());
  CHECK(WeylElem::parse("(1 5)").length() == 7);
}

TEST_CASE("apply is a left action compatible with products") {
  auto perms = all_perms();
  Vec5 v{7, -3, 2, 11, 5};
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto& x = perms[rng() % perms.size()];
    const auto& y = perms[rng() % perms.size()];
    CHECK((x * y).apply(v) == x.apply(y.apply(v)));
  }
  auto s1 = WeylElem::parse("(1 2)");
  CHECK(s1.apply(Vec5{1, 2, 3, 4, 5}) == Vec5{2, 1, 3, 4, 5});
}

TEST_CASE("dot action") {
  auto s1 = WeylElem::parse("(1 2)");
  CHECK(dot_act_raw(s1, Vec5{0, 0, 0, 0, 0}) == Vec5{-1, 1, 0, 0, 0});
  Weight l({3, 0, 5, 1, 2});
  for (const auto& w : all_perms()) CHECK(dot_act(w.inverse(), dot_act(w, l)) == l);
}

TEST_CASE("pairing") {
  Vec5 l{4, 1, 0, 3, 2};
  CHECK(pairing(l, 1, 2) == 3);
  CHECK(pairing(l, 2, 4) == -2);
  CHECK(pairing(Weight(l), 1, 5) == 2);
  CHECK_THROWS_AS(pairing(l, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(pairing(l, 0, 2), std::invalid_argument);
}

TEST_CASE("sorting word sorts lambda + rho") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 300; ++t) {
    Vec5 l{d(rng), d(rng), d(rng), d(rng), d(rng)};
    auto [w, v] = sorting_word(l);
    CHECK(std::is_sorted(v.begin(), v.end(), std::greater<>()));
    CHECK(w.apply(vec_add(l, kRho)) == v);
  }
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(Weight({0, 0, 0, 0, 0})) == 1);
  CHECK(weyl_dim(Weight({1, 0, 0, 0, 0})) == 5);
  CHECK(weyl_dim(Weight({1, 1, 0, 0, 0})) == 10);
  CHECK(weyl_dim(Weight({2, 0, 0, 0, 0})) == 15);
  CHECK(weyl_dim(Weight({2, 1, 1, 1, 0})) == 24);
  CHECK(weyl_dim(Weight({1, 1, 1, 1, 0})) == 5);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b)
      CHECK(weyl_dim(Weight({a, b, 0, 0, 0})) == count_ssyt_two_rows(a, b, 5));
  CHECK_THROWS_AS(weyl_dim(Weight({0, 1, 0, 0, 0})), std::invalid_argument);
}
