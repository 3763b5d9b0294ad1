#include "gmlab/pluecker.hpp"
#include "gmlab/vfsearch.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace gmlab;
using namespace gmlab::vf;

namespace {

auto cofactor5(const std::array<Row, 5>& m, int size = 5, unsigned cols = 0x1f, int row = 0) -> long {
  if (row == size) return 1;
  long d = 0;
  int sign = 1;
  for (int c = 0; c < 5; ++c) {
    if (!(cols & (1u << c))) continue;
    d += sign * m[row][c] * cofactor5(m, size, cols & ~(1u << c), row + 1);
    sign = -sign;
  }
  return d;
}

auto brute_monomials(std::uint32_t p, const AVec& a) -> std::vector<int> {
  std::vector<int> out;
  for (int m = 0; m < pl::kMonos; ++m) {
    auto w = pl::mono_weight(m);
    long s = 0;
    for (int i = 0; i < 5; ++i) s += static_cast<long>(w[i]) * a[i];
    if (s % p == 0) out.push_back(m);
  }
  return out;
}

auto shared_enumeration() -> const Enumeration& {
  static const Enumeration e = enumerate_hits(PrimeFilter{});
  return e;
}

} // namespace

TEST_CASE("the weight matrix") {
  const auto& E = build_E();
  CHECK(E.rows.size() == 45);
  std::map<std::string, int> counts;
  for (const auto& t : E.type) ++counts[t];
  CHECK(counts["11000"] == 10);
  CHECK(counts["21100"] == 30);
  CHECK(counts["11110"] == 5);
  std::set<Row> distinct(E.rows.begin(), E.rows.end());
  CHECK(distinct.size() == 45);
  std::size_t monos = 0;
  for (const auto& m : E.monos) monos += m.size();
  CHECK(monos == 55);
  CHECK(E.hash() == build_E().hash());
}

TEST_CASE("prime filters") {
  auto f = PrimeFilter::parse("11..200");
  CHECK(f.contains(11));
  CHECK(f.contains(200));
  CHECK_FALSE(f.contains(7));
  CHECK(f.to_string() == "11..200");
  CHECK(PrimeFilter::parse("7").to_string() == "7");
  CHECK(PrimeFilter::parse("11..").to_string() == "11..");
  CHECK(PrimeFilter::parse("").contains(1000003));
  CHECK_THROWS_AS(PrimeFilter::parse("9..3"), std::invalid_argument);
  CHECK_THROWS_AS(PrimeFilter::parse("abc"), std::invalid_argument);
}

TEST_CASE("normalization and canonical forms") {
  std::mt19937 rng(17);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int t = 0; t < 50; ++t) {
      AVec a{};
      for (auto& x : a) x = rng() % p;
      if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue;
      auto n = normalize(p, a);
      CHECK(*std::find_if(n.begin(), n.end(), [](auto x) { return x != 0; }) == 1);
      std::array<int, 5> perm{0, 1, 2, 3, 4};
      std::shuffle(perm.begin(), perm.end(), rng);
      std::uint32_t c = 1 + rng() % (p - 1);
      AVec b{};
      for (int i = 0; i < 5; ++i) b[i] = a[perm[i]] * c % p;
      CHECK(canonical(p, a) == canonical(p, b));
      CHECK(canonical(p, a) <= normalize(p, a));
    }
  }
}

TEST_CASE("monomial sets") {
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    std::uint32_t p = t % 2 ? 5 : 7;
    AVec a{};
    for (auto& x : a) x = rng() % p;
    CHECK(monomial_set(p, a) == brute_monomials(p, a));
  }
  for (const auto& f : known_families()) {
    std::vector<int> printed;
    for (const auto& k : f.monomials) printed.push_back(pl::mono_from_key(k));
    std::sort(printed.begin(), printed.end());
    CHECK(monomial_set(f.p, f.a()) == printed);
  }
}

TEST_CASE("repeated eigenvalues") {
  CHECK(cond_repeated_eigenvalue(AVec{1, 2, 2, 3, 4}));
  CHECK_FALSE(cond_repeated_eigenvalue(AVec{0, 1, 2, 3, 4}));
}

TEST_CASE("full enumeration") {
  const auto& e = shared_enumeration();
  CHECK(e.subsets == 1221759);
  CHECK(e.nonsingular == 925489);
  CHECK(e.raw_hits() == 28194);
  CHECK(e.violations.empty());
  std::uint64_t per_prime = 0;
  for (const auto& [p, n] : e.hits_per_prime) {
    CHECK(p >= 5);
    per_prime += n;
  }
  CHECK(per_prime == e.raw_hits());
  std::uint64_t pairs = 0;
  for (const auto& [k, n] : distinct_pairs(e.hits)) pairs += n;
  CHECK(pairs == e.raw_hits());
  const auto& E = build_E();
  for (std::size_t h = 0; h < e.hits.size(); h += 97) {
    const auto& hit = e.hits[h];
    std::array<Row, 5> m{};
    for (int i = 0; i < 5; ++i) m[i] = E.rows[hit.N[i]];
    CHECK(cofactor5(m) == hit.det);
    CHECK(hit.det % static_cast<long>(hit.p) == 0);
    for (const auto& r : m) {
      long s = 0;
      for (int i = 0; i < 5; ++i) s += static_cast<long>(r[i]) * hit.a[i];
      CHECK(s % hit.p == 0);
    }
    CHECK(normalize(hit.p, hit.a) == hit.a);
  }
}

TEST_CASE("job count does not change the result") {
  auto f = PrimeFilter::parse("7");
  auto one = enumerate_hits(f, 1);
  auto three = enumerate_hits(f, 3);
  CHECK(one.raw_hits() == three.raw_hits());
  CHECK(one.hits_per_prime == three.hits_per_prime);
  for (std::size_t i = 0; i < one.hits.size(); ++i) {
    CHECK(one.hits[i].N == three.hits[i].N);
    CHECK(one.hits[i].a == three.hits[i].a);
  }
  CHECK(one.hits_per_prime.count(5) == 0);
}

TEST_CASE("filters leave exactly the known families") {
  auto classes = filter_hits(shared_enumeration().hits);
  CHECK(classes.size() == 5);
  std::set<std::string> matched;
  for (const auto& cls : classes) {
    CHECK(cond_singular_points(cls.p, cls.a));
    CHECK(cond_repeated_eigenvalue(cls.a));
    CHECK(cls.monomials == monomial_set(cls.p, cls.a));
    for (const auto& f : known_families())
      if (match_family(f, cls)) matched.insert(f.id);
  }
  CHECK(matched == std::set<std::string>{"1", "2", "3", "4", "p7"});
  CHECK(classes_before_filters(shared_enumeration().hits).size() > classes.size());
  CHECK_THROWS_AS(known_family("9"), std::invalid_argument);
}

TEST_CASE("singularity certificates") {
  for (const auto& f : known_families()) {
    auto c = certify_family_singular(f, 10, 3);
    CHECK(c.passed());
    CHECK(c.point_nonzero);
    CHECK(c.on_grassmannian);
    CHECK(c.on_quadric);
    CHECK(c.minors4_vanish);
    CHECK(c.minor3.has_value());
    CHECK(c.numeric_passed == c.numeric_samples);
  }
}

TEST_CASE("nilpotent lifts") {
  CHECK(pattern_string(0xf) == "1111");
  CHECK(pattern_string(0x1) == "1000");
  CHECK(verify_nilpotent_lift(7).passed());
  CHECK(verify_nilpotent_lift(11).passed());
  // Observed at p = 5: the full Jordan block has a larger kernel mod p.
  auto r5 = verify_nilpotent_lift(5);
  for (const auto& c : r5.cases)
    if (c.pattern == 0xf) {
      CHECK(c.kernel_q == 9);
      CHECK(c.kernel_p == 11);
    }
}

TEST_CASE("vector strings") { CHECK(avec_string(AVec{1, 0, 2, 3, 4}) == "(1,0,2,3,4)"); }
