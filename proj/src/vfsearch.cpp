#include "gmlab/vfsearch.hpp"

#include "gmlab/exact/finite_field.hpp"
#include "gmlab/exact/int_matrix.hpp"
#include "gmlab/exact/matrix.hpp"
#include "gmlab/exact/quad_ext.hpp"
#include "gmlab/pluecker.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace gmlab::vf {

namespace {

auto row_type(const Row& r) -> std::string {
  Row s = r;
  std::sort(s.begin(), s.end(), std::greater<>());
  std::string t;
  for (int x : s) t += static_cast<char>('0' + x);
  return t;
}

auto make_E() -> EMatrix {
  std::map<Row, std::vector<int>> by_weight;
  std::vector<Row> order;
  for (int m = 0; m < pl::kMonos; ++m) {
    Row w = pl::mono_weight(m);
    auto [a, b] = pl::mono_at(m);
    if (a == b)
      for (auto& x : w) x /= 2;
    if (!by_weight.count(w)) order.push_back(w);
    by_weight[w].push_back(m);
  }
  EMatrix E;
  for (const char* want : {"11000", "21100", "11110"})
    for (const auto& w : order)
      if (row_type(w) == want) {
        E.rows.push_back(w);
        E.monos.push_back(by_weight[w]);
        E.type.emplace_back(want);
      }
  return E;
}

auto det5(const std::array<Row, 5>& m) -> long {
  long a[5][5];
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) a[i][j] = m[i][j];
  long sign = 1, prev = 1;
  for (int k = 0; k < 4; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < 5 && a[r][k] == 0) ++r;
      if (r == 5) return 0;
      for (int j = 0; j < 5; ++j) std::swap(a[k][j], a[r][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < 5; ++i)
      for (int j = k + 1; j < 5; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[4][4];
}

auto inv_mod(long a, long p) -> long {
  long r = 1, e = p - 2, b = ((a % p) + p) % p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Rank of N mod p and, when the rank is 4, the normalized kernel vector.
auto kernel_mod(const std::array<Row, 5>& N, long p, AVec& out) -> std::size_t {
  long a[5][5];
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) a[i][j] = ((N[i][j] % p) + p) % p;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < 5 && r < 5; ++c) {
    int pr = -1;
    for (int i = r; i < 5; ++i)
      if (a[i][c]) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < 5; ++j) std::swap(a[r][j], a[pr][j]);
    long iv = inv_mod(a[r][c], p);
    for (int j = 0; j < 5; ++j) a[r][j] = a[r][j] * iv % p;
    for (int i = 0; i < 5; ++i)
      if (i != r && a[i][c]) {
        long f = a[i][c];
        for (int j = 0; j < 5; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
      }
    piv.push_back(c);
    ++r;
  }
  if (r != 4) return static_cast<std::size_t>(r);
  int free = 0;
  while (std::find(piv.begin(), piv.end(), free) != piv.end()) ++free;
  AVec v{};
  v[free] = 1;
  for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = static_cast<std::uint32_t>((p - a[i][free]) % p);
  out = normalize(static_cast<std::uint32_t>(p), v);
  return 4;
}

constexpr std::uint32_t kTrialBound = 200;

auto prime_factors(long d) -> std::vector<std::uint32_t> {
  std::vector<std::uint32_t> out;
  d = std::labs(d);
  for (std::uint32_t q = 2; q < kTrialBound && d > 1; ++q) {
    if (!is_prime(q) || d % q) continue;
    out.push_back(q);
    while (d % q == 0) d /= q;
  }
  if (d > 1) {
    if (!is_prime(static_cast<std::uint64_t>(d)) || d >= static_cast<long>(kTrialBound) * kTrialBound)
      throw std::logic_error("determinant cofactor " + std::to_string(d) + " needs full factorization");
    out.push_back(static_cast<std::uint32_t>(d));
  }
  return out;
}

} // namespace

auto EMatrix::hash() const -> std::string {
  // FNV-1a over the row entries.
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& r : rows)
    for (int x : r) {
      h ^= static_cast<std::uint64_t>(x + 7);
      h *= 1099511628211ull;
    }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

auto build_E() -> const EMatrix& {
  static const EMatrix E = make_E();
  return E;
}

auto PrimeFilter::parse(const std::string& s) -> PrimeFilter {
  PrimeFilter f;
  if (s.empty()) return f;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      f.lo = f.hi = static_cast<std::uint32_t>(std::stoul(s));
    } else {
      f.lo = static_cast<std::uint32_t>(std::stoul(s.substr(0, dots)));
      auto hi = s.substr(dots + 2);
      if (!hi.empty()) f.hi = static_cast<std::uint32_t>(std::stoul(hi));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad prime filter '" + s + "' (use P or LO..HI)");
  }
  if (f.lo > f.hi) throw std::invalid_argument("empty prime range '" + s + "'");
  return f;
}

auto PrimeFilter::to_string() const -> std::string {
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + ".." + (hi == kNoBound ? std::string() : std::to_string(hi));
}

auto normalize(std::uint32_t p, AVec a) -> AVec {
  for (auto& x : a) x %= p;
  auto it = std::find_if(a.begin(), a.end(), [](std::uint32_t x) { return x != 0; });
  if (it == a.end()) return a;
  long iv = inv_mod(*it, p);
  for (auto& x : a) x = static_cast<std::uint32_t>(x * iv % p);
  return a;
}

auto enumerate_hits(const PrimeFilter& filter, unsigned jobs) -> Enumeration {
  const auto& E = build_E();
  const int n = static_cast<int>(E.rows.size());
  struct Chunk {
    std::uint64_t subsets = 0, nonsingular = 0;
    std::vector<SearchHit> hits;
    std::vector<LemmaViolation> violations;
  };
  std::vector<Chunk> chunks(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (int i0; (i0 = next.fetch_add(1)) < n;) {
        auto& ch = chunks[static_cast<std::size_t>(i0)];
        std::array<Row, 5> N;
        N[0] = E.rows[i0];
        for (int i1 = i0 + 1; i1 < n; ++i1) {
          N[1] = E.rows[i1];
          for (int i2 = i1 + 1; i2 < n; ++i2) {
            N[2] = E.rows[i2];
            for (int i3 = i2 + 1; i3 < n; ++i3) {
              N[3] = E.rows[i3];
              for (int i4 = i3 + 1; i4 < n; ++i4) {
                N[4] = E.rows[i4];
                ++ch.subsets;
                long d = det5(N);
                if (d == 0) continue;
                ++ch.nonsingular;
                for (auto p : prime_factors(d)) {
                  if (p < 5 || !filter.contains(p)) continue;
                  std::array<std::uint8_t, 5> idx{static_cast<std::uint8_t>(i0), static_cast<std::uint8_t>(i1),
                                                  static_cast<std::uint8_t>(i2), static_cast<std::uint8_t>(i3),
                                                  static_cast<std::uint8_t>(i4)};
                  AVec a{};
                  auto r = kernel_mod(N, p, a);
                  if (r != 4) {
                    ch.violations.push_back({idx, p, r});
                    continue;
                  }
                  ch.hits.push_back({p, a, idx, d});
                }
              }
            }
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  Enumeration out;
  for (auto& ch : chunks) {
    out.subsets += ch.subsets;
    out.nonsingular += ch.nonsingular;
    for (const auto& h : ch.hits) ++out.hits_per_prime[h.p];
    out.hits.insert(out.hits.end(), ch.hits.begin(), ch.hits.end());
    out.violations.insert(out.violations.end(), ch.violations.begin(), ch.violations.end());
  }
  return out;
}

auto monomial_set(std::uint32_t p, const AVec& a) -> std::vector<int> {
  std::vector<int> out;
  for (int m = 0; m < pl::kMonos; ++m) {
    auto w = pl::mono_weight(m);
    std::uint64_t s = 0;
    for (int i = 0; i < 5; ++i) s += static_cast<std::uint64_t>(w[i]) * a[i];
    if (s % p == 0) out.push_back(m);
  }
  return out;
}

auto canonical(std::uint32_t p, const AVec& a) -> AVec {
  std::array<int, 5> s{0, 1, 2, 3, 4};
  AVec best{};
  bool have = false;
  do {
    for (std::uint32_t c = 1; c < p; ++c) {
      AVec b;
      for (int i = 0; i < 5; ++i) b[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[s[i]]) * c % p);
      if (!have || b < best) {
        best = b;
        have = true;
      }
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return best;
}

auto cond_singular_points(std::uint32_t p, const AVec& a) -> bool {
  auto ms = monomial_set(p, a);
  std::set<int> M(ms.begin(), ms.end());
  auto has = [&](int x, int y) { return M.count(pl::mono_index(std::min(x, y), std::max(x, y))) > 0; };
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      int ij = pl::pair_index(i, j);
      bool ok = has(ij, ij);
      for (int k = 1; k <= 5 && !ok; ++k) {
        if (k == i || k == j) continue;
        ok = has(ij, pl::pair_index(i, k)) || has(ij, pl::pair_index(j, k));
      }
      if (!ok) return false;
    }
  return true;
}

auto cond_repeated_eigenvalue(const AVec& a) -> bool {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (a[i] == a[j]) return true;
  return false;
}

auto distinct_pairs(const std::vector<SearchHit>& hits) -> std::map<ClassKey, std::uint64_t> {
  std::map<ClassKey, std::uint64_t> out;
  for (const auto& h : hits) ++out[{h.p, h.a}];
  return out;
}

namespace {

auto group(const std::vector<SearchHit>& hits, bool filtered) -> std::map<ClassKey, FamilyClass> {
  std::map<ClassKey, FamilyClass> out;
  for (const auto& [key, count] : distinct_pairs(hits)) {
    if (filtered && !(cond_singular_points(key.p, key.a) && cond_repeated_eigenvalue(key.a))) continue;
    AVec c = canonical(key.p, key.a);
    auto& fc = out[{key.p, c}];
    if (fc.p == 0) {
      fc.p = key.p;
      fc.a = c;
      fc.monomials = monomial_set(key.p, c);
    }
    fc.witnesses += count;
    fc.members.push_back(key.a);
  }
  return out;
}

} // namespace

auto classes_before_filters(const std::vector<SearchHit>& hits) -> std::map<ClassKey, FamilyClass> {
  return group(hits, false);
}

auto filter_hits(const std::vector<SearchHit>& hits) -> std::vector<FamilyClass> {
  std::vector<FamilyClass> out;
  for (auto& [k, v] : group(hits, true)) out.push_back(std::move(v));
  return out;
}

auto KnownFamily::a() const -> AVec {
  AVec r{};
  for (int i = 0; i < 5; ++i) r[i] = static_cast<std::uint32_t>(((-diag[i]) % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p));
  return r;
}

auto known_families() -> const std::vector<KnownFamily>& {
  static const std::vector<KnownFamily> fams{
      {"1", 5, {-2, 0, -3, -4, 0},
       {"14.24", "23.34", "25.25", "15.35", "14.45", "34.35", "12.23", "12.35", "13.25", "15.23", "13.13"}},
      {"2", 5, {-1, -3, -3, -4, -4},
       {"14.14", "15.15", "24.45", "25.45", "14.15", "12.23", "34.45", "35.45", "13.23"}},
      {"3", 5, {-2, -3, 0, -4, -4},
       {"23.24", "23.25", "24.45", "25.45", "13.23", "13.45", "14.35", "15.34", "12.12", "14.34", "15.35"}},
      {"4", 5, {-2, -3, 0, -2, -4},
       {"14.45", "24.24", "23.25", "23.34", "14.15", "12.24", "13.23", "35.45", "12.12", "15.35"}},
      {"p7", 7, {0, -1, -4, -1, -6}, {"24.34", "12.15", "13.35", "25.25", "25.45", "14.15", "45.45", "23.24"}},
  };
  return fams;
}

auto known_family(const std::string& id) -> const KnownFamily& {
  for (const auto& f : known_families())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown family '" + id + "' (expected 1, 2, 3, 4 or p7)");
}

namespace {

auto relabel(int mono, const std::array<int, 5>& to_new) -> int {
  auto [a, b] = pl::mono_at(mono);
  auto move = [&](int pair) {
    auto [i, j] = pl::pair_at(pair);
    return pl::pair_index(to_new[i - 1] + 1, to_new[j - 1] + 1);
  };
  int x = move(a), y = move(b);
  return pl::mono_index(std::min(x, y), std::max(x, y));
}

} // namespace

auto match_family(const KnownFamily& f, const FamilyClass& cls) -> bool {
  if (f.p != cls.p) return false;
  AVec pa = f.a();
  std::vector<int> printed_set;
  for (const auto& k : f.monomials) printed_set.push_back(pl::mono_from_key(k));
  std::sort(printed_set.begin(), printed_set.end());
  if (printed_set != monomial_set(f.p, pa)) return false;
  std::array<int, 5> s{0, 1, 2, 3, 4};
  do {
    for (std::uint32_t c = 1; c < f.p; ++c) {
      bool eq = true;
      for (int i = 0; i < 5 && eq; ++i) eq = cls.a[i] == pa[s[i]] * c % f.p;
      if (!eq) continue;
      std::array<int, 5> to_new{};
      for (int i = 0; i < 5; ++i) to_new[s[i]] = i;
      std::vector<int> moved;
      for (int m : printed_set) moved.push_back(relabel(m, to_new));
      std::sort(moved.begin(), moved.end());
      if (moved == cls.monomials) return true;
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

auto SingularityCertificate::passed() const -> bool {
  return point_nonzero && on_grassmannian && on_quadric && minors4_vanish && minor3.has_value() &&
         numeric_passed == numeric_samples;
}

namespace {

template <Ring R>
auto leibniz_det(const R& ring, const Matrix<typename R::value_type>& J, const std::vector<int>& rows,
                 const std::vector<int>& cols) -> typename R::value_type {
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto total = ring.zero();
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    auto term = ring.one();
    bool zero = false;
    for (std::size_t i = 0; i < perm.size() && !zero; ++i) {
      const auto& x = J(rows[i], cols[perm[i]]);
      if (ring.is_zero(x)) zero = true;
      else term = term * x;
    }
    if (!zero) total = inv % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <Ring R>
void exact_checks(const R& ring, const pl::QuadricForm<typename R::value_type>& Q,
                  const std::vector<typename R::value_type>& P, SingularityCertificate& cert) {
  cert.point.clear();
  for (const auto& x : P) cert.point.push_back(x.to_string());
  cert.point_nonzero = std::any_of(P.begin(), P.end(), [&](const auto& x) { return !ring.is_zero(x); });
  cert.on_grassmannian = cert.point_nonzero && pl::gr_membership(ring, P);
  cert.on_quadric = ring.is_zero(pl::evaluate(ring, Q, P));
  std::vector<pl::QuadricForm<typename R::value_type>> qs;
  for (int k = 1; k <= 5; ++k) qs.push_back(pl::pluecker_quadric(ring, k));
  qs.push_back(Q);
  auto J = pl::jacobian_rows(ring, qs, P);
  cert.minors4_vanish = true;
  cert.minors4_checked = 0;
  for_each_subset(6, 4, [&](const std::vector<int>& rows) {
    for_each_subset(pl::kPairs, 4, [&](const std::vector<int>& cols) {
      ++cert.minors4_checked;
      if (!ring.is_zero(leibniz_det(ring, J, rows, cols))) cert.minors4_vanish = false;
    });
  });
  cert.minor3.reset();
  for_each_subset(6, 3, [&](const std::vector<int>& rows) {
    if (cert.minor3) return;
    for_each_subset(pl::kPairs, 3, [&](const std::vector<int>& cols) {
      if (cert.minor3) return;
      auto d = leibniz_det(ring, J, rows, cols);
      if (!ring.is_zero(d)) cert.minor3 = MinorWitness{{rows[0], rows[1], rows[2]}, {cols[0], cols[1], cols[2]}, d.to_string()};
    });
  });
}

// Point of each family as polynomials in t (index into the t variables, sign).
struct PointSpec {
  std::vector<std::pair<int, std::pair<int, int>>> entries;  // coordinate -> (t index, sign)
};

auto point_spec(const std::string& id) -> PointSpec {
  auto c = [](const char* name) { return pl::pair_index(name[0] - '0', name[1] - '0'); };
  if (id == "1") return {{{c("24"), {5, 1}}, {c("45"), {1, -1}}}};
  if (id == "2") return {{{c("12"), {9, 1}}, {c("13"), {6, -1}}}};
  if (id == "4") return {{{c("13"), {4, 1}}, {c("34"), {7, -1}}}};
  if (id == "p7") return {{{c("12"), {6, 1}}, {c("14"), {2, -1}}}};
  throw std::logic_error("no polynomial point for family " + id);
}

auto t_names(std::size_t n) -> std::vector<std::string> {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

template <Ring R>
auto generic_quadric(const R& ring, const std::vector<typename R::value_type>& t, const KnownFamily& f) {
  pl::QuadricForm<typename R::value_type> Q;
  for (std::size_t k = 0; k < f.monomials.size(); ++k) pl::qf_add_term(ring, Q, pl::mono_from_key(f.monomials[k]), t[k]);
  return Q;
}

template <class T>
auto quadric_string(const pl::QuadricForm<T>& Q, const KnownFamily& f) -> std::string {
  std::string s;
  for (std::size_t k = 0; k < f.monomials.size(); ++k) {
    if (k) s += " + ";
    s += "t" + std::to_string(k + 1) + "*" + pl::mono_name(pl::mono_from_key(f.monomials[k]));
  }
  (void)Q;
  return s;
}

// Numeric re-check at one sample; false means the sample was degenerate.
auto numeric_sample(const KnownFamily& f, const FiniteField& F, std::mt19937_64& rng, bool& ok) -> bool {
  std::size_t n = f.monomials.size();
  std::vector<Fq> t(n);
  for (auto& x : t) x = F.random(rng);
  std::vector<Fq> P(pl::kPairs, F.zero());
  if (f.id == "3") {
    Fq t7 = t[6], t8 = t[7], t10 = t[9], t11 = t[10];
    if (F.is_zero(t10)) return false;
    Fq b = t7 + t8;
    Fq disc = b * b - F.from_int(4) * t10 * t11;
    if (!F.is_square(disc)) return false;
    Fq lambda = (F.zero() - b + F.sqrt(disc)) * F.inv(F.from_int(2) * t10);
    if (!F.is_zero(t10 * lambda * lambda + b * lambda + t11)) {
      ok = false;
      return true;
    }
    P[pl::pair_index(1, 4)] = lambda;
    P[pl::pair_index(1, 5)] = F.one();
  } else {
    for (const auto& [coord, ts] : point_spec(f.id).entries)
      P[coord] = ts.second > 0 ? t[ts.first - 1] : F.zero() - t[ts.first - 1];
  }
  if (std::all_of(P.begin(), P.end(), [&](Fq x) { return F.is_zero(x); })) return false;
  auto Q = generic_quadric(F, t, f);
  std::vector<pl::QuadricForm<Fq>> qs;
  for (int k = 1; k <= 5; ++k) qs.push_back(pl::pluecker_quadric(F, k));
  qs.push_back(Q);
  ok = pl::gr_membership(F, P) && F.is_zero(pl::evaluate(F, Q, P)) && rank(F, pl::jacobian_rows(F, qs, P)) == 3;
  return true;
}

} // namespace

auto certify_family_singular(const KnownFamily& f, std::size_t samples, std::uint64_t seed) -> SingularityCertificate {
  SingularityCertificate cert;
  cert.family = f.id;
  cert.p = f.p;
  cert.variables = t_names(f.monomials.size());
  PolyRing base(f.p, cert.variables);
  std::vector<Poly> t;
  for (std::size_t i = 0; i < cert.variables.size(); ++i) t.push_back(base.var(i));
  if (f.id == "3") {
    // mu = t10*lambda satisfies mu^2 + (t7+t8) mu + t10 t11 = 0; the point
    // (0:0:lambda:1:0:...) is rescaled by t10.
    auto K = QuadExtRing::monic_after_scaling(base, t[9], t[6] + t[7], t[10], "mu");
    cert.ring = "F" + std::to_string(f.p) + "[t1..t11][mu]/(mu^2 + (t7+t8)*mu + t10*t11), mu = t10*lambda";
    std::vector<QElem> tq;
    for (const auto& x : t) tq.push_back(K.embed(x));
    auto Q = generic_quadric(K, tq, f);
    cert.quadric = quadric_string(Q, f);
    std::vector<QElem> P(pl::kPairs, K.zero());
    P[pl::pair_index(1, 4)] = K.gen();
    P[pl::pair_index(1, 5)] = K.embed(t[9]);
    exact_checks(K, Q, P, cert);
  } else {
    cert.ring = "F" + std::to_string(f.p) + "[t1..t" + std::to_string(t.size()) + "]";
    auto Q = generic_quadric(base, t, f);
    cert.quadric = quadric_string(Q, f);
    std::vector<Poly> P(pl::kPairs, base.zero());
    for (const auto& [coord, ts] : point_spec(f.id).entries) P[coord] = ts.second > 0 ? t[ts.first - 1] : -t[ts.first - 1];
    exact_checks(base, Q, P, cert);
  }
  const auto& F = FiniteField::get(f.p, 4);
  std::mt19937_64 rng(seed);
  cert.numeric_samples = samples;
  std::size_t attempts = 0;
  for (std::size_t done = 0; done < samples;) {
    if (++attempts > samples * 1000) throw CertificateFailed("numeric re-check could not find usable samples");
    bool ok = false;
    if (!numeric_sample(f, F, rng, ok)) continue;
    ++done;
    cert.numeric_passed += ok;
  }
  return cert;
}

auto NilpotentReport::passed() const -> bool {
  return std::all_of(cases.begin(), cases.end(), [](const NilpotentCase& c) { return c.kernel_q == c.kernel_p; });
}

auto verify_nilpotent_lift(std::uint32_t p) -> NilpotentReport {
  NilpotentReport r{p, {}};
  Integers Z;
  for (unsigned pattern = 0; pattern < 16; ++pattern) {
    IntMatrix A(5, 5, Int(0));
    for (int k = 0; k < 4; ++k)
      if (pattern & (1u << k)) A(k, k + 1) = 1;
    auto M = pl::action_matrix(Z, A);
    r.cases.push_back({pattern, pl::kMonos - rank_over(M, FieldDesc::rationals()), pl::kMonos - rank_over(M, FieldDesc::prime(p))});
  }
  return r;
}

auto avec_string(const AVec& a) -> std::string {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

auto pattern_string(unsigned pattern) -> std::string {
  std::string s;
  for (int b = 0; b < 4; ++b) s += (pattern >> b & 1U) ? '1' : '0';
  return s;
}

} // namespace gmlab::vf
