#pragma once

#include "gmlab/exact/finite_field.hpp"
#include "gmlab/exact/integer.hpp"
#include "gmlab/exact/matrix.hpp"
#include "gmlab/exact/rings.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmlab::gm {

// Basis of wedge^k R^n: k-subsets as bitmasks in lex order of their sorted
// index lists (0-based).
struct ExtBasis {
  int n = 0, k = 0;
  std::vector<unsigned> masks;
  std::vector<int> index_of;  // by mask, -1 if |mask| != k
  [[nodiscard]] auto size() const -> std::size_t { return masks.size(); }
  [[nodiscard]] auto index(unsigned mask) const -> int { return index_of[mask]; }
};
auto ext_basis(int n, int k) -> const ExtBasis&;

// Sign of e_I ^ e_J against e_{I cup J}; 0 if I and J meet.
auto merge_sign(unsigned I, unsigned J) -> int;
// "146" style label, 1-based.
auto mask_label(unsigned mask) -> std::string;

class CompatibilityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class RankDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline auto elem_string(const Fq& x) -> std::string { return std::to_string(x.v); }
inline auto elem_string(const Rat& x) -> std::string { return gmlab::to_string(x); }
inline auto elem_string(const Zpk& x) -> std::string { return std::to_string(x.v); }

inline auto random_elem(const FiniteField& F, std::mt19937_64& rng) -> Fq { return F.random(rng); }
inline auto random_elem(const IntegersMod& R, std::mt19937_64& rng) -> Zpk { return R.random(rng); }
inline auto random_elem(const Rationals&, std::mt19937_64& rng) -> Rat {
  return Rat(static_cast<long>(rng() % 7) - 3);
}

template <Ring R>
auto wedge(const R& ring, const std::vector<typename R::value_type>& x, int a, const std::vector<typename R::value_type>& y,
           int b, int n) -> std::vector<typename R::value_type> {
  const auto& X = ext_basis(n, a);
  const auto& Y = ext_basis(n, b);
  const auto& Z = ext_basis(n, a + b);
  std::vector<typename R::value_type> out(Z.size(), ring.zero());
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (ring.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < Y.size(); ++j) {
      if (ring.is_zero(y[j])) continue;
      int s = merge_sign(X.masks[i], Y.masks[j]);
      if (s == 0) continue;
      auto& slot = out[Z.index(X.masks[i] | Y.masks[j])];
      typename R::value_type prod = x[i] * y[j];
      if (s > 0) slot = slot + prod;
      else slot = slot - prod;
    }
  }
  return out;
}

// Interior product phi _| xi for xi in wedge^k R^n (graded derivation).
template <Ring R>
auto contract(const R& ring, const std::vector<typename R::value_type>& phi, const std::vector<typename R::value_type>& xi,
              int k, int n) -> std::vector<typename R::value_type> {
  const auto& X = ext_basis(n, k);
  const auto& Z = ext_basis(n, k - 1);
  std::vector<typename R::value_type> out(Z.size(), ring.zero());
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (ring.is_zero(xi[i])) continue;
    int pos = 0;
    for (int t = 0; t < n; ++t) {
      if (!(X.masks[i] >> t & 1u)) continue;
      auto& slot = out[Z.index(X.masks[i] & ~(1u << t))];
      typename R::value_type term = phi[t] * xi[i];
      if (pos % 2) slot = slot - term;
      else slot = slot + term;
      ++pos;
    }
  }
  return out;
}

// 20x20 Gram matrix of the wedge pairing on wedge^3 R^6.
template <Ring R>
auto omega(const R& ring) -> Matrix<typename R::value_type> {
  const auto& B = ext_basis(6, 3);
  Matrix<typename R::value_type> O(20, 20, ring.zero());
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j) {
      int s = merge_sign(B.masks[i], B.masks[j]);
      if (s) O(i, j) = ring.from_int(s);
    }
  return O;
}

template <Ring R>
auto det3(const R& ring, const Matrix<typename R::value_type>& M, const std::array<int, 3>& r, const std::array<int, 3>& c)
    -> typename R::value_type {
  (void)ring;
  auto m = [&](int i, int j) -> const typename R::value_type& { return M(r[i], c[j]); };
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// wedge^3 of an n x m matrix: C(n,3) x C(m,3) of 3x3 minors.
template <Ring R>
auto exterior3(const R& ring, const Matrix<typename R::value_type>& G) -> Matrix<typename R::value_type> {
  const auto& RB = ext_basis(static_cast<int>(G.rows()), 3);
  const auto& CB = ext_basis(static_cast<int>(G.cols()), 3);
  auto idx = [](unsigned mask) {
    std::array<int, 3> out{};
    int k = 0;
    for (int t = 0; t < 32 && k < 3; ++t)
      if (mask >> t & 1u) out[k++] = t;
    return out;
  };
  Matrix<typename R::value_type> E(RB.size(), CB.size(), ring.zero());
  for (std::size_t i = 0; i < RB.size(); ++i)
    for (std::size_t j = 0; j < CB.size(); ++j) E(i, j) = det3(ring, G, idx(RB.masks[i]), idx(CB.masks[j]));
  return E;
}

template <LocalRing R>
struct GMDatum {
  using T = typename R::value_type;
  int n = 0;
  Matrix<T> V5;               // 6x5 basis of V5 in V6 = R^6
  T eps;                      // eps(b1 ^ ... ^ b5) for the basis columns b
  Matrix<T> W;                // 10 x (n+5), canonical basis, wedge^2 coordinates in the V5 basis
  std::array<Matrix<T>, 6> q; // q(e_i) as symmetric forms on W
};

template <LocalRing R>
struct LagrangianDatum {
  using T = typename R::value_type;
  int n = 0;
  Matrix<T> V5;
  T eps;
  Matrix<T> A;  // 20x10 canonical basis in wedge^3 R^6
};

// [V5 | e_j] for the first standard vector completing the basis.
template <LocalRing R>
auto adapted_basis(const R& ring, const Matrix<typename R::value_type>& V5) -> Matrix<typename R::value_type> {
  if (V5.rows() != 6 || V5.cols() != 5) throw std::invalid_argument("V5 must be a 6x5 basis matrix");
  for (std::size_t j = 0; j < 6; ++j) {
    Matrix<typename R::value_type> G(6, 6, ring.zero());
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t c = 0; c < 5; ++c) G(i, c) = V5(i, c);
      G(i, 5) = i == j ? ring.one() : ring.zero();
    }
    if (rank(ring, G) == 6) return G;
  }
  throw RankDefect("V5 is not a rank-5 direct summand");
}

template <LocalRing R>
auto standard_V5(const R& ring) -> Matrix<typename R::value_type> {
  Matrix<typename R::value_type> V(6, 5, ring.zero());
  for (std::size_t i = 0; i < 5; ++i) V(i, i) = ring.one();
  return V;
}

// Coefficient of f1^...^f5 in xi ^ w, xi in wedge^3, w in wedge^2 of R^5.
template <Ring R>
auto top5(const R& ring, const std::vector<typename R::value_type>& xi, const std::vector<typename R::value_type>& w)
    -> typename R::value_type {
  return wedge(ring, xi, 3, w, 2, 5)[0];
}

template <LocalRing R>
auto embed_v5(const R& ring, const std::vector<typename R::value_type>& x, int k) -> std::vector<typename R::value_type> {
  const auto& S = ext_basis(5, k);
  const auto& B = ext_basis(6, k);
  std::vector<typename R::value_type> out(B.size(), ring.zero());
  for (std::size_t i = 0; i < S.size(); ++i) out[B.index(S.masks[i])] = x[i];
  return out;
}

template <LocalRing R>
auto symmetric(const R& ring, const Matrix<typename R::value_type>& S) -> bool {
  (void)ring;
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(S(i, j) == S(j, i))) return false;
  return true;
}

template <LocalRing R>
auto mat_add(const R& ring, Matrix<typename R::value_type> a, const Matrix<typename R::value_type>& b,
             const typename R::value_type& c) -> Matrix<typename R::value_type> {
  (void)ring;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) + c * b(i, j);
  return a;
}

// q(G e_j) for the columns of G.
template <LocalRing R>
auto q_on_basis(const R& ring, const GMDatum<R>& D, const Matrix<typename R::value_type>& G)
    -> std::array<Matrix<typename R::value_type>, 6> {
  std::array<Matrix<typename R::value_type>, 6> out;
  std::size_t m = D.W.cols();
  for (std::size_t j = 0; j < 6; ++j) {
    out[j] = Matrix<typename R::value_type>(m, m, ring.zero());
    for (std::size_t i = 0; i < 6; ++i) out[j] = mat_add(ring, out[j], D.q[i], G(i, j));
  }
  return out;
}

// eps(v ^ w_a ^ w_b) for v = basis vector j of V5.
template <LocalRing R>
auto compat_form(const R& ring, const Matrix<typename R::value_type>& W, const typename R::value_type& eps, int j)
    -> Matrix<typename R::value_type> {
  std::size_t m = W.cols();
  std::vector<typename R::value_type> ej(5, ring.zero());
  ej[j] = ring.one();
  Matrix<typename R::value_type> S(m, m, ring.zero());
  for (std::size_t a = 0; a < m; ++a) {
    auto va = wedge(ring, ej, 1, W.col(a), 2, 5);
    for (std::size_t b = 0; b < m; ++b) S(a, b) = eps * top5(ring, va, W.col(b));
  }
  return S;
}

template <LocalRing R>
void check_gm_datum(const R& ring, const GMDatum<R>& D) {
  if (D.n < 3 || D.n > 5) throw std::invalid_argument("n must be 3, 4 or 5");
  if (!ring.is_unit(D.eps)) throw CompatibilityViolation("eps is not a unit");
  if (D.W.rows() != 10 || D.W.cols() != static_cast<std::size_t>(D.n + 5)) throw RankDefect("W must have rank n+5");
  auto e = rref(ring, D.W.transpose());
  if (!e.split || e.pivots.size() != D.W.cols()) throw RankDefect("W is not a direct summand of rank n+5");
  for (const auto& S : D.q)
    if (!symmetric(ring, S)) throw CompatibilityViolation("q(e_i) is not symmetric");
  auto qb = q_on_basis(ring, D, adapted_basis(ring, D.V5));
  for (int j = 0; j < 5; ++j)
    if (!(qb[j] == compat_form(ring, D.W, D.eps, j)))
      throw CompatibilityViolation("q(v)(w.w') != eps(v^w^w') for V5 basis vector " + std::to_string(j + 1));
}

template <LocalRing R>
auto is_isotropic(const R& ring, const Matrix<typename R::value_type>& A) -> bool {
  return is_zero_matrix(ring, mat_mul(ring, mat_mul(ring, A.transpose(), omega(ring)), A));
}

// Rank of A cap wedge^3 V5 (rank computed from the unit-pivot elimination).
template <LocalRing R>
auto intersection_rank(const R& ring, const Matrix<typename R::value_type>& A, const Matrix<typename R::value_type>& V5)
    -> std::size_t {
  auto both = hcat(A, exterior3(ring, V5), ring.zero());
  return A.cols() + 10 - rank(ring, both);
}

// A for the complement vector v0 = G e_6.
template <LocalRing R>
auto lagrangian_for(const R& ring, const GMDatum<R>& D, const Matrix<typename R::value_type>& G)
    -> Matrix<typename R::value_type> {
  using T = typename R::value_type;
  const std::size_t m = D.W.cols();
  auto S0 = q_on_basis(ring, D, G)[5];
  const auto& T5 = ext_basis(5, 3);
  // Columns: 10 wedge^3 V5 coordinates, then m coordinates of w in v0 ^ W.
  Matrix<T> M(m, 10 + m, ring.zero());
  for (std::size_t k = 0; k < m; ++k) {
    auto wk = D.W.col(k);
    for (std::size_t t = 0; t < T5.size(); ++t) {
      std::vector<T> e(10, ring.zero());
      e[t] = ring.one();
      M(k, t) = D.eps * top5(ring, e, wk);
    }
    for (std::size_t l = 0; l < m; ++l) M(k, 10 + l) = S0(l, k);
  }
  auto ker = kernel(ring, M);
  if (ker.size() != 10) throw RankDefect("kernel defining A has rank " + std::to_string(ker.size()));
  const auto& B6 = ext_basis(6, 3);
  const auto& P5 = ext_basis(5, 2);
  Matrix<T> Aad(20, 10, ring.zero());
  for (std::size_t c = 0; c < 10; ++c) {
    const auto& v = ker[c];
    for (std::size_t t = 0; t < 10; ++t) Aad(B6.index(T5.masks[t]), c) = v[t];
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t p = 0; p < 10; ++p) {
        if (ring.is_zero(D.W(p, l))) continue;
        auto& slot = Aad(B6.index(P5.masks[p] | (1u << 5)), c);
        slot = slot + D.W(p, l) * v[10 + l];
      }
  }
  return canonical_column_basis(ring, mat_mul(ring, exterior3(ring, G), Aad));
}

template <LocalRing R>
auto check_lagrangian_datum(const R& ring, const LagrangianDatum<R>& L) {
  if (L.n < 3 || L.n > 5) throw std::invalid_argument("n must be 3, 4 or 5");
  if (!ring.is_unit(L.eps)) throw CompatibilityViolation("eps is not a unit");
  auto e = rref(ring, L.A.transpose());
  if (L.A.rows() != 20 || !e.split || e.pivots.size() != 10) throw RankDefect("A is not a rank-10 direct summand");
  if (!is_isotropic(ring, L.A)) throw CompatibilityViolation("A is not isotropic");
  auto r = intersection_rank(ring, L.A, L.V5);
  if (r != static_cast<std::size_t>(5 - L.n))
    throw RankDefect("rank(A cap wedge^3 V5) = " + std::to_string(r) + ", expected " + std::to_string(5 - L.n));
}

// gm -> Lagrangian. The v0-independence check reruns with v0 + (V5 element)
// given by `shift` in V5 coordinates.
template <LocalRing R>
auto gm_to_lagrangian(const R& ring, const GMDatum<R>& D, const std::vector<typename R::value_type>& shift)
    -> LagrangianDatum<R> {
  if (!ring.is_unit(ring.from_int(2))) throw std::domain_error("2 must be invertible");
  check_gm_datum(ring, D);
  auto G = adapted_basis(ring, D.V5);
  LagrangianDatum<R> L{D.n, D.V5, D.eps, lagrangian_for(ring, D, G)};
  auto G2 = G;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 5; ++j) G2(i, 5) = G2(i, 5) + D.V5(i, j) * shift[j];
  if (!(lagrangian_for(ring, D, G2) == L.A)) throw CompatibilityViolation("A depends on the choice of v0");
  check_lagrangian_datum(ring, L);
  return L;
}

template <LocalRing R>
auto gm_to_lagrangian(const R& ring, const GMDatum<R>& D) -> LagrangianDatum<R> {
  std::vector<typename R::value_type> shift;
  for (int j = 1; j <= 5; ++j) shift.push_back(ring.from_int(j));
  return gm_to_lagrangian(ring, D, shift);
}

// Lagrangian -> gm with the functional phi = c * (dual of v0).
template <LocalRing R>
auto lagrangian_to_gm(const R& ring, const LagrangianDatum<R>& L, const typename R::value_type& c) -> GMDatum<R> {
  using T = typename R::value_type;
  if (!ring.is_unit(ring.from_int(2))) throw std::domain_error("2 must be invertible");
  if (!ring.is_unit(c)) throw std::invalid_argument("phi must be primitive");
  check_lagrangian_datum(ring, L);
  auto G = adapted_basis(ring, L.V5);
  auto Ginv = inverse(ring, G);
  auto Aad = mat_mul(ring, exterior3(ring, Ginv), L.A);
  const auto& B6 = ext_basis(6, 3);
  const auto& P5 = ext_basis(5, 2);
  Matrix<T> P(10, 10, ring.zero());
  for (std::size_t p = 0; p < 10; ++p)
    for (std::size_t col = 0; col < 10; ++col) P(p, col) = c * Aad(B6.index(P5.masks[p] | (1u << 5)), col);
  GMDatum<R> D;
  D.n = L.n;
  D.V5 = L.V5;
  D.eps = L.eps;
  D.W = canonical_column_basis(ring, P);
  const std::size_t m = D.W.cols();
  if (m != static_cast<std::size_t>(L.n + 5)) throw RankDefect("rank(W) = " + std::to_string(m));
  std::vector<std::vector<T>> xi;
  for (std::size_t k = 0; k < m; ++k) {
    auto y = solve(ring, P, D.W.col(k));
    if (!y) throw std::logic_error("W column outside the image of A");
    xi.push_back(mat_vec(ring, Aad, *y));
  }
  std::array<Matrix<T>, 6> qf;
  const auto& B5 = ext_basis(6, 5);
  const int top = B5.index(0x1fu);
  for (int j = 0; j < 6; ++j) {
    qf[j] = Matrix<T>(m, m, ring.zero());
    std::vector<T> v(6, ring.zero());
    v[j] = ring.one();
    T phiv = j == 5 ? c : ring.zero();
    for (std::size_t a = 0; a < m; ++a) {
      auto va = wedge(ring, v, 1, embed_v5(ring, D.W.col(a), 2), 2, 6);
      for (std::size_t b = 0; b < m; ++b) {
        auto wb = embed_v5(ring, D.W.col(b), 2);
        auto t1 = wedge(ring, va, 3, wb, 2, 6);
        auto t2 = wedge(ring, xi[a], 3, wb, 2, 6);
        for (std::size_t s = 0; s < t1.size(); ++s) {
          T val = t1[s] - phiv * t2[s];
          if (static_cast<int>(s) == top) qf[j](a, b) = D.eps * val;
          else if (!ring.is_zero(val)) throw std::logic_error("q-tilde does not land in det(V5)");
        }
      }
    }
  }
  for (int i = 0; i < 6; ++i) {
    D.q[i] = Matrix<T>(m, m, ring.zero());
    for (int j = 0; j < 6; ++j) D.q[i] = mat_add(ring, D.q[i], qf[j], Ginv(j, i));
  }
  check_gm_datum(ring, D);
  return D;
}

template <LocalRing R>
auto lagrangian_to_gm(const R& ring, const LagrangianDatum<R>& L) -> GMDatum<R> {
  return lagrangian_to_gm(ring, L, ring.one());
}

template <LocalRing R>
auto random_unit(const R& ring, std::mt19937_64& rng) -> typename R::value_type {
  while (true) {
    auto x = random_elem(ring, rng);
    if (ring.is_unit(x)) return x;
  }
}

// Random GM datum: random W and q(v0), with q on V5 forced by compatibility.
template <LocalRing R>
auto random_gm_datum(const R& ring, int n, std::mt19937_64& rng, bool random_v5) -> GMDatum<R> {
  using T = typename R::value_type;
  GMDatum<R> D;
  D.n = n;
  D.V5 = standard_V5(ring);
  if (random_v5)
    while (true) {
      Matrix<T> V(6, 5, ring.zero());
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 5; ++j) V(i, j) = random_elem(ring, rng);
      auto e = rref(ring, V.transpose());
      if (e.split && e.pivots.size() == 5) {
        D.V5 = V;
        break;
      }
    }
  D.eps = random_unit(ring, rng);
  const std::size_t m = static_cast<std::size_t>(n + 5);
  while (true) {
    Matrix<T> W(10, m, ring.zero());
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < m; ++j) W(i, j) = random_elem(ring, rng);
    auto e = rref(ring, W.transpose());
    if (e.split && e.pivots.size() == m) {
      D.W = canonical_column_basis(ring, W);
      break;
    }
  }
  auto G = adapted_basis(ring, D.V5);
  auto Ginv = inverse(ring, G);
  std::array<Matrix<T>, 6> qf;
  for (int j = 0; j < 5; ++j) qf[j] = compat_form(ring, D.W, D.eps, j);
  qf[5] = Matrix<T>(m, m, ring.zero());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) qf[5](a, b) = qf[5](b, a) = random_elem(ring, rng);
  for (int i = 0; i < 6; ++i) {
    D.q[i] = Matrix<T>(m, m, ring.zero());
    for (int j = 0; j < 6; ++j) D.q[i] = mat_add(ring, D.q[i], qf[j], Ginv(j, i));
  }
  return D;
}

template <LocalRing R>
auto same_gm(const GMDatum<R>& a, const GMDatum<R>& b) -> bool {
  return a.n == b.n && a.V5 == b.V5 && a.eps == b.eps && a.W == b.W && a.q == b.q;
}

struct RoundTripStats {
  int n = 0;
  std::size_t trials = 0;
  std::size_t recovered = 0;       // (W, q) back exactly, for phi and a rescaled phi
  std::size_t rank_ok = 0;         // rank(W) = n+5 and rank(A cap wedge^3 V5) = 5-n
  std::size_t v0_independent = 0;  // same A for a random second complement vector
  std::vector<std::string> errors;
  [[nodiscard]] auto passed() const -> bool {
    return trials > 0 && recovered == trials && rank_ok == trials && v0_independent == trials;
  }
};

template <LocalRing R>
auto roundtrip_suite(const R& ring, int n, std::size_t trials, std::uint64_t seed) -> RoundTripStats {
  using T = typename R::value_type;
  std::mt19937_64 rng(seed);
  RoundTripStats st;
  st.n = n;
  for (std::size_t t = 0; t < trials; ++t) {
    ++st.trials;
    try {
      auto D = random_gm_datum(ring, n, rng, t % 2 == 1);
      auto e = rref(ring, D.W.transpose());
      bool w_ok = e.split && e.pivots.size() == static_cast<std::size_t>(n + 5);
      std::vector<T> shift;
      for (int j = 0; j < 5; ++j) shift.push_back(random_elem(ring, rng));
      auto L = gm_to_lagrangian(ring, D, shift);
      ++st.v0_independent;
      if (w_ok && intersection_rank(ring, L.A, L.V5) == static_cast<std::size_t>(5 - n)) ++st.rank_ok;
      auto c = random_unit(ring, rng);
      if (same_gm(D, lagrangian_to_gm(ring, L)) && same_gm(D, lagrangian_to_gm(ring, L, c))) ++st.recovered;
    } catch (const std::exception& ex) {
      if (st.errors.size() < 5) st.errors.push_back(ex.what());
    }
  }
  return st;
}

struct LiftStats {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<std::string> errors;
  [[nodiscard]] auto ok() const -> bool { return trials > 0 && passed == trials; }
};

// Random Lagrangian data over F_p with n in {3,4,5}, each lifted to Z/p^k.
auto lift_suite(std::uint32_t p, unsigned k, std::size_t trials, std::uint64_t seed) -> LiftStats;

// Search for u in P(V6^dual)(F_{q^e}), e = 1..max_degree, with
// A cap wedge^3 ker(u) = 0.
struct OppositeV5 {
  bool found = false;
  unsigned degree = 0;           // e of the field where u lives
  std::string field;             // e.g. "F25"
  std::vector<std::uint32_t> u;  // element indices in that field
  std::uint64_t tested = 0;
};
auto find_opposite_V5(const FiniteField& F, const LagrangianDatum<FiniteField>& D, unsigned max_degree) -> OppositeV5;
// Basis of ker(u) wedge^3, 20x10.
auto wedge3_kernel(const FiniteField& F, const std::vector<Fq>& u) -> Matrix<Fq>;

struct DecomposableScan {
  bool found = false;
  unsigned degree = 0;
  std::string field;
  std::vector<std::vector<std::uint32_t>> witness;  // 3 rows of 6 element indices
  std::uint64_t tested = 0;
  bool exhausted_degree1 = false;  // every F_q-point of Gr(3,6) was tested
};
// Number of 3-dimensional subspaces of F_q^6 (Gaussian binomial).
auto grassmannian_3_6_points(std::uint64_t q) -> std::uint64_t;
auto scan_decomposables(const FiniteField& F, const Matrix<Fq>& A, std::uint64_t budget, unsigned max_degree = 3)
    -> DecomposableScan;

struct LiftResult {
  LagrangianDatum<IntegersMod> datum;
  Matrix<Zpk> L;                          // lift of A cap wedge^3 V5
  std::vector<unsigned> defect_valuations;  // p-adic valuation of the isotropy defect, before and after each step
  bool isotropic = false;
  bool summand = false;
  bool intersection_ok = false;
  bool reduction_ok = false;
  [[nodiscard]] auto passed() const -> bool { return isotropic && summand && intersection_ok && reduction_ok; }
};
auto lift_lagrangian(const LagrangianDatum<FiniteField>& D, unsigned k) -> LiftResult;
auto reduce(const Matrix<Zpk>& M, const FiniteField& F) -> Matrix<Fq>;

} // namespace gmlab::gm
