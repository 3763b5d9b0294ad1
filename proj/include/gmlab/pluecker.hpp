#pragma once

#include "gmlab/exact/matrix.hpp"
#include "gmlab/exact/rings.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmlab::pl {

inline constexpr int kPairs = 10;
inline constexpr int kMonos = 55;

// Pair (i, j), 1 <= i < j <= 5, in lex order x12, x13, ..., x45.
auto pair_at(int idx) -> std::pair<int, int>;
// Index of x_ij; requires i != j (order-insensitive).
auto pair_index(int i, int j) -> int;
auto pair_name(int idx) -> std::string;  // "x12"

// Monomial x_a x_b with pair indices a <= b, lex order.
auto mono_at(int idx) -> std::pair<int, int>;
auto mono_index(int a, int b) -> int;
auto mono_name(int idx) -> std::string;  // "x12*x34" or "x12^2"
auto mono_key(int idx) -> std::string;   // "12.34"
auto mono_from_key(const std::string& key) -> int;
// Indicator-sum weight; squares count twice.
auto mono_weight(int idx) -> std::array<int, 5>;

struct SignedMono {
  int mono;
  int sign;
};
// q_k, k = 1..5: Laplace expansion on the complement of k.
auto quadric_terms(int k) -> std::array<SignedMono, 3>;

class NonInvertibleScalar : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
struct QuadricForm {
  std::map<int, T> coeffs;  // monomial index -> nonzero coefficient
  friend auto operator==(const QuadricForm&, const QuadricForm&) -> bool = default;
};

template <Ring R>
void qf_add_term(const R& ring, QuadricForm<typename R::value_type>& q, int mono, const typename R::value_type& c) {
  if (ring.is_zero(c)) return;
  auto it = q.coeffs.find(mono);
  if (it == q.coeffs.end()) {
    q.coeffs.emplace(mono, c);
    return;
  }
  it->second = it->second + c;
  if (ring.is_zero(it->second)) q.coeffs.erase(it);
}

template <Ring R>
auto qf_add(const R& ring, QuadricForm<typename R::value_type> a, const QuadricForm<typename R::value_type>& b) {
  for (const auto& [m, c] : b.coeffs) qf_add_term(ring, a, m, c);
  return a;
}

template <Ring R>
auto qf_scale(const R& ring, const typename R::value_type& s, const QuadricForm<typename R::value_type>& a) {
  QuadricForm<typename R::value_type> r;
  for (const auto& [m, c] : a.coeffs) qf_add_term(ring, r, m, s * c);
  return r;
}

template <Ring R>
auto qf_sub(const R& ring, const QuadricForm<typename R::value_type>& a, const QuadricForm<typename R::value_type>& b) {
  return qf_add(ring, a, qf_scale(ring, ring.from_int(-1), b));
}

template <Ring R>
auto monomial(const R& ring, int mono) -> QuadricForm<typename R::value_type> {
  QuadricForm<typename R::value_type> q;
  qf_add_term(ring, q, mono, ring.one());
  return q;
}

template <Ring R>
auto pluecker_quadric(const R& ring, int k) -> QuadricForm<typename R::value_type> {
  QuadricForm<typename R::value_type> q;
  for (auto [m, s] : quadric_terms(k)) qf_add_term(ring, q, m, ring.from_int(s));
  return q;
}

template <Ring R>
auto pluecker_quadrics(const R& ring) -> std::array<QuadricForm<typename R::value_type>, 5> {
  std::array<QuadricForm<typename R::value_type>, 5> out;
  for (int k = 1; k <= 5; ++k) out[k - 1] = pluecker_quadric(ring, k);
  return out;
}

// Product of two linear forms in the ten Pluecker coordinates.
template <Ring R>
auto linear_product(const R& ring, const std::vector<typename R::value_type>& u,
                    const std::vector<typename R::value_type>& v) -> QuadricForm<typename R::value_type> {
  QuadricForm<typename R::value_type> q;
  for (int a = 0; a < kPairs; ++a) {
    if (ring.is_zero(u[a])) continue;
    for (int b = 0; b < kPairs; ++b) {
      if (ring.is_zero(v[b])) continue;
      qf_add_term(ring, q, mono_index(std::min(a, b), std::max(a, b)), u[a] * v[b]);
    }
  }
  return q;
}

// Image of the coordinate x_ab under A acting on V^dual by -A^t, as a linear form.
template <Ring R>
auto act_on_coordinate(const R& ring, const Matrix<typename R::value_type>& A, int idx)
    -> std::vector<typename R::value_type> {
  auto [i, j] = pair_at(idx);
  std::vector<typename R::value_type> out(kPairs, ring.zero());
  // e_i^ -> -sum_k A_ik e_k^, applied to each factor of e_i^ ^ e_j^.
  for (int k = 1; k <= 5; ++k) {
    const auto& aik = A(i - 1, k - 1);
    if (!ring.is_zero(aik) && k != j) {
      int s = k < j ? 1 : -1;
      out[pair_index(k, j)] = out[pair_index(k, j)] - ring.from_int(s) * aik;
    }
    const auto& ajk = A(j - 1, k - 1);
    if (!ring.is_zero(ajk) && k != i) {
      int s = i < k ? 1 : -1;
      out[pair_index(i, k)] = out[pair_index(i, k)] - ring.from_int(s) * ajk;
    }
  }
  return out;
}

template <Ring R>
auto act(const R& ring, const Matrix<typename R::value_type>& A, const QuadricForm<typename R::value_type>& Q)
    -> QuadricForm<typename R::value_type> {
  if (A.rows() != 5 || A.cols() != 5) throw std::invalid_argument("act: A must be 5x5");
  std::array<std::vector<typename R::value_type>, kPairs> img;
  for (int t = 0; t < kPairs; ++t) img[t] = act_on_coordinate(ring, A, t);
  QuadricForm<typename R::value_type> out;
  for (const auto& [m, c] : Q.coeffs) {
    auto [a, b] = mono_at(m);
    std::vector<typename R::value_type> ea(kPairs, ring.zero()), eb(kPairs, ring.zero());
    ea[a] = ring.one();
    eb[b] = ring.one();
    auto t = qf_add(ring, linear_product(ring, img[a], eb), linear_product(ring, ea, img[b]));
    out = qf_add(ring, out, qf_scale(ring, c, t));
  }
  return out;
}

// mu(Q) in the basis of wedge^4 V^dual indexed by the omitted index k = 1..5.
template <Ring R>
auto mu(const R& ring, const QuadricForm<typename R::value_type>& Q) -> std::array<typename R::value_type, 5> {
  std::array<typename R::value_type, 5> out;
  out.fill(ring.zero());
  for (const auto& [m, c] : Q.coeffs) {
    auto [a, b] = mono_at(m);
    auto [i, j] = pair_at(a);
    auto [k, l] = pair_at(b);
    std::array<int, 4> idx{i, j, k, l};
    int sign = 1;
    bool repeated = false;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) {
        if (idx[x] == idx[y]) repeated = true;
        if (idx[x] > idx[y]) sign = -sign;
      }
    if (repeated) continue;
    int omitted = 15 - (i + j + k + l);
    out[omitted - 1] = out[omitted - 1] + ring.from_int(sign) * c;
  }
  return out;
}

template <LocalRing R>
auto mu_split(const R& ring, const QuadricForm<typename R::value_type>& Q)
    -> std::pair<QuadricForm<typename R::value_type>, QuadricForm<typename R::value_type>> {
  if (!ring.is_unit(ring.from_int(6))) throw NonInvertibleScalar("mu_split needs 6 to be a unit");
  auto third = ring.inv(ring.from_int(3));
  auto m = mu(ring, Q);
  QuadricForm<typename R::value_type> qi;
  for (int k = 1; k <= 5; ++k) qi = qf_add(ring, qi, qf_scale(ring, m[k - 1] * third, pluecker_quadric(ring, k)));
  return {qi, qf_sub(ring, Q, qi)};
}

template <Ring R>
auto evaluate(const R& ring, const QuadricForm<typename R::value_type>& Q, const std::vector<typename R::value_type>& P)
    -> typename R::value_type {
  auto s = ring.zero();
  for (const auto& [m, c] : Q.coeffs) {
    auto [a, b] = mono_at(m);
    s = s + c * P[a] * P[b];
  }
  return s;
}

template <Ring R>
auto gr_membership(const R& ring, const std::vector<typename R::value_type>& P) -> bool {
  if (P.size() != kPairs) throw std::invalid_argument("a Pluecker point has 10 coordinates");
  bool nonzero = false;
  for (const auto& x : P) nonzero = nonzero || !ring.is_zero(x);
  if (!nonzero) throw ZeroPoint("the zero vector is not a point");
  for (int k = 1; k <= 5; ++k)
    if (!ring.is_zero(evaluate(ring, pluecker_quadric(ring, k), P))) return false;
  return true;
}

template <Ring R>
auto gradient(const R& ring, const QuadricForm<typename R::value_type>& Q, const std::vector<typename R::value_type>& P)
    -> std::vector<typename R::value_type> {
  std::vector<typename R::value_type> g(kPairs, ring.zero());
  for (const auto& [m, c] : Q.coeffs) {
    auto [a, b] = mono_at(m);
    if (a == b) {
      g[a] = g[a] + ring.from_int(2) * c * P[a];
    } else {
      g[a] = g[a] + c * P[b];
      g[b] = g[b] + c * P[a];
    }
  }
  return g;
}

template <Ring R>
auto jacobian_rows(const R& ring, const std::vector<QuadricForm<typename R::value_type>>& qs,
                   const std::vector<typename R::value_type>& P) -> Matrix<typename R::value_type> {
  Matrix<typename R::value_type> J(qs.size(), kPairs, ring.zero());
  for (std::size_t r = 0; r < qs.size(); ++r) {
    auto g = gradient(ring, qs[r], P);
    for (int c = 0; c < kPairs; ++c) J(r, c) = g[c];
  }
  return J;
}

// 55 x 55 matrix of Q -> A.Q in the monomial basis (column = source).
template <Ring R>
auto action_matrix(const R& ring, const Matrix<typename R::value_type>& A) -> Matrix<typename R::value_type> {
  Matrix<typename R::value_type> M(kMonos, kMonos, ring.zero());
  for (int s = 0; s < kMonos; ++s)
    for (const auto& [t, c] : act(ring, A, monomial(ring, s)).coeffs) M(t, s) = c;
  return M;
}

} // namespace gmlab::pl
