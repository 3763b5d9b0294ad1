#include "gmlab/gmlag.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace gmlab::gm {

auto ext_basis(int n, int k) -> const ExtBasis& {
  static const auto table = [] {
    std::vector<std::vector<ExtBasis>> t(7);
    for (int nn = 0; nn <= 6; ++nn)
      for (int kk = 0; kk <= nn; ++kk) {
        ExtBasis b;
        b.n = nn;
        b.k = kk;
        b.index_of.assign(1u << nn, -1);
        std::vector<std::vector<int>> subs;
        for (unsigned m = 0; m < (1u << nn); ++m) {
          if (std::popcount(m) != kk) continue;
          std::vector<int> s;
          for (int i = 0; i < nn; ++i)
            if (m >> i & 1u) s.push_back(i);
          subs.push_back(s);
        }
        std::sort(subs.begin(), subs.end());
        for (const auto& s : subs) {
          unsigned m = 0;
          for (int i : s) m |= 1u << i;
          b.index_of[m] = static_cast<int>(b.masks.size());
          b.masks.push_back(m);
        }
        t[nn].push_back(std::move(b));
      }
    return t;
  }();
  if (n < 0 || n > 6 || k < 0 || k > n) throw std::invalid_argument("ext_basis: unsupported (n, k)");
  return table[n][k];
}

auto merge_sign(unsigned I, unsigned J) -> int {
  if (I & J) return 0;
  int inv = 0;
  for (int j = 0; j < 32; ++j)
    if (J >> j & 1u) inv += std::popcount(I >> (j + 1));
  return inv % 2 ? -1 : 1;
}

auto mask_label(unsigned mask) -> std::string {
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) s += std::to_string(i + 1);
  return s;
}

namespace {

constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

auto embed(const Matrix<Fq>& M, const FiniteField& big, const std::vector<std::uint32_t>& table) -> Matrix<Fq> {
  Matrix<Fq> out(M.rows(), M.cols(), big.zero());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = big.element(table[M(i, j).v]);
  return out;
}

auto lift(const Matrix<Fq>& M, const IntegersMod& Z) -> Matrix<Zpk> {
  Matrix<Zpk> out(M.rows(), M.cols(), Z.zero());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = Z.from_int(static_cast<long long>(M(i, j).v));
  return out;
}

auto cols_of(const std::vector<std::vector<Zpk>>& v, std::size_t rows, const IntegersMod& Z) -> Matrix<Zpk> {
  Matrix<Zpk> M(rows, v.size(), Z.zero());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) M(i, j) = v[j][i];
  return M;
}

auto matrix_valuation(const Matrix<Zpk>& M, const IntegersMod& Z) -> unsigned {
  unsigned v = Z.precision();
  for (const auto& x : M.data()) v = std::min(v, Z.valuation(x));
  return v;
}

} // namespace

auto reduce(const Matrix<Zpk>& M, const FiniteField& F) -> Matrix<Fq> {
  Matrix<Fq> out(M.rows(), M.cols(), F.zero());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = F.from_int(M(i, j).v);
  return out;
}

auto wedge3_kernel(const FiniteField& F, const std::vector<Fq>& u) -> Matrix<Fq> {
  Matrix<Fq> row(1, 6, F.zero());
  for (std::size_t i = 0; i < 6; ++i) row(0, i) = u[i];
  auto ker = kernel(F, row);
  if (ker.size() != 5) throw std::invalid_argument("u must be nonzero");
  return exterior3(F, Matrix<Fq>::from_cols(ker, 6, F.zero()));
}

auto find_opposite_V5(const FiniteField& F, const LagrangianDatum<FiniteField>& D, unsigned max_degree) -> OppositeV5 {
  OppositeV5 out;
  auto test = [&](const FiniteField& big, const Matrix<Fq>& A, const std::vector<Fq>& u) {
    ++out.tested;
    return rank(big, hcat(A, wedge3_kernel(big, u), big.zero())) == 20;
  };
  auto record = [&](const FiniteField& big, unsigned e, const std::vector<Fq>& u) {
    out.found = true;
    out.degree = e;
    out.field = big.name();
    out.u.clear();
    for (const auto& x : u) out.u.push_back(x.v);
  };
  // The functional cutting out V5 itself comes first.
  auto Ginv = inverse(F, adapted_basis(F, D.V5));
  auto u0 = Ginv.row(5);
  if (test(F, D.A, u0)) {
    record(F, 1, u0);
    return out;
  }
  for (unsigned e = 1; e <= max_degree; ++e) {
    std::uint64_t order = 1;
    for (unsigned i = 0; i < F.degree() * e; ++i) order *= F.characteristic();
    if (order > kMaxFieldOrder) break;
    const auto& big = FiniteField::get(F.characteristic(), F.degree() * e);
    auto A = embed(D.A, big, FiniteField::embedding(F, big));
    const std::uint32_t q = big.order();
    for (int lead = 0; lead < 6; ++lead) {
      std::vector<std::uint32_t> odo(static_cast<std::size_t>(5 - lead), 0);
      while (true) {
        std::vector<Fq> u(6, big.zero());
        u[lead] = big.one();
        for (std::size_t t = 0; t < odo.size(); ++t) u[lead + 1 + t] = big.element(odo[t]);
        if (test(big, A, u)) {
          record(big, e, u);
          return out;
        }
        std::size_t t = odo.size();
        while (t > 0 && ++odo[t - 1] == q) odo[--t] = 0;
        if (t == 0) break;
      }
    }
  }
  return out;
}

auto grassmannian_3_6_points(std::uint64_t q) -> std::uint64_t {
  auto pw = [&](int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= q;
    return r;
  };
  return (pw(6) - 1) * (pw(5) - 1) * (pw(4) - 1) / ((pw(3) - 1) * (pw(2) - 1) * (q - 1));
}

auto scan_decomposables(const FiniteField& F, const Matrix<Fq>& A, std::uint64_t budget, unsigned max_degree)
    -> DecomposableScan {
  DecomposableScan out;
  // x lies in span(A) iff every left-kernel form of A vanishes on x.
  auto forms = kernel(F, A.transpose());
  const auto& B6 = ext_basis(6, 3);
  std::vector<std::array<int, 3>> triples;
  for (auto m : B6.masks) {
    std::array<int, 3> t{};
    int k = 0;
    for (int i = 0; i < 6; ++i)
      if (m >> i & 1u) t[k++] = i;
    triples.push_back(t);
  }
  for (unsigned e = 1; e <= max_degree && out.tested < budget; ++e) {
    std::uint64_t order = 1;
    for (unsigned i = 0; i < F.degree() * e; ++i) order *= F.characteristic();
    if (order > kMaxFieldOrder) break;
    const auto& big = FiniteField::get(F.characteristic(), F.degree() * e);
    auto table = FiniteField::embedding(F, big);
    std::vector<std::vector<Fq>> fb;
    for (const auto& f : forms) {
      std::vector<Fq> g;
      for (const auto& x : f) g.push_back(big.element(table[x.v]));
      fb.push_back(std::move(g));
    }
    const std::uint32_t q = big.order();
    bool complete = true;
    for (const auto& piv : triples) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < 3; ++r)
        for (int c = piv[r] + 1; c < 6; ++c)
          if (c != piv[0] && c != piv[1] && c != piv[2]) free.emplace_back(r, c);
      std::vector<std::uint32_t> odo(free.size(), 0);
      Matrix<Fq> U(3, 6, big.zero());
      for (int r = 0; r < 3; ++r) U(r, piv[r]) = big.one();
      while (true) {
        if (out.tested >= budget) {
          complete = false;
          break;
        }
        ++out.tested;
        for (std::size_t t = 0; t < free.size(); ++t) U(free[t].first, free[t].second) = big.element(odo[t]);
        std::array<Fq, 20> pl;
        for (std::size_t i = 0; i < 20; ++i) pl[i] = det3(big, U, {0, 1, 2}, triples[i]);
        bool in_A = true;
        for (const auto& f : fb) {
          Fq s = big.zero();
          for (std::size_t i = 0; i < 20; ++i) s += f[i] * pl[i];
          if (!big.is_zero(s)) {
            in_A = false;
            break;
          }
        }
        if (in_A) {
          out.found = true;
          out.degree = e;
          out.field = big.name();
          for (int r = 0; r < 3; ++r) {
            std::vector<std::uint32_t> row;
            for (int c = 0; c < 6; ++c) row.push_back(U(r, c).v);
            out.witness.push_back(row);
          }
          return out;
        }
        std::size_t t = odo.size();
        while (t > 0 && ++odo[t - 1] == q) odo[--t] = 0;
        if (t == 0) break;
      }
      if (!complete) break;
    }
    if (complete && e == 1) out.exhausted_degree1 = true;
    out.degree = e;
    out.field = big.name();
  }
  return out;
}

auto lift_lagrangian(const LagrangianDatum<FiniteField>& D, unsigned k) -> LiftResult {
  const FiniteField& F = *D.A(0, 0).field;
  if (F.degree() != 1) throw std::invalid_argument("lifting needs a prime field");
  if (F.characteristic() == 2) throw std::invalid_argument("p must be odd");
  if (k == 0) throw std::invalid_argument("precision must be >= 1");
  check_lagrangian_datum(F, D);
  const auto& Z = IntegersMod::get(F.characteristic(), k);
  const std::size_t l = static_cast<std::size_t>(5 - D.n);
  const std::size_t m = static_cast<std::size_t>(5 + D.n);

  LiftResult res;
  auto V5 = lift(D.V5, Z);
  auto E5 = exterior3(Z, V5);
  auto Om = omega(Z);

  // L = A cap wedge^3 V5 in wedge^3 V5 coordinates, then lifted.
  auto E5bar = exterior3(F, D.V5);
  Matrix<Fq> negE = E5bar;
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 10; ++j) negE(i, j) = -negE(i, j);
  auto rel = kernel(F, hcat(D.A, negE, F.zero()));
  Matrix<Fq> Lc(10, rel.size(), F.zero());
  for (std::size_t j = 0; j < rel.size(); ++j)
    for (std::size_t i = 0; i < 10; ++i) Lc(i, j) = rel[j][10 + i];
  if (rel.size() != l) throw std::logic_error("unexpected rank of A cap wedge^3 V5");
  if (l > 0) Lc = canonical_column_basis(F, Lc);
  res.L = mat_mul(Z, E5, lift(Lc, Z));

  // L^perp and a complement C of L inside it.
  auto Lperp = cols_of(kernel(Z, mat_mul(Z, res.L.transpose(), Om)), 20, Z);
  auto sel = rref(F, reduce(hcat(res.L, Lperp, Z.zero()), F));
  Matrix<Zpk> C(20, 10 + 2 * static_cast<std::size_t>(D.n), Z.zero());
  std::size_t ci = 0;
  for (auto p : sel.pivots) {
    if (p < l) continue;
    for (std::size_t i = 0; i < 20; ++i) C(i, ci) = Lperp(i, p - l);
    ++ci;
  }
  if (ci != C.cols()) throw std::logic_error("L^perp/L has the wrong rank");
  auto J = mat_mul(Z, mat_mul(Z, C.transpose(), Om), C);

  // A/L in the basis C of T = L^perp / L.
  auto basis_bar = reduce(hcat(res.L, C, Z.zero()), F);
  Matrix<Fq> Abar(C.cols(), 10, F.zero());
  for (std::size_t j = 0; j < 10; ++j) {
    auto x = solve(F, basis_bar, D.A.col(j));
    if (!x) throw std::logic_error("A is not contained in L^perp");
    for (std::size_t i = 0; i < C.cols(); ++i) Abar(i, j) = (*x)[l + i];
  }
  Abar = canonical_column_basis(F, Abar);
  if (Abar.cols() != m) throw std::logic_error("A/L is not Lagrangian in T");

  // Complement Zc with X^t J Zc invertible mod p.
  auto X = lift(Abar, Z);
  auto piv = rref(F, reduce(mat_mul(Z, X.transpose(), J), F)).pivots;
  Matrix<Zpk> Zc(C.cols(), m, Z.zero());
  for (std::size_t j = 0; j < m; ++j) Zc(piv[j], j) = Z.one();
  const Zpk half = Z.inv(Z.from_int(2));
  for (int step = 0; step < 64; ++step) {
    auto S = mat_mul(Z, mat_mul(Z, X.transpose(), J), X);
    res.defect_valuations.push_back(matrix_valuation(S, Z));
    if (is_zero_matrix(Z, S)) break;
    auto Minv = inverse(Z, mat_mul(Z, mat_mul(Z, X.transpose(), J), Zc));
    auto Cc = mat_mul(Z, Minv, S);
    for (std::size_t i = 0; i < Cc.rows(); ++i)
      for (std::size_t j = 0; j < Cc.cols(); ++j) Cc(i, j) = -(Cc(i, j) * half);
    auto dX = mat_mul(Z, Zc, Cc);
    for (std::size_t i = 0; i < X.rows(); ++i)
      for (std::size_t j = 0; j < X.cols(); ++j) X(i, j) = X(i, j) + dX(i, j);
  }

  auto Afull = hcat(res.L, mat_mul(Z, C, X), Z.zero());
  auto e = rref(Z, Afull.transpose());
  res.summand = e.split && e.pivots.size() == 10;
  auto A = res.summand ? canonical_column_basis(Z, Afull) : Afull;
  res.isotropic = is_isotropic(Z, A);
  try {
    Matrix<Zpk> negE5 = E5;
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = 0; j < 10; ++j) negE5(i, j) = -negE5(i, j);
    auto inter = kernel(Z, hcat(A, negE5, Z.zero()));
    if (inter.size() == l) {
      Matrix<Zpk> I(20, l, Z.zero());
      for (std::size_t j = 0; j < l; ++j) {
        std::vector<Zpk> c(inter[j].begin() + 10, inter[j].end());
        auto v = mat_vec(Z, E5, c);
        for (std::size_t i = 0; i < 20; ++i) I(i, j) = v[i];
      }
      res.intersection_ok = l == 0 || same_column_span(Z, I, res.L);
    }
  } catch (const std::domain_error&) {
    res.intersection_ok = false;
  }
  res.reduction_ok = res.summand && same_column_span(F, reduce(A, F), D.A);
  res.datum = {D.n, V5, Z.from_int(static_cast<long long>(D.eps.v)), A};
  return res;
}

auto lift_suite(std::uint32_t p, unsigned k, std::size_t trials, std::uint64_t seed) -> LiftStats {
  const auto& F = FiniteField::get(p);
  std::mt19937_64 rng(seed);
  LiftStats st{p, k, 0, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    ++st.trials;
    try {
      int n = 3 + static_cast<int>(t % 3);
      auto L = gm_to_lagrangian(F, random_gm_datum(F, n, rng, t % 2 == 1));
      if (lift_lagrangian(L, k).passed()) ++st.passed;
    } catch (const std::exception& ex) {
      if (st.errors.size() < 5) st.errors.push_back(ex.what());
    }
  }
  return st;
}

} // namespace gmlab::gm
