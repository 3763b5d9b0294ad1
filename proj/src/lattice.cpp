#include "gmlab/lattice.hpp"

#include <optional>
#include <sstream>

namespace gmlab::lat {

auto GramLattice::det() const -> Int { return det_bareiss(G); }

auto GramLattice::is_even() const -> bool {
  for (std::size_t i = 0; i < G.rows(); ++i)
    if (G(i, i) % 2 != 0) return false;
  return true;
}

auto make_lattice(IntMatrix G, std::string name) -> GramLattice {
  if (G.rows() != G.cols()) throw std::invalid_argument("Gram matrix must be square");
  for (std::size_t i = 0; i < G.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (G(i, j) != G(j, i)) throw std::invalid_argument("Gram matrix must be symmetric");
  GramLattice L{std::move(G), std::move(name)};
  if (L.det() == 0) throw Degenerate("degenerate form on " + L.name);
  return L;
}

auto e8(int sign) -> GramLattice {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
  const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  IntMatrix G(8, 8, Int(0));
  for (std::size_t i = 0; i < 8; ++i) G(i, i) = 2 * sign;
  for (const auto& e : edges) G(e[0] - 1, e[1] - 1) = G(e[1] - 1, e[0] - 1) = -sign;
  return make_lattice(G, sign > 0 ? "E8" : "E8(-1)");
}

auto hyperbolic() -> GramLattice { return make_lattice(int_matrix({{0, 1}, {1, 0}}), "U"); }

auto I(long n) -> GramLattice { return make_lattice(int_matrix({{n}}), "I(" + std::to_string(n) + ")"); }

auto direct_sum(const std::vector<GramLattice>& parts) -> GramLattice {
  std::size_t r = 0;
  for (const auto& p : parts) r += p.rank();
  IntMatrix G(r, r, Int(0));
  std::string name;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) G(off + i, off + j) = p.G(i, j);
    off += p.rank();
    name += (name.empty() ? "" : " + ") + p.name;
  }
  return make_lattice(G, name);
}

auto power(const GramLattice& L, int k) -> GramLattice {
  auto S = direct_sum(std::vector<GramLattice>(static_cast<std::size_t>(k), L));
  S.name = L.name + "^" + std::to_string(k);
  return S;
}

auto twist(const GramLattice& L, long c) -> GramLattice {
  IntMatrix G = L.G;
  for (std::size_t i = 0; i < G.rows(); ++i)
    for (std::size_t j = 0; j < G.cols(); ++j) G(i, j) *= c;
  return make_lattice(G, "(" + L.name + ")(" + std::to_string(c) + ")");
}

auto gm6_lattice() -> GramLattice { return direct_sum({power(e8(-1), 2), power(hyperbolic(), 2), power(I(-2), 2)}); }

auto h6_lattice() -> GramLattice { return direct_sum({power(e8(-1), 2), power(hyperbolic(), 4)}); }

auto DiscriminantGroup::order() const -> Int {
  Int o = 1;
  for (const auto& d : divisors) o *= d;
  return o;
}

auto DiscriminantGroup::to_string() const -> std::string {
  if (divisors.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < divisors.size();) {
    std::size_t j = i;
    while (j < divisors.size() && divisors[j] == divisors[i]) ++j;
    if (i) os << " + ";
    os << "(Z/" << gmlab::to_string(divisors[i]) << ")";
    if (j - i > 1) os << "^" << j - i;
    i = j;
  }
  return os.str();
}

auto mod1(const Rat& x) -> Rat {
  Rat f = x - Rat(floor_div(x.get_num(), x.get_den()));
  f.canonicalize();
  return f;
}

namespace {

auto mod2(const Rat& x) -> Rat { return 2 * mod1(x / 2); }

auto bilinear_q(const IntMatrix& G, const std::vector<Rat>& x, const std::vector<Rat>& y) -> Rat {
  Rat s = 0;
  for (std::size_t i = 0; i < G.rows(); ++i)
    for (std::size_t j = 0; j < G.cols(); ++j) s += x[i] * Rat(G(i, j)) * y[j];
  return s;
}

} // namespace

auto discriminant_group(const GramLattice& L) -> DiscriminantGroup {
  if (L.det() == 0) throw Degenerate("degenerate lattice");
  auto s = snf(L.G);
  DiscriminantGroup D;
  const std::size_t r = L.rank();
  // D = P G Q, so L^dual = G^{-1} Z^r = Q D^{-1} Z^r.
  for (std::size_t i = 0; i < r; ++i) {
    Int d = abs(s.diagonal[i]);
    if (d == 1) continue;
    std::vector<Rat> g(r);
    for (std::size_t k = 0; k < r; ++k) {
      g[k] = Rat(s.Q(k, i)) / Rat(d);
      g[k].canonicalize();
    }
    D.divisors.push_back(d);
    D.gens.push_back(g);
  }
  for (const auto& gi : D.gens) {
    std::vector<Rat> row;
    for (const auto& gj : D.gens) row.push_back(mod1(bilinear_q(L.G, gi, gj)));
    D.pairing.push_back(row);
    D.quadratic.push_back(mod2(bilinear_q(L.G, gi, gi)));
  }
  return D;
}

auto signature(const GramLattice& L) -> std::pair<std::size_t, std::size_t> {
  const std::size_t r = L.rank();
  std::vector<std::vector<Rat>> M(r, std::vector<Rat>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) M[i][j] = Rat(L.G(i, j));
  std::vector<char> done(r, 0);
  std::size_t pos = 0, neg = 0;
  for (std::size_t step = 0; step < r; ++step) {
    std::size_t piv = r;
    for (std::size_t i = 0; i < r && piv == r; ++i)
      if (!done[i] && M[i][i] != 0) piv = i;
    if (piv == r) {
      // Zero diagonal: e_i + e_j has square 2 b(e_i, e_j) != 0.
      std::size_t a = r, b = r;
      for (std::size_t i = 0; i < r && a == r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!done[i] && !done[j] && i != j && M[i][j] != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == r) throw Degenerate("degenerate form in signature");
      for (std::size_t k = 0; k < r; ++k) M[a][k] += M[b][k];
      for (std::size_t k = 0; k < r; ++k) M[k][a] += M[k][b];
      piv = a;
    }
    const Rat d = M[piv][piv];
    (d > 0 ? pos : neg) += 1;
    done[piv] = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (done[i] || M[i][piv] == 0) continue;
      const Rat f = M[i][piv] / d;
      for (std::size_t k = 0; k < r; ++k) M[i][k] -= f * M[piv][k];
    }
    for (std::size_t k = 0; k < r; ++k)
      if (!done[k]) M[k][piv] = M[piv][k] = 0;
  }
  return {pos, neg};
}

auto pair(const GramLattice& L, const std::vector<Int>& x, const std::vector<Int>& y) -> Int {
  Int s = 0;
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t j = 0; j < L.rank(); ++j) s += x[i] * L.G(i, j) * y[j];
  return s;
}

auto is_primitive(const IntMatrix& S) -> bool {
  auto s = snf(S);
  for (std::size_t i = 0; i < S.cols(); ++i)
    if (i >= s.diagonal.size() || abs(s.diagonal[i]) != 1) return false;
  return true;
}

auto gram_of(const GramLattice& L, const IntMatrix& B) -> IntMatrix {
  return int_mul(int_mul(B.transpose(), L.G), B);
}

auto orthogonal_complement(const GramLattice& L, const IntMatrix& S) -> Complement {
  if (S.rows() != L.rank()) throw std::invalid_argument("sublattice basis has the wrong length");
  if (!is_primitive(S)) throw NotPrimitive("sublattice is not primitive");
  // Left kernel of (S^t G)^t via the row HNF: H = U M, zero rows of H give
  // a saturated basis in the matching rows of U.
  IntMatrix M = int_mul(L.G, S);
  auto h = hnf(M);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < h.H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.H.cols(); ++j) zero = zero && h.H(i, j) == 0;
    if (zero) rows.push_back(i);
  }
  IntMatrix B(L.rank(), rows.size(), Int(0));
  for (std::size_t c = 0; c < rows.size(); ++c)
    for (std::size_t i = 0; i < L.rank(); ++i) B(i, c) = h.U(rows[c], i);
  return {B, make_lattice(gram_of(L, B), "complement in " + L.name)};
}

auto i2_embedding() -> IntMatrix {
  // e, f of the third and fourth U summand sit at 16+4, 16+5 and 16+6, 16+7.
  IntMatrix S(24, 2, Int(0));
  S(20, 0) = S(21, 0) = 1;
  S(22, 1) = S(23, 1) = 1;
  return S;
}

auto complement_basis() -> IntMatrix {
  IntMatrix B(24, 22, Int(0));
  for (std::size_t i = 0; i < 20; ++i) B(i, i) = 1;
  B(20, 20) = 1;
  B(21, 20) = -1;
  B(22, 21) = 1;
  B(23, 21) = -1;
  return B;
}

auto LatticeReport::passed() const -> bool {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

auto sig_string(std::pair<std::size_t, std::size_t> s) -> std::string {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

// x with basis * x = b, if x is integral.
auto integral_coordinates(const IntMatrix& basis, const std::vector<Int>& b) -> std::optional<std::vector<Int>> {
  IntMatrix A = hcat(basis, IntMatrix(basis.rows(), 1, Int(0)), Int(0));
  for (std::size_t i = 0; i < basis.rows(); ++i) A(i, basis.cols()) = b[i];
  for (const auto& v : kernel_over(A, FieldDesc::rationals())) {
    if (v[basis.cols()] == 0) continue;
    std::vector<Int> x;
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      Rat c = -v[k] / v[basis.cols()];
      c.canonicalize();
      if (c.get_den() != 1) return std::nullopt;
      x.push_back(c.get_num());
    }
    return x;
  }
  return std::nullopt;
}

auto is_two_torsion_sign_free(const DiscriminantGroup& D) -> bool {
  for (const auto& row : D.pairing)
    for (const auto& x : row)
      if (mod1(x) != mod1(-x)) return false;
  return true;
}

} // namespace

auto verify_gm_lattice_facts() -> LatticeReport {
  LatticeReport r;
  auto add = [&](std::string name, bool ok, std::string detail) { r.checks.push_back({std::move(name), ok, std::move(detail)}); };
  auto E = e8(-1);
  add("E8(-1) even, det 1, signature (0,8)", E.is_even() && E.det() == 1 && signature(E) == std::make_pair<std::size_t, std::size_t>(0, 8),
      "det " + gmlab::to_string(E.det()) + ", signature " + sig_string(signature(E)));
  auto L = gm6_lattice();
  add("rank(L) = 22", L.rank() == 22, std::to_string(L.rank()));
  r.signature_L = signature(L);
  r.signature_L_twisted = signature(twist(L, -1));
  add("signature(L) = (20,2)", r.signature_L == std::make_pair<std::size_t, std::size_t>(20, 2),
      "Gram of L gives " + sig_string(r.signature_L) + "; L(-1) gives " + sig_string(r.signature_L_twisted));
  add("signature(L(-1)) = (20,2)", r.signature_L_twisted == std::make_pair<std::size_t, std::size_t>(20, 2),
      sig_string(r.signature_L_twisted));
  auto D = discriminant_group(L);
  add("Discr(L) = (Z/2)^2", D.divisors == std::vector<Int>{2, 2}, D.to_string());
  add("|Discr(L)| = |det L|", D.order() == abs(L.det()), gmlab::to_string(L.det()));
  add("Discr(L) pairing is sign-insensitive", is_two_torsion_sign_free(D), "killed by 2");
  auto H = h6_lattice();
  add("rank(E8(-1)^2 + U^4) = 24", H.rank() == 24, std::to_string(H.rank()));
  auto S = i2_embedding();
  auto SG = gram_of(H, S);
  add("embedding has Gram I(2)^2", SG == int_matrix({{2, 0}, {0, 2}}) && is_primitive(S), "e+f in two U summands");
  auto C = orthogonal_complement(H, S);
  auto B = complement_basis();
  bool congruent = C.basis.cols() == 22 && is_zero_matrix(Integers{}, int_mul(int_mul(S.transpose(), H.G), B));
  if (congruent) {
    // B spans the complement iff its coordinates in C.basis are integral and unimodular.
    IntMatrix coords(22, 22, Int(0));
    for (std::size_t j = 0; j < 22 && congruent; ++j) {
      auto x = integral_coordinates(C.basis, B.col(j));
      if (!x) congruent = false;
      else
        for (std::size_t k = 0; k < 22; ++k) coords(k, j) = (*x)[k];
    }
    congruent = congruent && abs(det_bareiss(coords)) == 1 && gram_of(H, B) == L.G;
  }
  add("complement of I(2)^2 is Gram-congruent to L", congruent, "constructed basis: E8 parts, two U summands, e-f twice");
  auto DC = discriminant_group(C.lattice);
  add("Discr(complement) = (Z/2)^2", DC.divisors == std::vector<Int>{2, 2}, DC.to_string());
  return r;
}

} // namespace gmlab::lat
