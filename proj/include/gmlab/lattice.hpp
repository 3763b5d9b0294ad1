#pragma once

#include "gmlab/exact/int_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmlab::lat {

class Degenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotPrimitive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GramLattice {
  IntMatrix G;
  std::string name;
  [[nodiscard]] auto rank() const -> std::size_t { return G.rows(); }
  [[nodiscard]] auto det() const -> Int;
  [[nodiscard]] auto is_even() const -> bool;
};

auto make_lattice(IntMatrix G, std::string name) -> GramLattice;
auto e8(int sign) -> GramLattice;  // E8(sign), sign = +-1
auto hyperbolic() -> GramLattice;  // U
auto I(long n) -> GramLattice;     // Z with b(1,1) = n
auto direct_sum(const std::vector<GramLattice>& parts) -> GramLattice;
auto power(const GramLattice& L, int k) -> GramLattice;
auto twist(const GramLattice& L, long c) -> GramLattice;  // L(c)

// E8(-1)^2 + U^2 + I(-2)^2
auto gm6_lattice() -> GramLattice;
// E8(-1)^2 + U^4
auto h6_lattice() -> GramLattice;

struct DiscriminantGroup {
  std::vector<Int> divisors;              // invariant factors > 1
  std::vector<std::vector<Rat>> gens;     // generators in L tensor Q (coordinates)
  std::vector<std::vector<Rat>> pairing;  // b(g_i, g_j) mod 1 in [0, 1)
  std::vector<Rat> quadratic;             // b(g_i, g_i) mod 2 in [0, 2)
  [[nodiscard]] auto order() const -> Int;
  [[nodiscard]] auto to_string() const -> std::string;  // "(Z/2)^2"
};

auto mod1(const Rat& x) -> Rat;
auto discriminant_group(const GramLattice& L) -> DiscriminantGroup;
auto signature(const GramLattice& L) -> std::pair<std::size_t, std::size_t>;
// Bilinear form on column vectors.
auto pair(const GramLattice& L, const std::vector<Int>& x, const std::vector<Int>& y) -> Int;
auto is_primitive(const IntMatrix& S) -> bool;
// Basis (columns) of {x : b(x, S) = 0} and its Gram matrix.
struct Complement {
  IntMatrix basis;
  GramLattice lattice;
};
auto orthogonal_complement(const GramLattice& L, const IntMatrix& S) -> Complement;
// Gram matrix of the columns of B.
auto gram_of(const GramLattice& L, const IntMatrix& B) -> IntMatrix;

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};
struct LatticeReport {
  std::vector<Check> checks;
  std::pair<std::size_t, std::size_t> signature_L{};
  std::pair<std::size_t, std::size_t> signature_L_twisted{};
  [[nodiscard]] auto passed() const -> bool;
};
// The embedding I(2)^2 -> E8(-1)^2 + U^4 via e+f in the last two U summands.
auto i2_embedding() -> IntMatrix;
// The explicit basis of the complement: E8 parts, first two U summands, e-f.
auto complement_basis() -> IntMatrix;
auto verify_gm_lattice_facts() -> LatticeReport;

} // namespace gmlab::lat
