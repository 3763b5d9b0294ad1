#pragma once

#include "gmlab/exact/matrix.hpp"

#include <cstdint>
#include <vector>

namespace gmlab {

using IntMatrix = Matrix<Int>;

auto int_matrix(const std::vector<std::vector<long long>>& rows) -> IntMatrix;
auto int_identity(std::size_t n) -> IntMatrix;
auto int_mul(const IntMatrix& a, const IntMatrix& b) -> IntMatrix;

struct HnfResult {
  IntMatrix H;
  IntMatrix U;  // unimodular, H = U * M
};

// Row-style Hermite normal form: positive pivots, entries above each pivot
// reduced into [0, pivot).
auto hnf(const IntMatrix& m) -> HnfResult;

struct SnfResult {
  IntMatrix D;
  IntMatrix P;  // unimodular, D = P * M * Q
  IntMatrix Q;  // unimodular
  std::vector<Int> diagonal;  // d_1 | d_2 | ..., nonnegative
};

auto snf(const IntMatrix& m) -> SnfResult;

// Fraction-free (Bareiss) determinant and rank over Q.
auto det_bareiss(const IntMatrix& m) -> Int;
auto rank_bareiss(const IntMatrix& m) -> std::size_t;

struct FieldDesc {
  std::uint32_t p = 0;  // 0 for Q
  static auto rationals() -> FieldDesc { return {}; }
  static auto prime(std::uint32_t p) -> FieldDesc;
};

auto rank_over(const IntMatrix& m, FieldDesc f) -> std::size_t;
// Echelonized kernel basis; over F_p entries are residues in [0, p).
auto kernel_over(const IntMatrix& m, FieldDesc f) -> std::vector<std::vector<Rat>>;

auto reduce_mod(const IntMatrix& m, const FiniteField& f) -> Matrix<Fq>;

} // namespace gmlab
