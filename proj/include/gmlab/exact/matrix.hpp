#pragma once

#include "gmlab/exact/rings.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gmlab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), d_(rows * cols, fill) {}

  static auto from_rows(const std::vector<std::vector<T>>& rows, const T& fill) -> Matrix {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c, fill);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static auto from_cols(const std::vector<std::vector<T>>& cols, std::size_t nrows, const T& fill) -> Matrix {
    Matrix m(nrows, cols.size(), fill);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != nrows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  [[nodiscard]] auto rows() const -> std::size_t { return r_; }
  [[nodiscard]] auto cols() const -> std::size_t { return c_; }
  auto operator()(std::size_t i, std::size_t j) -> T& { return d_[i * c_ + j]; }
  auto operator()(std::size_t i, std::size_t j) const -> const T& { return d_[i * c_ + j]; }

  [[nodiscard]] auto row(std::size_t i) const -> std::vector<T> {
    return std::vector<T>(d_.begin() + static_cast<std::ptrdiff_t>(i * c_),
                          d_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
  }
  [[nodiscard]] auto col(std::size_t j) const -> std::vector<T> {
    std::vector<T> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  [[nodiscard]] auto transpose() const -> Matrix {
    if (d_.empty()) return Matrix{c_, r_};
    Matrix t(c_, r_, d_[0]);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  friend auto operator==(const Matrix& a, const Matrix& b) -> bool {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }
  [[nodiscard]] auto data() const -> const std::vector<T>& { return d_; }

 private:
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c) {}
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

template <Ring R>
auto identity_matrix(const R& ring, std::size_t n) -> Matrix<typename R::value_type> {
  Matrix<typename R::value_type> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <Ring R>
auto mat_mul(const R& ring, const Matrix<typename R::value_type>& a, const Matrix<typename R::value_type>& b)
    -> Matrix<typename R::value_type> {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<typename R::value_type> c(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  return c;
}

template <Ring R>
auto mat_vec(const R& ring, const Matrix<typename R::value_type>& a, const std::vector<typename R::value_type>& x)
    -> std::vector<typename R::value_type> {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<typename R::value_type> y(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = y[i] + a(i, j) * x[j];
  return y;
}

template <Ring R>
auto is_zero_matrix(const R& ring, const Matrix<typename R::value_type>& a) -> bool {
  for (const auto& x : a.data())
    if (!ring.is_zero(x)) return false;
  return true;
}

// Horizontal concatenation.
template <class T>
auto hcat(const Matrix<T>& a, const Matrix<T>& b, const T& fill) -> Matrix<T> {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols(), fill);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <class R>
struct Echelon {
  Matrix<typename R::value_type> reduced;  // reduced row echelon form, unit pivots scaled to 1
  std::vector<std::size_t> pivots;         // pivot column of each leading row
  bool split = true;                       // false: some row survives with only non-unit entries
};

// Reduced row echelon form pivoting on units. Over a field this is ordinary
// RREF; over Z/p^k the pivot columns are those of the reduction mod p, and a
// non-split flag reports a row space that is not a direct summand.
template <LocalRing R>
auto rref(const R& ring, Matrix<typename R::value_type> m) -> Echelon<R> {
  Echelon<R> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t i = r; i < m.rows(); ++i)
      if (ring.is_unit(m(i, c))) {
        piv = i;
        break;
      }
    if (!piv) continue;
    m.swap_rows(r, *piv);
    auto inv = ring.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || ring.is_zero(m(i, c))) continue;
      auto f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.rows() && out.split; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ring.is_zero(m(i, j))) {
        out.split = false;
        break;
      }
  out.reduced = std::move(m);
  return out;
}

template <LocalRing R>
auto rank(const R& ring, const Matrix<typename R::value_type>& m) -> std::size_t {
  return rref(ring, m).pivots.size();
}

// Basis of the right kernel, one vector per free column, in column order.
template <LocalRing R>
auto kernel(const R& ring, const Matrix<typename R::value_type>& m) -> std::vector<std::vector<typename R::value_type>> {
  auto e = rref(ring, m);
  if (!e.split) throw std::domain_error("kernel: matrix does not have split rank");
  std::vector<char> is_piv(m.cols(), 0);
  for (auto c : e.pivots) is_piv[c] = 1;
  std::vector<std::vector<typename R::value_type>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<typename R::value_type> v(m.cols(), ring.zero());
    v[f] = ring.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m x = b; nullopt when inconsistent.
template <LocalRing R>
auto solve(const R& ring, const Matrix<typename R::value_type>& m, const std::vector<typename R::value_type>& b)
    -> std::optional<std::vector<typename R::value_type>> {
  Matrix<typename R::value_type> aug(m.rows(), m.cols() + 1, ring.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  // Eliminate only on the coefficient columns.
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t i = r; i < m.rows(); ++i)
      if (ring.is_unit(aug(i, c))) {
        piv = i;
        break;
      }
    if (!piv) continue;
    aug.swap_rows(r, *piv);
    auto inv = ring.inv(aug(r, c));
    for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) = aug(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || ring.is_zero(aug(i, c))) continue;
      auto f = aug(i, c);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(i, j) = aug(i, j) - f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ring.is_zero(aug(i, j))) throw std::domain_error("solve: matrix does not have split rank");
    if (!ring.is_zero(aug(i, m.cols()))) return std::nullopt;
  }
  std::vector<typename R::value_type> x(m.cols(), ring.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

template <LocalRing R>
auto inverse(const R& ring, const Matrix<typename R::value_type>& m) -> Matrix<typename R::value_type> {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto e = rref(ring, hcat(m, identity_matrix(ring, m.rows()), ring.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i >= e.pivots.size() || e.pivots[i] != i) throw std::domain_error("matrix not invertible");
  Matrix<typename R::value_type> inv(m.rows(), m.rows(), ring.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) inv(i, j) = e.reduced(i, m.rows() + j);
  return inv;
}

// Canonical basis (as columns) of the column span of a split-rank matrix.
template <LocalRing R>
auto canonical_column_basis(const R& ring, const Matrix<typename R::value_type>& m) -> Matrix<typename R::value_type> {
  auto e = rref(ring, m.transpose());
  if (!e.split) throw std::domain_error("column span is not a direct summand");
  Matrix<typename R::value_type> b(m.rows(), e.pivots.size(), ring.zero());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = e.reduced(k, i);
  return b;
}

template <LocalRing R>
auto same_column_span(const R& ring, const Matrix<typename R::value_type>& a, const Matrix<typename R::value_type>& b)
    -> bool {
  return canonical_column_basis(ring, a) == canonical_column_basis(ring, b);
}

// Determinant by cofactor-free Gaussian elimination over a local ring.
template <LocalRing R>
auto determinant(const R& ring, Matrix<typename R::value_type> m) -> typename R::value_type {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  auto det = ring.one();
  for (std::size_t c = 0; c < m.rows(); ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t i = c; i < m.rows(); ++i)
      if (ring.is_unit(m(i, c))) {
        piv = i;
        break;
      }
    if (!piv) {
      bool all_zero = true;
      for (std::size_t i = c; i < m.rows(); ++i) all_zero = all_zero && ring.is_zero(m(i, c));
      if (all_zero) return ring.zero();
      throw std::domain_error("determinant: no unit pivot");
    }
    if (*piv != c) {
      m.swap_rows(c, *piv);
      det = -det;
    }
    det = det * m(c, c);
    auto inv = ring.inv(m(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (ring.is_zero(m(i, c))) continue;
      typename R::value_type f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

} // namespace gmlab
