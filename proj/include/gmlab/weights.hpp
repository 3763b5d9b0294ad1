#pragma once

#include "gmlab/exact/integer.hpp"

#include <array>
#include <string>
#include <utility>

namespace gmlab {

using Vec5 = std::array<long, 5>;

inline constexpr Vec5 kRho{2, 1, 0, -1, -2};

auto vec_add(const Vec5& a, const Vec5& b) -> Vec5;
auto vec_sub(const Vec5& a, const Vec5& b) -> Vec5;
auto vec_scale(long c, const Vec5& a) -> Vec5;
auto vec_string(const Vec5& a) -> std::string;

// Character of the maximal torus of SL5, stored as the representative with
// minimum entry 0.
class Weight {
 public:
  Weight() = default;
  explicit Weight(const Vec5& raw);

  [[nodiscard]] auto rep() const -> const Vec5& { return a_; }
  [[nodiscard]] auto operator[](std::size_t i) const -> long { return a_[i]; }
  [[nodiscard]] auto is_dominant() const -> bool;
  [[nodiscard]] auto is_zero() const -> bool;
  [[nodiscard]] auto to_string() const -> std::string { return vec_string(a_); }

  friend auto operator+(const Weight& x, const Weight& y) -> Weight { return Weight(vec_add(x.a_, y.a_)); }
  friend auto operator-(const Weight& x, const Weight& y) -> Weight { return Weight(vec_sub(x.a_, y.a_)); }
  friend auto operator==(const Weight&, const Weight&) -> bool = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  Vec5 a_{};
};

// Permutation of {1..5}; w(i) is stored 0-based as perm()[i-1].
class WeylElem {
 public:
  WeylElem();
  explicit WeylElem(const std::array<int, 5>& perm);
  // Cycle notation such as "(1 2 4)(3 5)"; "id" or "" is the identity.
  static auto parse(const std::string& cycles) -> WeylElem;

  [[nodiscard]] auto perm() const -> const std::array<int, 5>& { return p_; }
  [[nodiscard]] auto length() const -> int { return len_; }
  [[nodiscard]] auto sign() const -> int { return len_ % 2 == 0 ? 1 : -1; }
  [[nodiscard]] auto inverse() const -> WeylElem;
  // Entry v_i moves to position w(i).
  [[nodiscard]] auto apply(const Vec5& v) const -> Vec5;
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator*(const WeylElem& x, const WeylElem& y) -> WeylElem;
  friend auto operator==(const WeylElem& x, const WeylElem& y) -> bool { return x.p_ == y.p_; }

 private:
  std::array<int, 5> p_{};
  int len_ = 0;
};

// <lambda, e_i - e_j> with 1-based indices.
auto pairing(const Weight& lambda, int i, int j) -> long;
auto pairing(const Vec5& lambda, int i, int j) -> long;
auto dot_act(const WeylElem& w, const Weight& lambda) -> Weight;
auto dot_act_raw(const WeylElem& w, const Vec5& lambda) -> Vec5;

struct SortingWord {
  WeylElem w;
  Vec5 v;  // w(lambda + rho), weakly decreasing
};
auto sorting_word(const Vec5& lambda) -> SortingWord;
inline auto sorting_word(const Weight& lambda) -> SortingWord { return sorting_word(lambda.rep()); }

// Weyl dimension formula; throws std::invalid_argument on non-dominant input.
auto weyl_dim(const Weight& mu) -> Int;

} // namespace gmlab
